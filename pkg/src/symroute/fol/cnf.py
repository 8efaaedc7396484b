"""Clausal normal form: NNF, standardize apart, Skolemize, prenex, distribute."""

from __future__ import annotations

import itertools
from typing import Iterable, NamedTuple

from ..ir import (
    And,
    Atom,
    Const,
    Exists,
    ForAll,
    Formula,
    Func,
    Iff,
    Implies,
    Not,
    Or,
    ResourceOut,
    Term,
    Var,
    subformulas,
)
from .unify import substitute


class Literal(NamedTuple):
    positive: bool
    predicate: str
    args: tuple[Term, ...]

    def negated(self) -> Literal:
        return Literal(not self.positive, self.predicate, self.args)

    def __str__(self) -> str:
        sign = "" if self.positive else "~"
        if not self.args:
            return sign + self.predicate
        return f"{sign}{self.predicate}({', '.join(map(str, self.args))})"


Clause = frozenset  # of Literal; the empty clause is a contradiction


def clause_str(c: Clause) -> str:
    if not c:
        return "$false"
    return " | ".join(sorted(map(str, c)))


class CnfLimitError(ResourceOut):
    pass


MAX_NESTING = 200
MAX_CNF_CLAUSES = 100_000


class CnfConverter:
    """Converts closed formulas to clauses with a shared Skolem namespace.

    Reuse one converter for every formula of a task so Skolem symbols from
    different formulas never collide.
    """

    def __init__(self, reserved: Iterable[str] = (), max_clauses: int = MAX_CNF_CLAUSES):
        self.reserved = set(reserved)
        self.max_clauses = max_clauses
        self._skolem = itertools.count(1)
        self._fresh = itertools.count(1)

    def convert(self, f: Formula) -> list[Clause]:
        if _nesting(f) > MAX_NESTING:
            raise CnfLimitError(f"formula nesting exceeds {MAX_NESTING}")
        g = _nnf(f, True)
        g = self._standardize(g, {})
        g = self._skolemize(g, (), {})
        out: list[Clause] = []
        seen: set[Clause] = set()
        for clause in self._distribute(g):
            if _tautology(clause) or clause in seen:
                continue
            seen.add(clause)
            out.append(clause)
        return out

    def _standardize(self, f: Formula, renames: dict[str, str]) -> Formula:
        if isinstance(f, Atom):
            if not renames:
                return f
            s = {k: Var(v) for k, v in renames.items()}
            return Atom(f.predicate, tuple(substitute(a, s) for a in f.args))
        if isinstance(f, Not):
            return Not(self._standardize(f.body, renames))
        if isinstance(f, (And, Or)):
            return type(f)(self._standardize(f.left, renames), self._standardize(f.right, renames))
        if isinstance(f, (ForAll, Exists)):
            fresh = f"?{next(self._fresh)}"
            body = self._standardize(f.body, {**renames, f.var: fresh})
            return type(f)(fresh, body)
        raise TypeError(f"unexpected {type(f).__name__} after NNF")

    def _skolem_name(self) -> str:
        while True:
            name = f"sk{next(self._skolem)}"
            if name not in self.reserved:
                self.reserved.add(name)
                return name

    def _skolemize(self, f: Formula, universals: tuple[str, ...], s: dict[str, Term]) -> Formula:
        if isinstance(f, Atom):
            if not s:
                return f
            return Atom(f.predicate, tuple(substitute(a, s) for a in f.args))
        if isinstance(f, Not):
            return Not(self._skolemize(f.body, universals, s))
        if isinstance(f, (And, Or)):
            return type(f)(
                self._skolemize(f.left, universals, s), self._skolemize(f.right, universals, s)
            )
        if isinstance(f, ForAll):
            # prenex: the quantifier is dropped, its variable stays free (implicitly universal)
            return self._skolemize(f.body, universals + (f.var,), s)
        if isinstance(f, Exists):
            name = self._skolem_name()
            witness: Term = (
                Func(name, tuple(Var(u) for u in universals)) if universals else Const(name)
            )
            return self._skolemize(f.body, universals, {**s, f.var: witness})
        raise TypeError(f"unexpected {type(f).__name__}")

    def _distribute(self, f: Formula) -> list[Clause]:
        if isinstance(f, Atom):
            return [frozenset([Literal(True, f.predicate, f.args)])]
        if isinstance(f, Not):
            a = f.body
            assert isinstance(a, Atom)
            return [frozenset([Literal(False, a.predicate, a.args)])]
        if isinstance(f, And):
            return self._distribute(f.left) + self._distribute(f.right)
        if isinstance(f, Or):
            left, right = self._distribute(f.left), self._distribute(f.right)
            if len(left) * len(right) > self.max_clauses:
                raise CnfLimitError("clause expansion exceeds limit")
            return [c | d for c in left for d in right if not _tautology(c | d)]
        raise TypeError(f"unexpected {type(f).__name__}")


def to_cnf(f: Formula, reserved: Iterable[str] = ()) -> list[Clause]:
    """Equisatisfiable clause list for a closed formula."""
    return CnfConverter(reserved).convert(f)


def _nesting(f: Formula) -> int:
    depth, stack = 0, [(f, 1)]
    while stack:
        g, d = stack.pop()
        depth = max(depth, d)
        if isinstance(g, (Not, ForAll, Exists)):
            stack.append((g.body, d + 1))
        elif isinstance(g, (And, Or, Implies, Iff)):
            stack += [(g.left, d + 1), (g.right, d + 1)]
    return depth


def _nnf(f: Formula, positive: bool) -> Formula:
    if isinstance(f, Atom):
        return f if positive else Not(f)
    if isinstance(f, Not):
        return _nnf(f.body, not positive)
    if isinstance(f, And):
        cls = And if positive else Or
        return cls(_nnf(f.left, positive), _nnf(f.right, positive))
    if isinstance(f, Or):
        cls = Or if positive else And
        return cls(_nnf(f.left, positive), _nnf(f.right, positive))
    if isinstance(f, Implies):
        return _nnf(Or(Not(f.left), f.right), positive)
    if isinstance(f, Iff):
        if positive:
            return And(Or(_nnf(f.left, False), _nnf(f.right, True)),
                       Or(_nnf(f.right, False), _nnf(f.left, True)))
        return Or(And(_nnf(f.left, True), _nnf(f.right, False)),
                  And(_nnf(f.left, False), _nnf(f.right, True)))
    if isinstance(f, ForAll):
        cls = ForAll if positive else Exists
        return cls(f.var, _nnf(f.body, positive))
    if isinstance(f, Exists):
        cls = Exists if positive else ForAll
        return cls(f.var, _nnf(f.body, positive))
    raise TypeError(f"not a formula: {f!r}")


def _tautology(c: Clause) -> bool:
    return any(lit.negated() in c for lit in c)


def symbols(formulas: Iterable[Formula]) -> set[str]:
    """Every predicate and constant name used, for reserving Skolem names."""
    names: set[str] = set()
    for f in formulas:
        for g in subformulas(f):
            if isinstance(g, Atom):
                names.add(g.predicate)
                names.update(a.name for a in g.args if isinstance(a, Const))
    return names
