"""Forward-chaining fixpoint over ground literals with classical negation.

Negative literals are ordinary facts of opposite polarity: a negative body
literal only matches a negative literal that was stated or derived. A query
is answered under the open-world reading, so "not derivable" is Unknown.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator

from .ir import Const, LpLiteral, LpProgram, LpRule, ResourceOut, SolverError, Term, TruthLabel, Var

Key = tuple[bool, str]
Row = tuple[Term, ...]


class Contradiction(SolverError):
    kind = "contradiction"

    def __init__(self, literal: LpLiteral):
        super().__init__(f"both {literal} and its complement are derivable")
        self.literal = literal


@dataclass(frozen=True)
class LpLimits:
    max_atoms: int = 100_000
    max_seconds: float = 10.0


class _Store:
    def __init__(self, limits: LpLimits):
        self.rows: dict[Key, set[Row]] = {}
        self.count = 0
        self.limits = limits
        self.deadline = time.monotonic() + limits.max_seconds

    def __contains__(self, lit: LpLiteral) -> bool:
        return lit.args in self.rows.get((lit.positive, lit.predicate), ())

    def add(self, lit: LpLiteral) -> bool:
        bucket = self.rows.setdefault((lit.positive, lit.predicate), set())
        if lit.args in bucket:
            return False
        if lit.complement() in self:
            raise Contradiction(lit)
        bucket.add(lit.args)
        self.count += 1
        if self.count > self.limits.max_atoms:
            raise ResourceOut(f"more than {self.limits.max_atoms} derived literals")
        return True

    def tick(self) -> None:
        if time.monotonic() > self.deadline:
            raise ResourceOut("fixpoint time limit reached")

    def literals(self) -> frozenset[LpLiteral]:
        return frozenset(
            LpLiteral(pos, pred, args) for (pos, pred), rows in self.rows.items() for args in rows
        )


def _match(pattern: LpLiteral, row: Row, binding: dict[str, Term]) -> dict[str, Term] | None:
    out = binding
    for p, value in zip(pattern.args, row):
        if isinstance(p, Var):
            bound = out.get(p.name)
            if bound is None:
                if out is binding:
                    out = dict(binding)
                out[p.name] = value
            elif bound != value:
                return None
        elif p != value:
            return None
    return out


def _join(
    body: tuple[LpLiteral, ...],
    sources: list[dict[Key, set[Row]]],
    binding: dict[str, Term],
    i: int = 0,
) -> Iterator[dict[str, Term]]:
    if i == len(body):
        yield binding
        return
    lit = body[i]
    for row in sources[i].get((lit.positive, lit.predicate), ()):
        extended = _match(lit, row, binding)
        if extended is not None:
            yield from _join(body, sources, extended, i + 1)


def _instantiate(head: LpLiteral, binding: dict[str, Term]) -> LpLiteral:
    args = tuple(binding[a.name] if isinstance(a, Var) else a for a in head.args)
    return LpLiteral(head.positive, head.predicate, args)


def _fire(rule: LpRule, sources: list[dict[Key, set[Row]]]) -> list[LpLiteral]:
    return [_instantiate(rule.head, b) for b in _join(rule.body, sources, {})]


def fixpoint(
    program: LpProgram,
    limits: LpLimits = LpLimits(),
    *,
    strategy: str = "semi-naive",
) -> frozenset[LpLiteral]:
    """Least set of ground literals containing the facts and closed under the rules.

    ``strategy`` is ``"semi-naive"`` (each round joins at least one literal
    derived in the previous round) or ``"naive"`` (every round re-joins
    everything). Both compute the same set.
    """
    if strategy not in ("semi-naive", "naive"):
        raise ValueError(f"unknown strategy {strategy!r}")
    store = _Store(limits)
    delta: dict[Key, set[Row]] = {}
    for fact in program.facts:
        if store.add(fact):
            delta.setdefault((fact.positive, fact.predicate), set()).add(fact.args)

    while delta:
        store.tick()
        # snapshot so rows added this round are not seen until the next one
        full = {k: set(v) for k, v in store.rows.items()}
        derived: list[LpLiteral] = []
        for rule in program.rules:
            n = len(rule.body)
            if strategy == "naive":
                derived += _fire(rule, [full] * n)
                continue
            for i in range(n):
                b = rule.body[i]
                if (b.positive, b.predicate) not in delta:
                    continue
                sources = [full] * n
                sources[i] = delta
                derived += _fire(rule, sources)
        delta = {}
        for lit in derived:
            if store.add(lit):
                delta.setdefault((lit.positive, lit.predicate), set()).add(lit.args)
    return store.literals()


def answer(program: LpProgram, limits: LpLimits = LpLimits()) -> TruthLabel:
    """True if the query is derived, False if its complement is, else Unknown."""
    derived = fixpoint(program, limits)
    if program.query in derived:
        return TruthLabel.TRUE
    if program.query.complement() in derived:
        return TruthLabel.FALSE
    return TruthLabel.UNKNOWN


def literal_bound(program: LpProgram) -> int:
    """Upper bound on the size of any fixpoint: both polarities of every ground atom."""
    constants: set[Term] = set()
    arity: dict[str, int] = {}
    lits = [*program.facts, program.query]
    for r in program.rules:
        lits += [r.head, *r.body]
    for lit in lits:
        arity[lit.predicate] = len(lit.args)
        constants |= {a for a in lit.args if isinstance(a, Const)}
    widest = max(arity.values(), default=0)
    return len(arity) * max(len(constants), 1) ** widest * 2
