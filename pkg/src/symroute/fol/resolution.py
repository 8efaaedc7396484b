"""Given-clause saturation by binary resolution and factoring."""

from __future__ import annotations

import enum
import heapq
import itertools
import logging
import time
from dataclasses import dataclass
from typing import Iterable, Sequence

from ..ir import FolTask, Func, Not, ResourceOut, SolverError, Term, TruthLabel, Var, term_depth
from .cnf import Clause, CnfConverter, Literal, _tautology, symbols
from .unify import match, substitute, unify_terms

log = logging.getLogger(__name__)


class Status(enum.Enum):
    UNSAT = "Unsat"
    SATURATED = "Saturated"
    RESOURCE_OUT = "ResourceOut"


@dataclass(frozen=True)
class SaturationLimits:
    max_clauses: int = 100_000
    max_seconds: float = 10.0
    max_term_depth: int = 12

    def __post_init__(self) -> None:
        if self.max_clauses <= 0 or self.max_seconds <= 0 or self.max_term_depth <= 0:
            raise ValueError("saturation limits must be positive")


class InconsistentPremises(SolverError):
    kind = "inconsistent-premises"


def _rename(t: Term, names: dict[str, str], prefix: str) -> Term:
    if isinstance(t, Var):
        if t.name not in names:
            names[t.name] = f"{prefix}{len(names)}"
        return Var(names[t.name])
    if isinstance(t, Func):
        return Func(t.name, tuple(_rename(a, names, prefix) for a in t.args))
    return t


def _shape(t: Term) -> str:
    if isinstance(t, Var):
        return "_"
    if isinstance(t, Func):
        return f"{t.name}({','.join(_shape(a) for a in t.args)})"
    return t.name


def normalize(literals: Iterable[Literal]) -> Clause:
    """Deduplicate and rename variables canonically (V0, V1, ...)."""
    unique = set(literals)
    ordered = sorted(
        unique,
        key=lambda l: (l.predicate, l.positive, tuple(_shape(a) for a in l.args), str(l)),
    )
    names: dict[str, str] = {}
    return frozenset(
        Literal(l.positive, l.predicate, tuple(_rename(a, names, "V") for a in l.args))
        for l in ordered
    )


def rename_apart(c: Clause, prefix: str = "W") -> list[Literal]:
    names: dict[str, str] = {}
    return [
        Literal(l.positive, l.predicate, tuple(_rename(a, names, prefix) for a in l.args))
        for l in sorted(c, key=str)
    ]


def _apply(lits: Iterable[Literal], s: dict[str, Term]) -> list[Literal]:
    if not s:
        return list(lits)
    return [Literal(l.positive, l.predicate, tuple(substitute(a, s) for a in l.args)) for l in lits]


def _unify_args(a: Sequence[Term], b: Sequence[Term]) -> dict[str, Term] | None:
    s: dict[str, Term] = {}
    for x, y in zip(a, b):
        if not unify_terms(x, y, s):
            return None
    # resolve the triangular form so one application suffices
    resolved: dict[str, Term] = {}
    for k in s:
        t: Term = Var(k)
        for _ in range(len(s) + 1):
            nxt = substitute(t, s)
            if nxt == t:
                break
            t = nxt
        resolved[k] = t
    return resolved


def _term_size(t: Term) -> int:
    if isinstance(t, Func):
        return 1 + sum(_term_size(a) for a in t.args)
    return 1


def weight(c: Clause) -> int:
    """Symbol count: one per predicate plus one per term node."""
    return sum(1 + sum(_term_size(a) for a in l.args) for l in c)


def max_depth(c: Clause) -> int:
    return max((term_depth(a) for l in c for a in l.args), default=0)


def subsumes(c: Clause, d: Clause) -> bool:
    """True when some substitution maps every literal of ``c`` into ``d``."""
    if len(c) > len(d):
        return False
    if all(not _has_vars(l) for l in c):
        return c <= d
    candidates = []
    for lit in c:
        options = [m for m in d if m.positive == lit.positive and m.predicate == lit.predicate]
        if not options:
            return False
        candidates.append((lit, options))
    candidates.sort(key=lambda p: len(p[1]))

    def search(i: int, s: dict[str, Term]) -> bool:
        if i == len(candidates):
            return True
        lit, options = candidates[i]
        for m in options:
            trial = dict(s)
            if all(match(p, t, trial) for p, t in zip(lit.args, m.args)):
                if search(i + 1, trial):
                    return True
        return False

    return search(0, {})


def _has_vars(l: Literal) -> bool:
    def walk(t: Term) -> bool:
        if isinstance(t, Var):
            return True
        if isinstance(t, Func):
            return any(walk(a) for a in t.args)
        return False

    return any(walk(a) for a in l.args)


def factors(c: Clause) -> list[list[Literal]]:
    lits = sorted(c, key=str)
    out = []
    for i, j in itertools.combinations(range(len(lits)), 2):
        a, b = lits[i], lits[j]
        if a.positive != b.positive or a.predicate != b.predicate:
            continue
        s = _unify_args(a.args, b.args)
        if s is not None:
            out.append(_apply(lits, s))
    return out


def resolvents(given: Clause, partner: Clause) -> list[list[Literal]]:
    left = rename_apart(given, "W")
    right = sorted(partner, key=str)
    out = []
    for i, a in enumerate(left):
        for j, b in enumerate(right):
            if a.positive == b.positive or a.predicate != b.predicate:
                continue
            s = _unify_args(a.args, b.args)
            if s is None:
                continue
            rest = left[:i] + left[i + 1:] + right[:j] + right[j + 1:]
            out.append(_apply(rest, s))
    return out


def saturate(
    clauses: Iterable[Clause],
    limits: SaturationLimits = SaturationLimits(),
    *,
    subsumption: bool = True,
) -> Status:
    """Run the given-clause loop until refutation, saturation or a limit.

    Clauses are selected lightest first (symbol count, then arrival order).
    A clause deeper than ``limits.max_term_depth`` is dropped, after which
    running out of clauses means ``RESOURCE_OUT`` rather than ``SATURATED``.
    """
    deadline = time.monotonic() + limits.max_seconds
    seq = itertools.count()
    passive: list[tuple[int, int, Clause]] = []
    seen: set[Clause] = set()
    incomplete = False

    def offer(lits: Iterable[Literal]) -> bool:
        nonlocal incomplete
        c = normalize(lits)
        if not c:
            return True
        if _tautology(c) or c in seen:
            return False
        if max_depth(c) > limits.max_term_depth:
            incomplete = True
            return False
        seen.add(c)
        heapq.heappush(passive, (weight(c), next(seq), c))
        return False

    for c in clauses:
        if offer(c):
            return Status.UNSAT

    active: dict[int, Clause] = {}
    index: dict[tuple[bool, str], set[int]] = {}
    while passive:
        if time.monotonic() > deadline:
            return Status.RESOURCE_OUT
        _, _, given = heapq.heappop(passive)
        if subsumption:
            if any(subsumes(c, given) for c in active.values()):
                continue
            for key in [k for k, c in active.items() if subsumes(given, c)]:
                for lit in active.pop(key):
                    index[(lit.positive, lit.predicate)].discard(key)
        gid = next(seq)
        active[gid] = given
        for lit in given:
            index.setdefault((lit.positive, lit.predicate), set()).add(gid)

        produced = factors(given)
        partners: set[int] = set()
        for lit in given:
            partners |= index.get((not lit.positive, lit.predicate), set())
        for pid in sorted(partners):
            produced += resolvents(given, active[pid])
        for lits in produced:
            if offer(lits):
                return Status.UNSAT
            if len(seen) > limits.max_clauses:
                return Status.RESOURCE_OUT
    return Status.RESOURCE_OUT if incomplete else Status.SATURATED


def decide(
    task: FolTask,
    limits: SaturationLimits = SaturationLimits(),
    *,
    subsumption: bool = True,
) -> TruthLabel:
    """Three-valued entailment by refuting the goal and its negation separately.

    Raises :class:`InconsistentPremises` when both refutations succeed and
    :class:`ResourceOut` when either test stops on a limit.
    """
    converter = CnfConverter(symbols([*task.premises, task.goal]))
    base: list[Clause] = []
    for p in task.premises:
        base += converter.convert(p)
    refute_negation = saturate(base + converter.convert(Not(task.goal)), limits,
                               subsumption=subsumption)
    refute_goal = saturate(base + converter.convert(task.goal), limits,
                           subsumption=subsumption)
    log.debug("goal test %s, negated-goal test %s", refute_goal, refute_negation)
    if Status.RESOURCE_OUT in (refute_negation, refute_goal):
        raise ResourceOut("saturation limit reached before a verdict")
    if refute_negation is Status.UNSAT and refute_goal is Status.UNSAT:
        raise InconsistentPremises("premises are contradictory")
    if refute_negation is Status.UNSAT:
        return TruthLabel.TRUE
    if refute_goal is Status.UNSAT:
        return TruthLabel.FALSE
    return TruthLabel.UNKNOWN
