"""Ordering puzzles compiled to CNF and decided with a DPLL core.

Each (object, position) pair gets one boolean variable. Objects take exactly
one position and positions hold at most one object, so every model is a
permutation. Constraints are compiled by listing the position combinations
they forbid.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .ir import Between, Cmp, Constraint, CspTask, Offset, SolverError, TruthLabel

ClauseList = list[tuple[int, ...]]


class InconsistentModel(SolverError):
    kind = "inconsistent-model"


class NoUniqueAnswer(SolverError):
    kind = "no-unique-answer"


@dataclass
class CnfInstance:
    num_vars: int
    clauses: ClauseList
    decode: dict[int, tuple[str, int]] = field(default_factory=dict)

    def var(self, obj: str, pos: int) -> int:
        for v, key in self.decode.items():
            if key == (obj, pos):
                return v
        raise KeyError((obj, pos))

    def extended(self, extra: Iterable[Sequence[int]]) -> CnfInstance:
        return CnfInstance(self.num_vars, self.clauses + [tuple(c) for c in extra], self.decode)

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {len(self.clauses)}"]
        lines += [" ".join(map(str, c)) + " 0" for c in self.clauses]
        return "\n".join(lines) + "\n"

    def placement(self, assignment: dict[int, bool]) -> dict[str, int]:
        """Decode a model into object -> position."""
        out: dict[str, int] = {}
        for v, value in assignment.items():
            if value and v in self.decode:
                obj, pos = self.decode[v]
                if obj in out:
                    raise ValueError(f"{obj} placed twice")
                out[obj] = pos
        return out


# -- encoding ---------------------------------------------------------------

_OPS = {
    "<": lambda a, b: a < b,
    "<=": lambda a, b: a <= b,
    "=": lambda a, b: a == b,
    "!=": lambda a, b: a != b,
    ">=": lambda a, b: a >= b,
    ">": lambda a, b: a > b,
}


def _var(task: CspTask, obj: str, pos: int) -> int:
    return task.objects.index(obj) * task.n + pos


def holds(c: Constraint, placement: dict[str, int]) -> bool:
    """Evaluate a constraint on a concrete placement."""
    p = placement[c.obj]
    if isinstance(c, Cmp):
        rhs = c.rhs if isinstance(c.rhs, int) else placement[c.rhs]
        return _OPS[c.op](p, rhs)
    if isinstance(c, Offset):
        return p == placement[c.other] + c.k
    return c.lo <= p <= c.hi


def compile_constraint(task: CspTask, c: Constraint, *, negate: bool = False) -> ClauseList:
    """Clauses forbidding every placement where ``c`` fails (or holds, if negated)."""
    positions = task.positions
    others = [o for o in _partners(c) if o != c.obj]
    clauses: ClauseList = []
    if not others:
        for p in positions:
            placement = {c.obj: p}
            if isinstance(c, Cmp) and isinstance(c.rhs, str):
                placement[c.rhs] = p
            if isinstance(c, Offset):
                placement[c.other] = p
            if holds(c, placement) == negate:
                clauses.append((-_var(task, c.obj, p),))
        return clauses
    other = others[0]
    for p, q in itertools.product(positions, positions):
        if holds(c, {c.obj: p, other: q}) == negate:
            clauses.append((-_var(task, c.obj, p), -_var(task, other, q)))
    return clauses


def _partners(c: Constraint) -> list[str]:
    if isinstance(c, Cmp) and isinstance(c.rhs, str):
        return [c.rhs]
    if isinstance(c, Offset):
        return [c.other]
    return []


def encode(task: CspTask) -> CnfInstance:
    n = task.n
    decode = {_var(task, o, p): (o, p) for o in task.objects for p in task.positions}
    clauses: ClauseList = []
    for o in task.objects:
        clauses.append(tuple(_var(task, o, p) for p in task.positions))
        for p, q in itertools.combinations(task.positions, 2):
            clauses.append((-_var(task, o, p), -_var(task, o, q)))
    for p in task.positions:
        for a, b in itertools.combinations(task.objects, 2):
            clauses.append((-_var(task, a, p), -_var(task, b, p)))
    for c in task.constraints:
        clauses += compile_constraint(task, c)
    return CnfInstance(n * n, clauses, decode)


# -- DPLL -------------------------------------------------------------------


def dpll(cnf: CnfInstance, assumptions: Sequence[int] = ()) -> dict[int, bool] | None:
    """Total satisfying assignment, or ``None`` when unsatisfiable.

    Two watched literals per clause drive unit propagation; branching picks
    the lowest unassigned variable and tries True first, so the result is a
    deterministic function of the input.
    """
    solver = _Solver(cnf.num_vars, [*cnf.clauses, *((a,) for a in assumptions)])
    return next(solver.models(), None)


class _Solver:
    def __init__(self, num_vars: int, clauses: Iterable[Sequence[int]]):
        self.n = num_vars
        self.value = [0] * (num_vars + 1)
        self.trail: list[int] = []
        self.watches: dict[int, list[list[int]]] = {}
        self.units: list[int] = []
        self.empty = False
        for raw in clauses:
            c = list(dict.fromkeys(raw))
            if any(-l in c for l in c):
                continue
            for l in c:
                if abs(l) > num_vars or l == 0:
                    raise ValueError(f"literal {l} outside 1..{num_vars}")
            if not c:
                self.empty = True
            elif len(c) == 1:
                self.units.append(c[0])
            else:
                self.watches.setdefault(c[0], []).append(c)
                self.watches.setdefault(c[1], []).append(c)

    def _val(self, lit: int) -> int:
        v = self.value[abs(lit)]
        return v if lit > 0 else -v

    def _assign(self, lit: int) -> None:
        self.value[abs(lit)] = 1 if lit > 0 else -1
        self.trail.append(lit)

    def _propagate(self, head: int) -> tuple[bool, int]:
        while head < len(self.trail):
            false_lit = -self.trail[head]
            head += 1
            watching = self.watches.get(false_lit, [])
            keep: list[list[int]] = []
            conflict = False
            for idx, c in enumerate(watching):
                if conflict:
                    keep.append(c)
                    continue
                if c[0] == false_lit:
                    c[0], c[1] = c[1], c[0]
                if self._val(c[0]) == 1:
                    keep.append(c)
                    continue
                for k in range(2, len(c)):
                    if self._val(c[k]) != -1:
                        c[1], c[k] = c[k], c[1]
                        self.watches.setdefault(c[1], []).append(c)
                        break
                else:
                    keep.append(c)
                    if self._val(c[0]) == -1:
                        conflict = True
                    else:
                        self._assign(c[0])
            self.watches[false_lit] = keep
            if conflict:
                return False, head
        return True, head

    def models(self) -> Iterator[dict[int, bool]]:
        """Yield models one by one, blocking each before the search resumes.

        The blocking clause negates the decision literals on the trail. It is
        watched on the two deepest ones, so after backtracking it is satisfied
        by the flipped decision and never misfires.
        """
        if self.empty:
            return
        for u in self.units:
            if self._val(u) == -1:
                return
            if self._val(u) == 0:
                self._assign(u)
        ok, head = self._propagate(0)
        if not ok:
            return
        # each frame: (trail length before the decision, decision literal, flipped?)
        frames: list[tuple[int, int, bool]] = []
        next_var = 1
        while True:
            while next_var <= self.n and self.value[next_var] != 0:
                next_var += 1
            if next_var > self.n:
                yield {v: self.value[v] == 1 for v in range(1, self.n + 1)}
                if not self._block(frames):
                    return
                ok = False
            else:
                frames.append((len(self.trail), next_var, False))
                self._assign(next_var)
                ok, head = self._propagate(head)
            while not ok:
                while frames and frames[-1][2]:
                    frames.pop()
                if not frames:
                    return
                mark, lit, _ = frames.pop()
                for undone in self.trail[mark:]:
                    self.value[abs(undone)] = 0
                del self.trail[mark:]
                frames.append((mark, -lit, True))
                self._assign(-lit)
                ok, head = self._propagate(mark)
            next_var = 1

    def _block(self, frames: list[tuple[int, int, bool]]) -> bool:
        """Add the blocking clause for the current model; False if no model remains."""
        open_frames = [i for i, f in enumerate(frames) if not f[2]]
        if not open_frames:
            return False
        deepest = open_frames[-1]
        del frames[deepest + 1:]  # flipped frames above it are exhausted
        if deepest > 0:
            clause = [-frames[deepest][1], -frames[deepest - 1][1]]
            clause += [-f[1] for f in frames[:deepest - 1]]
            self.watches.setdefault(clause[0], []).append(clause)
            self.watches.setdefault(clause[1], []).append(clause)
        return True


def iter_models(cnf: CnfInstance) -> Iterator[dict[int, bool]]:
    """Enumerate every model once, by blocking-clause enumeration."""
    yield from _Solver(cnf.num_vars, cnf.clauses).models()


def iter_placements(task: CspTask) -> Iterator[dict[str, int]]:
    """Every valid arrangement of ``task``, each exactly once."""
    cnf = encode(task)
    for model in iter_models(cnf):
        yield cnf.placement(model)


# -- classification ---------------------------------------------------------


def classify(task: CspTask, statement: Constraint, base: CnfInstance | None = None) -> TruthLabel:
    """True if every valid placement satisfies ``statement``, False if none does."""
    base = base or encode(task)
    if dpll(base) is None:
        raise InconsistentModel("the constraints admit no arrangement")
    if dpll(base.extended(compile_constraint(task, statement))) is None:
        return TruthLabel.FALSE
    if dpll(base.extended(compile_constraint(task, statement, negate=True))) is None:
        return TruthLabel.TRUE
    return TruthLabel.UNKNOWN


def answer_multichoice(task: CspTask) -> int:
    """Index of the single option statement entailed by the constraints."""
    base = encode(task)
    labels = [classify(task, s, base) for s in task.statements]
    winners = [i for i, label in enumerate(labels) if label is TruthLabel.TRUE]
    if len(winners) != 1:
        raise NoUniqueAnswer(f"{len(winners)} options are entailed")
    return winners[0]
