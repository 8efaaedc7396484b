"""Shared vocabulary: problems, symbolic tasks, verdicts and run outcomes.

Every value here is immutable. Formulas and terms compare structurally;
alpha-equivalent formulas (same shape, different bound names) are *not*
considered equal.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterator, Union


class SlKind(str, enum.Enum):
    FOL = "FOL"
    LP = "LP"
    SAT = "SAT"


class TruthLabel(str, enum.Enum):
    TRUE = "True"
    FALSE = "False"
    UNKNOWN = "Unknown"

    def negate(self) -> TruthLabel:
        if self is TruthLabel.TRUE:
            return TruthLabel.FALSE
        if self is TruthLabel.FALSE:
            return TruthLabel.TRUE
        return self


class SolverError(Exception):
    """Base for every outcome that leaves a sample without an answer."""

    kind = "solver-error"


class ResourceOut(SolverError):
    kind = "resource-out"


_OPTION_PREFIX = re.compile(r"^\s*(?:\(?[A-Za-z]\)|[A-Za-z][.:])\s*")


def option_label(option: str) -> TruthLabel | None:
    """Read an option such as ``"B) False"`` as a truth label, if it is one."""
    text = _OPTION_PREFIX.sub("", option).strip().rstrip(".").lower()
    for label in TruthLabel:
        if text == label.value.lower():
            return label
    return None


def option_letter(index: int) -> str:
    return chr(ord("A") + index)


@dataclass(frozen=True)
class Problem:
    id: str
    context: tuple[str, ...]
    question: str
    options: tuple[str, ...]
    gold: int
    source: str = ""

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("problem id must be non-empty")
        if len(self.options) < 2:
            raise ValueError(f"{self.id}: at least two options required")
        if not 0 <= self.gold < len(self.options):
            raise ValueError(f"{self.id}: gold index {self.gold} out of range")

    @property
    def truth_valued(self) -> bool:
        """True when every option is one of True / False / Unknown."""
        return all(option_label(o) is not None for o in self.options)

    @property
    def chance(self) -> float:
        return 1.0 / len(self.options)

    def index_of(self, label: TruthLabel) -> int | None:
        for i, option in enumerate(self.options):
            if option_label(option) is label:
                return i
        return None

    def format_option(self, index: int) -> str:
        text = _OPTION_PREFIX.sub("", self.options[index]).strip()
        return f"{option_letter(index)}) {text}"


# -- terms and formulas -----------------------------------------------------


@dataclass(frozen=True, slots=True)
class Var:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class Const:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class Func:
    """Function application; only ever produced by Skolemization."""

    name: str
    args: tuple[Term, ...]

    def __str__(self) -> str:
        return f"{self.name}({', '.join(map(str, self.args))})"


Term = Union[Var, Const, Func]


@dataclass(frozen=True, slots=True)
class Atom:
    predicate: str
    args: tuple[Term, ...] = ()


@dataclass(frozen=True, slots=True)
class Not:
    body: Formula


@dataclass(frozen=True, slots=True)
class And:
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Or:
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Implies:
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Iff:
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class ForAll:
    var: str
    body: Formula


@dataclass(frozen=True, slots=True)
class Exists:
    var: str
    body: Formula


Formula = Union[Atom, Not, And, Or, Implies, Iff, ForAll, Exists]
BINARY = (And, Or, Implies, Iff)
QUANTIFIERS = (ForAll, Exists)


def term_variables(t: Term) -> Iterator[str]:
    if isinstance(t, Var):
        yield t.name
    elif isinstance(t, Func):
        for a in t.args:
            yield from term_variables(a)


def term_depth(t: Term) -> int:
    if isinstance(t, Func):
        return 1 + max(term_depth(a) for a in t.args)
    return 0


def free_variables(f: Formula) -> set[str]:
    if isinstance(f, Atom):
        return {v for t in f.args for v in term_variables(t)}
    if isinstance(f, Not):
        return free_variables(f.body)
    if isinstance(f, BINARY):
        return free_variables(f.left) | free_variables(f.right)
    if isinstance(f, QUANTIFIERS):
        return free_variables(f.body) - {f.var}
    raise TypeError(f"not a formula: {f!r}")


def subformulas(f: Formula) -> Iterator[Formula]:
    yield f
    if isinstance(f, (Not, ForAll, Exists)):
        yield from subformulas(f.body)
    elif isinstance(f, BINARY):
        yield from subformulas(f.left)
        yield from subformulas(f.right)


def atoms(f: Formula) -> Iterator[Atom]:
    return (g for g in subformulas(f) if isinstance(g, Atom))


@dataclass(frozen=True)
class FolTask:
    premises: tuple[Formula, ...]
    goal: Formula


# -- logic programs ---------------------------------------------------------


@dataclass(frozen=True, slots=True)
class LpLiteral:
    positive: bool
    predicate: str
    args: tuple[Term, ...] = ()

    @property
    def ground(self) -> bool:
        return all(isinstance(a, Const) for a in self.args)

    def complement(self) -> LpLiteral:
        return LpLiteral(not self.positive, self.predicate, self.args)

    def variables(self) -> set[str]:
        return {v for a in self.args for v in term_variables(a)}

    def __str__(self) -> str:
        sign = "" if self.positive else "~"
        if not self.args:
            return f"{sign}{self.predicate}"
        return f"{sign}{self.predicate}({', '.join(map(str, self.args))})"


@dataclass(frozen=True)
class LpRule:
    head: LpLiteral
    body: tuple[LpLiteral, ...]


@dataclass(frozen=True)
class LpProgram:
    facts: tuple[LpLiteral, ...]
    rules: tuple[LpRule, ...]
    query: LpLiteral


# -- finite-domain ordering puzzles -----------------------------------------

CMP_OPS = ("<", "<=", "=", "!=", ">=", ">")


@dataclass(frozen=True)
class Cmp:
    """``pos(obj) op pos(rhs)`` when rhs is a name, ``pos(obj) op rhs`` when an int."""

    obj: str
    op: str
    rhs: str | int


@dataclass(frozen=True)
class Offset:
    """``pos(obj) = pos(other) + k``."""

    obj: str
    other: str
    k: int


@dataclass(frozen=True)
class Between:
    """``lo <= pos(obj) <= hi``."""

    obj: str
    lo: int
    hi: int


Constraint = Union[Cmp, Offset, Between]
Statement = Constraint


def constraint_objects(c: Constraint) -> tuple[str, ...]:
    if isinstance(c, Cmp):
        return (c.obj, c.rhs) if isinstance(c.rhs, str) else (c.obj,)
    if isinstance(c, Offset):
        return (c.obj, c.other)
    return (c.obj,)


@dataclass(frozen=True)
class CspTask:
    objects: tuple[str, ...]
    constraints: tuple[Constraint, ...]
    statements: tuple[Statement, ...]

    @property
    def n(self) -> int:
        return len(self.objects)

    @property
    def positions(self) -> range:
        return range(1, self.n + 1)


# -- validation -------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    location: str
    message: str

    def __str__(self) -> str:
        return f"{self.location}: {self.message}"


Task = Union[FolTask, LpProgram, CspTask]


def validate_task(task: Task) -> list[Violation]:
    """Return every invariant violation in ``task``; an empty list means valid."""
    if isinstance(task, FolTask):
        return _validate_fol(task)
    if isinstance(task, LpProgram):
        return _validate_lp(task)
    if isinstance(task, CspTask):
        return _validate_csp(task)
    return [Violation("task", f"unsupported task type {type(task).__name__}")]


class _Arities:
    def __init__(self) -> None:
        self.seen: dict[str, tuple[int, str]] = {}
        self.violations: list[Violation] = []

    def check(self, predicate: str, arity: int, where: str) -> None:
        if not predicate:
            self.violations.append(Violation(where, "empty predicate name"))
            return
        first = self.seen.setdefault(predicate, (arity, where))
        if first[0] != arity:
            self.violations.append(
                Violation(
                    where,
                    f"arity mismatch: {predicate}/{arity} but {predicate}/{first[0]} at {first[1]}",
                )
            )


def _term_problems(t: object, where: str) -> list[Violation]:
    if isinstance(t, (Var, Const)):
        return [] if t.name else [Violation(where, "empty term name")]
    if isinstance(t, Func):
        return [Violation(where, f"function term {t} not allowed in input tasks")]
    return [Violation(where, f"not a term: {t!r}")]


def _validate_fol(task: FolTask) -> list[Violation]:
    arities = _Arities()
    out: list[Violation] = []
    labelled = [(f"premise {i + 1}", f) for i, f in enumerate(task.premises)]
    labelled.append(("goal", task.goal))
    for where, f in labelled:
        try:
            free = free_variables(f)
        except TypeError as exc:
            out.append(Violation(where, str(exc)))
            continue
        if free:
            names = ", ".join(sorted(free))
            out.append(Violation(where, f"unclosed {where.split()[0]}: free {names}"))
        for g in subformulas(f):
            if isinstance(g, Atom):
                arities.check(g.predicate, len(g.args), where)
                for t in g.args:
                    out.extend(_term_problems(t, where))
            elif isinstance(g, QUANTIFIERS) and not g.var:
                out.append(Violation(where, "empty quantified variable"))
    return out + arities.violations


def _validate_lp(program: LpProgram) -> list[Violation]:
    arities = _Arities()
    out: list[Violation] = []

    def literal(lit: LpLiteral, where: str) -> None:
        arities.check(lit.predicate, len(lit.args), where)
        for t in lit.args:
            out.extend(_term_problems(t, where))

    for i, fact in enumerate(program.facts):
        where = f"fact {i + 1}"
        literal(fact, where)
        if not fact.ground:
            out.append(Violation(where, f"fact {fact} is not ground"))
    for i, rule in enumerate(program.rules):
        where = f"rule {i + 1}"
        literal(rule.head, where)
        if not rule.body:
            out.append(Violation(where, "empty rule body"))
        bound: set[str] = set()
        for b in rule.body:
            literal(b, where)
            bound |= b.variables()
        unbound = sorted(rule.head.variables() - bound)
        for v in unbound:
            out.append(Violation(where, f"range restriction: {v} unbound"))
    literal(program.query, "query")
    if not program.query.ground:
        out.append(Violation("query", f"query {program.query} is not ground"))
    return out + arities.violations


def _validate_csp(task: CspTask) -> list[Violation]:
    out: list[Violation] = []
    n = task.n
    if n == 0:
        out.append(Violation("objects", "no objects declared"))
    seen: set[str] = set()
    for name in task.objects:
        if not name:
            out.append(Violation("objects", "empty object name"))
        if name in seen:
            out.append(Violation("objects", f"duplicate object {name}"))
        seen.add(name)

    def check(c: Constraint, where: str) -> None:
        for name in constraint_objects(c):
            if name not in seen:
                out.append(Violation(where, f"undeclared object {name}"))
        ints: list[int] = []
        if isinstance(c, Cmp):
            if c.op not in CMP_OPS:
                out.append(Violation(where, f"unknown operator {c.op}"))
            if isinstance(c.rhs, int):
                ints.append(c.rhs)
        elif isinstance(c, Between):
            ints += [c.lo, c.hi]
        elif isinstance(c, Offset) and abs(c.k) > max(n - 1, 0):
            out.append(Violation(where, f"offset {c.k} out of range"))
        for value in ints:
            if not 1 <= value <= n:
                out.append(Violation(where, f"position {value} out of range 1..{n}"))

    for i, c in enumerate(task.constraints):
        check(c, f"constraint {i + 1}")
    for i, s in enumerate(task.statements):
        check(s, f"option {i + 1}")
    return out


# -- run outcomes -----------------------------------------------------------


@dataclass(frozen=True)
class RunRecord:
    problem_id: str
    strategy: str
    chosen: SlKind | None
    translation: str
    executed: bool
    predicted: int | None
    correct: bool
    fallback_applied: bool
    failure: str | None = None
    detail: str = ""
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        if (self.predicted is not None) != self.executed:
            raise ValueError("predicted must be present exactly when executed")
        if self.fallback_applied and self.executed:
            raise ValueError("fallback only applies to non-executed samples")
        if self.correct and not self.executed:
            raise ValueError("a non-executed sample cannot be correct")

    def to_json(self) -> dict:
        return {
            "problem_id": self.problem_id,
            "strategy": self.strategy,
            "chosen": self.chosen.value if self.chosen else None,
            "translation": self.translation,
            "executed": self.executed,
            "predicted": self.predicted,
            "correct": self.correct,
            "fallback_applied": self.fallback_applied,
            "failure": self.failure,
            "detail": self.detail,
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class Metrics:
    overall_acc: float
    exec_rate: float
    exec_acc: float
    n: int
    chance: float
    executed: int = 0
    correct: int = 0

    @property
    def exec_acc_undefined(self) -> bool:
        return self.executed == 0
