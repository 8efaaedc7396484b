"""First-order task format.

::

    PREMISES:
    Big(tiger)
    forall x. (Big(x) -> Visits(x, rabbit))
    GOAL:
    ~Needs(rabbit, lion)

One formula per non-blank line; ``#`` starts a comment line. Operators bind
``~`` tighter than ``&``, ``&`` tighter than ``|``, and ``|`` tighter than
``->``/``<->`` (both right-associative, same level). A quantifier's body
extends as far right as possible. Identifiers bound by an enclosing
quantifier are variables; every other argument is a constant.
"""

from __future__ import annotations

from dataclasses import replace

from ..ir import (
    And,
    Atom,
    Const,
    Exists,
    FolTask,
    ForAll,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Term,
    Var,
    validate_task,
)
from ._scan import UNICODE_ALIASES, Scanner, TokenStream, decode, fail

_SCANNER = Scanner(
    [
        ("_WS", r"[ \t]+"),
        ("IDENT", r"[A-Za-z_][A-Za-z0-9_]*"),
        ("IFF", r"<->"),
        ("IMP", r"->"),
        ("NOT", r"~"),
        ("AND", r"&"),
        ("OR", r"\|"),
        ("LPAREN", r"\("),
        ("RPAREN", r"\)"),
        ("COMMA", r","),
        ("DOT", r"\."),
    ],
    UNICODE_ALIASES,
)
_KEYWORDS = {"forall": "FORALL", "exists": "EXISTS"}
_FORMULA_START = ("~", "(", "forall", "exists", "identifier")


def parse_formula(text: str, line: int = 1) -> Formula:
    """Parse one formula from a single line of text."""
    tokens = [
        replace(t, kind=_KEYWORDS[t.text]) if t.kind == "IDENT" and t.text in _KEYWORDS else t
        for t in _SCANNER.tokens(text, line)
    ]
    stream = TokenStream(tokens, line, len(text) + 1)
    f = _Parser(stream).formula(())
    if not stream.at("EOF"):
        stream.error(("end of line", "&", "|", "->", "<->"))
    return f


class _Parser:
    def __init__(self, stream: TokenStream):
        self.s = stream

    def formula(self, scope: tuple[str, ...]) -> Formula:
        left = self.disjunction(scope)
        if self.s.at("IMP", "IFF"):
            op = self.s.next().kind
            right = self.formula(scope)
            return Implies(left, right) if op == "IMP" else Iff(left, right)
        return left

    def disjunction(self, scope: tuple[str, ...]) -> Formula:
        f = self.conjunction(scope)
        while self.s.at("OR"):
            self.s.next()
            f = Or(f, self.conjunction(scope))
        return f

    def conjunction(self, scope: tuple[str, ...]) -> Formula:
        f = self.unary(scope)
        while self.s.at("AND"):
            self.s.next()
            f = And(f, self.unary(scope))
        return f

    def unary(self, scope: tuple[str, ...]) -> Formula:
        tok = self.s.peek()
        if tok.kind == "NOT":
            self.s.next()
            return Not(self.unary(scope))
        if tok.kind in ("FORALL", "EXISTS"):
            return self.quantified(scope)
        if tok.kind == "LPAREN":
            self.s.next()
            f = self.formula(scope)
            self.s.expect("RPAREN", ")")
            return f
        if tok.kind == "IDENT":
            return self.atom(scope)
        self.s.error(_FORMULA_START)

    def quantified(self, scope: tuple[str, ...]) -> Formula:
        kind = self.s.next().kind
        names = [self.s.expect("IDENT", "variable").text]
        while self.s.at("IDENT"):
            names.append(self.s.next().text)
        if self.s.at("DOT"):
            self.s.next()
        elif not self.s.at("LPAREN"):
            self.s.error((".", "variable"))
        body = self.formula(scope + tuple(names))
        cls = ForAll if kind == "FORALL" else Exists
        for name in reversed(names):
            body = cls(name, body)
        return body

    def atom(self, scope: tuple[str, ...]) -> Atom:
        name = self.s.next().text
        if not self.s.at("LPAREN"):
            return Atom(name, ())
        self.s.next()
        args = [self.term(scope)]
        while self.s.at("COMMA"):
            self.s.next()
            args.append(self.term(scope))
        if not self.s.at("RPAREN"):
            self.s.error((",", ")"))
        self.s.next()
        return Atom(name, tuple(args))

    def term(self, scope: tuple[str, ...]) -> Term:
        tok = self.s.expect("IDENT", "term")
        return Var(tok.text) if tok.text in scope else Const(tok.text)


def parse_fol(text: str | bytes) -> FolTask:
    """Parse and validate a FOL task, raising ``ParseError`` on the first problem."""
    lines = decode(text).split("\n")
    section = None
    premises: list[tuple[int, Formula]] = []
    goals: list[tuple[int, Formula]] = []
    for number, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        header = stripped.upper().replace(" ", "")
        if header == "PREMISES:":
            if section is not None:
                fail(number, 1, ("formula",), stripped, "duplicate PREMISES section")
            section = "premises"
            continue
        if header == "GOAL:":
            if section != "premises":
                fail(number, 1, ("PREMISES:",), stripped)
            section = "goal"
            continue
        if section is None:
            fail(number, 1, ("PREMISES:",), stripped)
        f = parse_formula(raw, number)
        if section == "premises":
            premises.append((number, f))
        else:
            if goals:
                fail(number, 1, ("end of input",), stripped, "exactly one goal required")
            goals.append((number, f))
    end = len(lines)
    if section is None:
        fail(end, 1, ("PREMISES:",), "end of input")
    if section == "premises":
        fail(end, 1, ("GOAL:",), "end of input")
    if not goals:
        fail(end, 1, _FORMULA_START, "end of input", "missing goal formula")
    task = FolTask(tuple(f for _, f in premises), goals[0][1])
    _report_violations(task, [n for n, _ in premises] + [goals[0][0]])
    return task


def _report_violations(task: FolTask, line_numbers: list[int]) -> None:
    violations = validate_task(task)
    if not violations:
        return
    v = violations[0]
    if v.location == "goal":
        line = line_numbers[-1]
    else:
        line = line_numbers[int(v.location.split()[1]) - 1]
    fail(line, 1, ("valid task",), v.location, str(v))


# -- rendering --------------------------------------------------------------

_PREC = {Implies: 1, Iff: 1, Or: 2, And: 3}
_SYMBOL = {Implies: "->", Iff: "<->", Or: "|", And: "&"}


def render_formula(f: Formula) -> str:
    if isinstance(f, Atom):
        if not f.args:
            return f.predicate
        return f"{f.predicate}({', '.join(str(a) for a in f.args)})"
    if isinstance(f, (ForAll, Exists)):
        word = "forall" if isinstance(f, ForAll) else "exists"
        body = render_formula(f.body)
        if isinstance(f.body, (And, Or, Implies, Iff)):
            body = f"({body})"
        return f"{word} {f.var}. {body}"
    if isinstance(f, Not):
        return "~" + _operand(f.body, 4)
    level = _PREC[type(f)]
    if level == 1:
        # right-associative: the left side must bind tighter
        left, right = _operand(f.left, 2), _operand(f.right, 1)
    else:
        left, right = _operand(f.left, level), _operand(f.right, level + 1)
    return f"{left} {_SYMBOL[type(f)]} {right}"


def _operand(f: Formula, min_prec: int) -> str:
    if isinstance(f, (ForAll, Exists)):
        return f"({render_formula(f)})"
    prec = 5 if isinstance(f, Atom) else 4 if isinstance(f, Not) else _PREC[type(f)]
    text = render_formula(f)
    return text if prec >= min_prec else f"({text})"


def render_fol(task: FolTask) -> str:
    lines = ["PREMISES:"]
    lines += [render_formula(p) for p in task.premises]
    lines += ["GOAL:", render_formula(task.goal)]
    return "\n".join(lines) + "\n"
