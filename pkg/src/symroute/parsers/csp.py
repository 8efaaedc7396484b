"""Line-oriented ordering-puzzle format.

::

    objects: falcon, owl, crow
    constraints:
    pos(falcon) < pos(owl)
    pos(crow) = 1
    options:
    pos(owl) = 3
    pos(owl) = 2

Positions run over ``1..n`` for ``n`` objects and every object takes a
distinct position. Constraint and option lines take one of the forms
``pos(a) OP pos(b)``, ``pos(a) OP k``, ``pos(a) = pos(b) + k`` (or ``- k``)
and ``pos(a) in lo..hi``, with ``OP`` among ``< <= = != >= >``.
"""

from __future__ import annotations

from ..ir import Between, Cmp, Constraint, CspTask, Offset, validate_task
from ._scan import Scanner, Token, TokenStream, decode, fail

_SCANNER = Scanner(
    [
        ("_WS", r"[ \t]+"),
        ("INT", r"\d+"),
        ("IDENT", r"[A-Za-z_][A-Za-z0-9_]*"),
        ("RANGE", r"\.\."),
        ("OP", r"<=|>=|!=|=|<|>"),
        ("PLUS", r"\+"),
        ("MINUS", r"-"),
        ("LPAREN", r"\("),
        ("RPAREN", r"\)"),
        ("COMMA", r","),
        ("COLON", r":"),
    ],
    {"≤": "<=", "≥": ">=", "≠": "!="},
)

_STARTS = ("pos",)


def parse_csp(text: str | bytes, option_count: int | None = None) -> CspTask:
    """Parse and validate an ordering puzzle.

    ``option_count``, when given, is the number of option lines the puzzle
    must declare.
    """
    lines = decode(text).split("\n")
    objects: list[str] | None = None
    section = "objects"
    constraints: list[Constraint] = []
    statements: list[Constraint] = []
    for number, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = _SCANNER.tokens(raw, number)
        s = TokenStream(tokens, number, len(raw) + 1)
        first = s.peek()
        if objects is None:
            if first.text.lower() != "objects":
                s.error(("objects:",))
            s.next()
            s.expect("COLON", ":")
            objects = _names(s)
            section = "objects"
            continue
        if first.kind == "IDENT" and s.peek(1).kind == "COLON" and s.peek(2).kind == "EOF":
            header = first.text.lower()
            expected_next = {"objects": "constraints", "constraints": "options"}.get(section)
            if header != expected_next:
                s.error((f"{expected_next}:",) if expected_next else _STARTS)
            section = header
            continue
        if section == "objects":
            s.error(("constraints:",))
        c = _constraint(s, objects)
        (constraints if section == "constraints" else statements).append(c)
    end = len(lines)
    if objects is None:
        fail(end, 1, ("objects:",), "end of input")
    if section != "options":
        fail(end, 1, ("options:" if section == "constraints" else "constraints:",), "end of input")
    if not statements:
        fail(end, 1, _STARTS, "end of input", "at least one option statement required")
    if option_count is not None and len(statements) != option_count:
        fail(
            end, 1, _STARTS, "end of input",
            f"{len(statements)} option statements for {option_count} options",
        )
    task = CspTask(tuple(objects), tuple(constraints), tuple(statements))
    violations = validate_task(task)
    if violations:
        v = violations[0]
        fail(end, 1, ("valid puzzle",), v.location, str(v))
    return task


def _names(s: TokenStream) -> list[str]:
    names = [s.expect("IDENT", "object name").text]
    while s.at("COMMA"):
        s.next()
        names.append(s.expect("IDENT", "object name").text)
    if not s.at("EOF"):
        s.error((",", "end of line"))
    seen: set[str] = set()
    for name in names:
        if name in seen:
            s.error(("object name",), f"duplicate object {name}")
        seen.add(name)
    return names


def _pos(s: TokenStream, objects: list[str]) -> str:
    tok = s.peek()
    if tok.kind != "IDENT" or tok.text != "pos":
        s.error(_STARTS)
    s.next()
    s.expect("LPAREN", "(")
    name = s.peek()
    if name.kind != "IDENT":
        s.error(("object name",))
    if name.text not in objects:
        _bad(name, f"undeclared object {name.text}")
    s.next()
    s.expect("RPAREN", ")")
    return name.text


def _int(s: TokenStream, n: int) -> int:
    tok = s.expect("INT", "integer")
    value = int(tok.text)
    if not 1 <= value <= n:
        _bad(tok, f"position {value} out of range 1..{n}")
    return value


def _bad(tok: Token, message: str) -> None:
    fail(tok.line, tok.column, ("declared value",), tok.text, message)


def _constraint(s: TokenStream, objects: list[str]) -> Constraint:
    n = len(objects)
    obj = _pos(s, objects)
    if s.at("IDENT") and s.peek().text == "in":
        s.next()
        lo = _int(s, n)
        s.expect("RANGE", "..")
        hi = _int(s, n)
        c: Constraint = Between(obj, lo, hi)
    else:
        op = s.expect("OP", "comparison").text
        if s.at("INT"):
            c = Cmp(obj, op, _int(s, n))
        else:
            other = _pos(s, objects)
            if s.at("PLUS", "MINUS") and op == "=":
                sign = 1 if s.next().kind == "PLUS" else -1
                tok = s.expect("INT", "integer")
                k = sign * int(tok.text)
                if abs(k) > n - 1:
                    _bad(tok, f"offset {k} out of range")
                c = Offset(obj, other, k)
            else:
                c = Cmp(obj, op, other)
    if not s.at("EOF"):
        s.error(("end of line",))
    return c


def render_constraint(c: Constraint) -> str:
    if isinstance(c, Cmp):
        rhs = c.rhs if isinstance(c.rhs, int) else f"pos({c.rhs})"
        return f"pos({c.obj}) {c.op} {rhs}"
    if isinstance(c, Offset):
        sign = "-" if c.k < 0 else "+"
        return f"pos({c.obj}) = pos({c.other}) {sign} {abs(c.k)}"
    return f"pos({c.obj}) in {c.lo}..{c.hi}"


def render_csp(task: CspTask) -> str:
    lines = [f"objects: {', '.join(task.objects)}", "constraints:"]
    lines += [render_constraint(c) for c in task.constraints]
    lines.append("options:")
    lines += [render_constraint(c) for c in task.statements]
    return "\n".join(lines) + "\n"
