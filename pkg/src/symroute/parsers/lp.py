"""Prolog-like program format.

::

    big(tiger).
    visits(X, rabbit) :- big(X).
    ?- ~needs(rabbit, lion).

Variables start with an uppercase letter or underscore, everything else is a
constant. ``~`` marks classical negation and may appear in facts, rule heads,
rule bodies and the query. ``%`` comments run to end of line. Exactly one
``?-`` query is required.
"""

from __future__ import annotations

from ..ir import Const, LpLiteral, LpProgram, LpRule, Var, validate_task
from ._scan import Scanner, Token, TokenStream, decode, fail

_SCANNER = Scanner(
    [
        ("_WS", r"[ \t\n]+"),
        ("_COMMENT", r"%[^\n]*"),
        ("VAR", r"[A-Z_][A-Za-z0-9_]*"),
        ("IDENT", r"[a-z0-9][A-Za-z0-9_]*"),
        ("NECK", r":-"),
        ("QUERY", r"\?-"),
        ("NOT", r"~"),
        ("LPAREN", r"\("),
        ("RPAREN", r"\)"),
        ("COMMA", r","),
        ("DOT", r"\."),
    ],
    {"¬": "~"},
)


def parse_lp(text: str | bytes) -> LpProgram:
    """Parse and validate a logic program, raising ``ParseError`` on the first problem."""
    source = decode(text)
    lines = source.split("\n")
    s = TokenStream(_SCANNER.tokens(source), len(lines), len(lines[-1]) + 1)
    facts: list[LpLiteral] = []
    rules: list[LpRule] = []
    query: LpLiteral | None = None
    while not s.at("EOF"):
        start = s.peek()
        if start.kind == "QUERY":
            if query is not None:
                fail(start.line, start.column, ("fact", "rule"), "?-", "exactly one query required")
            s.next()
            query = _literal(s)
            s.expect("DOT", ".")
            if not query.ground:
                _bad(start, f"query {query} is not ground")
            continue
        head = _literal(s)
        if s.at("DOT"):
            s.next()
            if not head.ground:
                _bad(start, f"fact {head} is not ground")
            facts.append(head)
            continue
        if not s.at("NECK"):
            s.error((".", ":-"))
        s.next()
        body = [_literal(s)]
        while s.at("COMMA"):
            s.next()
            body.append(_literal(s))
        if not s.at("DOT"):
            s.error((",", "."))
        s.next()
        rule = LpRule(head, tuple(body))
        bound = set().union(*(b.variables() for b in body))
        for v in sorted(head.variables() - bound):
            _bad(start, f"range restriction: {v} unbound")
        rules.append(rule)
    if query is None:
        s.error(("?-",), "exactly one query required")
    program = LpProgram(tuple(facts), tuple(rules), query)
    violations = validate_task(program)
    if violations:
        v = violations[0]
        fail(s.eof.line, s.eof.column, ("valid program",), v.location, str(v))
    return program


def _bad(tok: Token, message: str) -> None:
    fail(tok.line, tok.column, ("valid clause",), tok.text, message)


def _literal(s: TokenStream) -> LpLiteral:
    positive = True
    if s.at("NOT"):
        s.next()
        positive = False
    name = s.peek()
    if name.kind != "IDENT":
        s.error(("predicate",) if positive else ("predicate", "~"))
    s.next()
    if not s.at("LPAREN"):
        return LpLiteral(positive, name.text, ())
    s.next()
    args = [_term(s)]
    while s.at("COMMA"):
        s.next()
        args.append(_term(s))
    if not s.at("RPAREN"):
        s.error((",", ")"))
    s.next()
    return LpLiteral(positive, name.text, tuple(args))


def _term(s: TokenStream):
    tok = s.peek()
    if tok.kind == "VAR":
        s.next()
        return Var(tok.text)
    if tok.kind == "IDENT":
        s.next()
        return Const(tok.text)
    s.error(("variable", "constant"))


def render_lp(program: LpProgram) -> str:
    lines = [f"{f}." for f in program.facts]
    lines += [f"{r.head} :- {', '.join(map(str, r.body))}." for r in program.rules]
    lines.append(f"?- {program.query}.")
    return "\n".join(lines) + "\n"
