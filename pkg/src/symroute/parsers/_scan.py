from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NoReturn


@dataclass(frozen=True)
class ParseDiagnostic:
    line: int
    column: int
    expected: tuple[str, ...]
    found: str
    message: str = ""

    def __str__(self) -> str:
        want = " or ".join(repr(e) for e in self.expected)
        text = f"{self.line}:{self.column}: expected {want}, found {self.found!r}"
        return f"{text} ({self.message})" if self.message else text


class ParseError(ValueError):
    def __init__(self, diagnostic: ParseDiagnostic) -> None:
        super().__init__(str(diagnostic))
        self.diagnostic = diagnostic


def fail(
    line: int, column: int, expected: Iterable[str], found: str, message: str = ""
) -> NoReturn:
    expected = tuple(expected) or ("<valid input>",)
    raise ParseError(ParseDiagnostic(line, column, expected, found, message))


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


UNICODE_ALIASES = {
    "∀": "forall ",
    "∃": "exists ",
    "¬": "~",
    "∧": "&",
    "∨": "|",
    "→": "->",
    "⇒": "->",
    "↔": "<->",
    "⇔": "<->",
    "≤": "<=",
    "≥": ">=",
    "≠": "!=",
}


def decode(data: str | bytes) -> str:
    if isinstance(data, bytes):
        data = data.decode("utf-8", errors="replace")
    return data.replace("\r\n", "\n").replace("\r", "\n")


class Scanner:
    """Regex tokenizer that keeps 1-based line/column positions.

    ``spec`` maps token kinds to patterns; order matters. Kinds starting with
    an underscore are skipped.
    """

    def __init__(self, spec: list[tuple[str, str]], aliases: dict[str, str] | None = None):
        self.regex = re.compile("|".join(f"(?P<{k}>{p})" for k, p in spec))
        self.aliases = aliases or {}

    def tokens(self, text: str, line: int = 1, column: int = 1) -> list[Token]:
        out: list[Token] = []
        pos = 0
        line_start = -(column - 1)
        while pos < len(text):
            ch = text[pos]
            if ch in self.aliases:
                sub = self.aliases[ch].strip()
                kinds = self.tokens(sub)
                for t in kinds:
                    out.append(Token(t.kind, t.text, line, pos - line_start + 1))
                pos += 1
                continue
            m = self.regex.match(text, pos)
            if m is None:
                fail(line, pos - line_start + 1, ("token",), ch, "unexpected character")
            kind = m.lastgroup
            assert kind is not None
            if kind[0] != "_":
                out.append(Token(kind, m.group(), line, pos - line_start + 1))
            newlines = m.group().count("\n")
            if newlines:
                line += newlines
                line_start = pos + m.group().rindex("\n") + 1
            pos = m.end()
        return out


class TokenStream:
    def __init__(self, tokens: list[Token], eof_line: int, eof_column: int):
        self.tokens = tokens
        self.i = 0
        self.eof = Token("EOF", "", eof_line, eof_column)

    def peek(self, offset: int = 0) -> Token:
        j = self.i + offset
        return self.tokens[j] if j < len(self.tokens) else self.eof

    def next(self) -> Token:
        tok = self.peek()
        self.i += 1
        return tok

    def at(self, *kinds: str) -> bool:
        return self.peek().kind in kinds

    def expect(self, kind: str, shown: str | None = None) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            self.error((shown or kind,))
        return self.next()

    def error(self, expected: Iterable[str], message: str = "") -> NoReturn:
        tok = self.peek()
        fail(tok.line, tok.column, expected, tok.text or "end of input", message)
