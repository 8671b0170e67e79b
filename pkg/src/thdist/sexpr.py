"""Tiny s-expression reader shared by the formula parser and catalog loader.

Tokens: ``(`` ``)``, double-quoted strings with ``\\"`` and ``\\\\`` escapes,
and bare atoms (any run of non-space, non-paren, non-quote characters).
``;`` starts a comment running to end of line. Positions are tracked for
error reporting.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import FormulaSyntaxError


@dataclass(frozen=True)
class SAtom:
    text: str
    line: int = 0
    column: int = 0


@dataclass(frozen=True)
class SString:
    value: str
    line: int = 0
    column: int = 0


@dataclass(frozen=True)
class SList:
    items: tuple = field(default_factory=tuple)
    line: int = 0
    column: int = 0

    def __len__(self) -> int:
        return len(self.items)

    def __getitem__(self, i):
        return self.items[i]


_DELIMS = set("() \t\r\n;\"")


class _Scanner:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0
        self.line = 1
        self.column = 1

    def error(self, message: str) -> FormulaSyntaxError:
        return FormulaSyntaxError(message, self.line, self.column)

    def _advance(self, n: int = 1) -> None:
        for _ in range(n):
            if self.pos < len(self.text) and self.text[self.pos] == "\n":
                self.line += 1
                self.column = 1
            else:
                self.column += 1
            self.pos += 1

    def skip_space(self) -> None:
        while self.pos < len(self.text):
            c = self.text[self.pos]
            if c == ";":
                while self.pos < len(self.text) and self.text[self.pos] != "\n":
                    self._advance()
            elif c.isspace():
                self._advance()
            else:
                return

    def at_end(self) -> bool:
        self.skip_space()
        return self.pos >= len(self.text)

    def read(self):
        self.skip_space()
        if self.pos >= len(self.text):
            raise self.error("unexpected end of input")
        line, column = self.line, self.column
        c = self.text[self.pos]
        if c == "(":
            self._advance()
            items = []
            while True:
                self.skip_space()
                if self.pos >= len(self.text):
                    raise FormulaSyntaxError("missing ')'", line, column)
                if self.text[self.pos] == ")":
                    self._advance()
                    return SList(tuple(items), line, column)
                items.append(self.read())
        if c == ")":
            raise self.error("unexpected ')'")
        if c == '"':
            self._advance()
            out = []
            while True:
                if self.pos >= len(self.text):
                    raise FormulaSyntaxError("unterminated string", line, column)
                c = self.text[self.pos]
                if c == '"':
                    self._advance()
                    return SString("".join(out), line, column)
                if c == "\\":
                    self._advance()
                    if self.pos >= len(self.text):
                        raise FormulaSyntaxError("unterminated string", line, column)
                    esc = self.text[self.pos]
                    out.append({"n": "\n", "t": "\t"}.get(esc, esc))
                    self._advance()
                else:
                    out.append(c)
                    self._advance()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in _DELIMS:
            self._advance()
        return SAtom(self.text[start : self.pos], line, column)


def read_one(text: str):
    """Read exactly one s-expression; trailing tokens are an error."""
    sc = _Scanner(text)
    node = sc.read()
    if not sc.at_end():
        raise sc.error("unexpected trailing tokens")
    return node


def read_all(text: str) -> list:
    """Read a sequence of top-level s-expressions."""
    sc = _Scanner(text)
    out = []
    while not sc.at_end():
        out.append(sc.read())
    return out
