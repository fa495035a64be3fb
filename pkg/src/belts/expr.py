"""
Braid expressions: ``[1/2,3/2,-1/2] s1 s2 (s2^-1 s1)^3``.

Grammar::

    expr     := twist? seq
    twist    := "[" rational "," rational "," rational "]"
    rational := integer | integer "/" "2"
    seq      := item*
    item     := atom power?
    atom     := "s1" | "s2" | "(" seq ")"
    power    := "^" signed-integer

An omitted twist means [0,0,0]. Whitespace (including newlines) is ignored
between tokens.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import (
    ZERO_TWIST,
    BraidWord,
    FramedBraid,
    Generator,
    TwistWord,
    word_power,
)

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<gen>s[12](?!\d))
  | (?P<int>[+-]?\d+)
  | (?P<punct>[\[\],()^/])
    """,
    re.VERBOSE,
)


class ParseError(ValueError):
    """Malformed expression; carries a 1-based line/column and the expected tokens."""

    def __init__(self, message: str, line: int, column: int, expected: frozenset[str] = frozenset()):
        self.line = line
        self.column = column
        self.expected = expected
        self.reason = message
        super().__init__(f"line {line}, column {column}: {message}")


@dataclass(frozen=True, slots=True)
class Token:
    kind: str
    text: str
    offset: int


def _line_col(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            line, col = _line_col(text, pos)
            bad = re.match(r"s\d+", text[pos:])
            if bad:
                raise ParseError(f"unknown generator {bad.group()!r}, only s1 and s2 exist", line, col)
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        if kind == "punct":
            kind = m.group()
        if kind != "ws":
            tokens.append(Token(kind, m.group(), pos))
        pos = m.end()
    tokens.append(Token("eof", "", len(text)))
    return tokens


_DESCRIBE = {"gen": "'s1' or 's2'", "int": "an integer", "eof": "end of input"}


def _describe(kind: str) -> str:
    return _DESCRIBE.get(kind, repr(kind))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def fail(self, expected: set[str], tok: Token | None = None, reason: str | None = None):
        tok = tok or self.tok
        line, col = _line_col(self.text, tok.offset)
        if reason is None:
            found = "end of input" if tok.kind == "eof" else repr(tok.text)
            wanted = " or ".join(sorted(_describe(k) for k in expected))
            reason = f"expected {wanted}, found {found}"
        raise ParseError(reason, line, col, frozenset(expected))

    def expect(self, kind: str) -> Token:
        if self.tok.kind != kind:
            self.fail({kind})
        tok = self.tok
        self.i += 1
        return tok

    def expr(self) -> FramedBraid:
        twist = self.twist() if self.tok.kind == "[" else ZERO_TWIST
        letters = self.seq()
        if self.tok.kind != "eof":
            self.fail({"gen", "(", "eof"})
        return FramedBraid(twist, BraidWord(letters))

    def twist(self) -> TwistWord:
        self.expect("[")
        halves = [self.rational()]
        for _ in range(2):
            self.expect(",")
            halves.append(self.rational())
        self.expect("]")
        return TwistWord(tuple(halves))

    def rational(self) -> int:
        num = int(self.expect("int").text)
        if self.tok.kind != "/":
            return 2 * num
        self.i += 1
        den_tok = self.expect("int")
        if den_tok.text != "2":
            self.fail({"int"}, den_tok, f"only halves are allowed, denominator must be 2 (got {den_tok.text})")
        return num

    def seq(self) -> tuple[Generator, ...]:
        out: list[Generator] = []
        while self.tok.kind in ("gen", "("):
            out.extend(self.item())
        return tuple(out)

    def item(self) -> tuple[Generator, ...]:
        if self.tok.kind == "gen":
            letters = (Generator(int(self.tok.text[1])),)
            self.i += 1
        else:
            self.expect("(")
            letters = self.seq()
            self.expect(")")
        if self.tok.kind == "^":
            self.i += 1
            n = int(self.expect("int").text)
            letters = word_power(BraidWord(letters), n).letters
        return letters


def parse_expression(text: str) -> FramedBraid:
    return _Parser(text).expr()


def render_expression(fb: FramedBraid) -> str:
    """Canonical flat form: explicit twist prefix, one token per letter, no powers."""
    head = "[" + ",".join(fb.twist.display_entries()) + "]"
    return " ".join([head, *map(str, fb.word.letters)])
