"""Tokenizer and precedence parser shared by the quaternion, nc-poly and cpoly syntaxes.

The parser is generic over a *builder*: an object that knows how to turn
literals and variables into ring elements and how to combine them.  Both
polynomial types plug their own builder in, so the grammar lives in one place::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' posint)*
    atom   := number [unit] | unit | name | '(' expr ')'

``number`` is an integer or ``p/q``; a number written directly before a
unit letter (``3/2j``) is an implicit product.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Protocol


class ParseError(ValueError):
    """Syntax or name error, located by 1-based line and column."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Token:
    kind: str  # NUM, UNIT, NAME, OP, EOF
    text: str
    line: int
    column: int
    value: Any = None


_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r\n]+)"
    r"|(?P<num>\d+(?:/\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*^()])"
)


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    line, line_start = 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        chunk = m.group()
        if kind == "ws":
            for offset, ch in enumerate(chunk):
                if ch == "\n":
                    line += 1
                    line_start = pos + offset + 1
        elif kind == "num":
            num, _, den = chunk.partition("/")
            if den and int(den) == 0:
                raise ParseError("zero denominator", line, col)
            tokens.append(Token("NUM", chunk, line, col, Fraction(int(num), int(den or 1))))
        elif kind == "name":
            tokens.append(Token("UNIT" if chunk in ("i", "j", "k") else "NAME", chunk, line, col))
        else:
            tokens.append(Token("OP", chunk, line, col))
        pos = m.end()
    tokens.append(Token("EOF", "", line, pos - line_start + 1))
    return tokens


class Builder(Protocol):
    def number(self, value: Fraction, tok: Token) -> Any: ...
    def unit(self, letter: str, tok: Token) -> Any: ...
    def name(self, name: str, tok: Token) -> Any: ...
    def add(self, x: Any, y: Any) -> Any: ...
    def sub(self, x: Any, y: Any) -> Any: ...
    def mul(self, x: Any, y: Any) -> Any: ...
    def neg(self, x: Any) -> Any: ...


class _Parser:
    def __init__(self, text: str, builder: Builder):
        self.tokens = tokenize(text)
        self.pos = 0
        self.b = builder

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(message, tok.line, tok.column)

    def is_op(self, *ops: str) -> bool:
        return self.tok.kind == "OP" and self.tok.text in ops

    def parse(self) -> Any:
        if self.tok.kind == "EOF":
            raise self.fail("empty expression")
        result = self.expr()
        if self.tok.kind != "EOF":
            raise self.fail(f"unexpected {self.tok.text!r}")
        return result

    def expr(self) -> Any:
        negate = False
        if self.is_op("+", "-"):
            negate = self.advance().text == "-"
        acc = self.term()
        if negate:
            acc = self.b.neg(acc)
        while self.is_op("+", "-"):
            op = self.advance().text
            rhs = self.term()
            acc = self.b.add(acc, rhs) if op == "+" else self.b.sub(acc, rhs)
        return acc

    def term(self) -> Any:
        acc = self.factor()
        while self.is_op("*"):
            self.advance()
            acc = self.b.mul(acc, self.factor())
        return acc

    def factor(self) -> Any:
        base = self.atom()
        while self.is_op("^"):
            self.advance()
            tok = self.tok
            if tok.kind != "NUM" or tok.value.denominator != 1 or tok.value < 1:
                raise self.fail("exponent must be a positive integer")
            self.advance()
            result = base
            for _ in range(int(tok.value) - 1):
                result = self.b.mul(result, base)
            base = result
        return base

    def atom(self) -> Any:
        tok = self.tok
        if tok.kind == "NUM":
            self.advance()
            value = self.b.number(tok.value, tok)
            nxt = self.tok
            # implicit product only when the unit letter is glued to the number
            if nxt.kind == "UNIT" and nxt.line == tok.line and nxt.column == tok.column + len(tok.text):
                self.advance()
                value = self.b.mul(value, self.b.unit(nxt.text, nxt))
            return value
        if tok.kind == "UNIT":
            self.advance()
            return self.b.unit(tok.text, tok)
        if tok.kind == "NAME":
            self.advance()
            return self.b.name(tok.text, tok)
        if self.is_op("("):
            self.advance()
            inner = self.expr()
            if not self.is_op(")"):
                raise self.fail("expected ')'")
            self.advance()
            return inner
        if tok.kind == "EOF":
            raise self.fail("unexpected end of input")
        raise self.fail(f"unexpected {tok.text!r}")


def parse_with(text: str, builder: Builder) -> Any:
    return _Parser(text, builder).parse()


def parse_rational(text: str) -> Fraction:
    """Parse a signed rational literal such as ``-3/2``."""
    s = text.strip()
    m = re.fullmatch(r"([+-]?)(\d+)(?:/(\d+))?", s)
    if m is None:
        raise ParseError(f"not a rational literal: {text!r}")
    sign, num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ParseError("zero denominator")
    value = Fraction(int(num), int(den or 1))
    return -value if sign == "-" else value
