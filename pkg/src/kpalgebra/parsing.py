"""Expression parser for rational functions in named generators.

Grammar (whitespace-insensitive)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom [('^' | '**') exponent]
    exponent := ['+' | '-'] INT | '(' ['+' | '-'] INT ')'
    atom   := INT | NAME | 'i' | '(' expr ')'

``p/q`` rationals are ordinary divisions of integer literals.  ``i`` is the
imaginary unit unless it is one of the declared generator names.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .errors import DivisionByZero, ParseError, UnknownGenerator
from .field import I, RatFunc

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>\*\*|[-+*/^()]))")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            bad = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[bad]!r}", pos=bad, column=bad + 1)
        kind = m.lastgroup
        tokens.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, names: Sequence[str]):
        self.text = text
        self.names = {name: i for i, name in enumerate(names)}
        self.m = len(names)
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, message: str, tok: Token | None = None, cls=ParseError):
        tok = tok or self.tok
        return cls(message, pos=tok.pos, column=tok.pos + 1)

    def take(self, text: str | None = None) -> Token | None:
        tok = self.tok
        if tok.kind == "op" and (text is None or tok.text == text):
            self.i += 1
            return tok
        return None

    def parse(self) -> RatFunc:
        if self.tok.kind == "end":
            raise self.error("empty expression")
        value = self.expr()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}; expected an operator")
        return value

    def expr(self) -> RatFunc:
        value = self.term()
        while True:
            if self.take("+"):
                value = value + self.term()
            elif self.take("-"):
                value = value - self.term()
            else:
                return value

    def term(self) -> RatFunc:
        value = self.unary()
        while True:
            if self.take("*"):
                value = value * self.unary()
            elif (tok := self.take("/")) is not None:
                rhs = self.unary()
                if rhs.is_zero():
                    raise self.error("division by zero", tok)
                value = value / rhs
            else:
                return value

    def unary(self) -> RatFunc:
        if self.take("-"):
            return -self.unary()
        if self.take("+"):
            return self.unary()
        return self.power()

    def power(self) -> RatFunc:
        base = self.atom()
        op = self.take("^") or self.take("**")
        if op is None:
            return base
        k = self.exponent()
        if self.tok.kind == "op" and self.tok.text in ("^", "**"):
            raise self.error("chained exponent; add parentheses")
        if k < 0 and base.is_zero():
            raise self.error("zero raised to a negative power", op)
        return base ** k

    def exponent(self) -> int:
        paren = self.take("(")
        sign = 1
        if self.take("-"):
            sign = -1
        else:
            self.take("+")
        tok = self.tok
        if tok.kind != "int":
            raise self.error("exponent must be an integer literal")
        self.i += 1
        if paren and not self.take(")"):
            raise self.error("expected ')'")
        return sign * int(tok.text)

    def atom(self) -> RatFunc:
        tok = self.tok
        if tok.kind == "int":
            self.i += 1
            return RatFunc.const(self.m, int(tok.text))
        if tok.kind == "name":
            self.i += 1
            if tok.text in self.names:
                return RatFunc.gen(self.m, self.names[tok.text])
            if tok.text == "i":
                return RatFunc.const(self.m, I)
            raise self.error(f"unknown generator {tok.text!r}", tok, UnknownGenerator)
        if self.take("("):
            value = self.expr()
            if not self.take(")"):
                raise self.error("expected ')'")
            return value
        if tok.kind == "end":
            raise self.error("unexpected end of expression")
        raise self.error(f"unexpected {tok.text!r}")


def parse_expr(text: str, names: Sequence[str]) -> RatFunc:
    """Parse ``text`` into a RatFunc over the generators ``names``."""
    try:
        return _Parser(text, names).parse()
    except DivisionByZero as exc:
        raise ParseError(str(exc)) from exc
