"""Tiny arithmetic grammar for user-supplied curves.

Grammar (whitespace insensitive):

    expr    := term (('+' | '-') term)*
    term    := factor (('*' | '/') factor)*
    factor  := '-' factor | power
    power   := atom ('^' factor)?          right-associative
    atom    := NUMBER | 'x' | NAME '(' expr ')' | '(' expr ')'

NUMBER accepts decimals and exponent notation (2, 0.5, 1e-3). NAME is one of
sqrt, exp, ln, sin, cos. Parsing yields a plain float -> float callable;
evaluation errors (division by zero, sqrt of a negative) surface as the usual
arithmetic exceptions at call time, not at parse time.
"""
from __future__ import annotations

import math
from typing import Callable

FUNCTIONS: dict[str, Callable[[float], float]] = {
    "sqrt": math.sqrt,
    "exp": math.exp,
    "ln": math.log,
    "sin": math.sin,
    "cos": math.cos,
}

_OPERATOR_CHARS = "+-*/^"


class ParseError(ValueError):
    """Syntax error with the character offset where it was detected."""

    def __init__(self, position: int, message: str):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _Token:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind: str, text: str, pos: int):
        self.kind = kind  # num | name | op | lparen | rparen | end
        self.text = text
        self.pos = pos


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c in _OPERATOR_CHARS:
            tokens.append(_Token("op", c, i))
            i += 1
        elif c == "(":
            tokens.append(_Token("lparen", c, i))
            i += 1
        elif c == ")":
            tokens.append(_Token("rparen", c, i))
            i += 1
        elif c.isdigit() or c == ".":
            start = i
            while i < n and (text[i].isdigit() or text[i] == "."):
                i += 1
            if i < n and text[i] in "eE":
                j = i + 1
                if j < n and text[j] in "+-":
                    j += 1
                if j < n and text[j].isdigit():
                    i = j
                    while i < n and text[i].isdigit():
                        i += 1
            lexeme = text[start:i]
            try:
                float(lexeme)
            except ValueError:
                raise ParseError(start, f"malformed number {lexeme!r}") from None
            tokens.append(_Token("num", lexeme, start))
        elif c.isalpha():
            start = i
            while i < n and text[i].isalnum():
                i += 1
            tokens.append(_Token("name", text[start:i], start))
        else:
            raise ParseError(i, f"unexpected character {c!r}")
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expr(self) -> Callable[[float], float]:
        node = self.term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.advance().text
            rhs = self.term()
            lhs = node
            if op == "+":
                node = lambda x, a=lhs, b=rhs: a(x) + b(x)
            else:
                node = lambda x, a=lhs, b=rhs: a(x) - b(x)
        return node

    def term(self) -> Callable[[float], float]:
        node = self.factor()
        while self.peek().kind == "op" and self.peek().text in "*/":
            op = self.advance().text
            rhs = self.factor()
            lhs = node
            if op == "*":
                node = lambda x, a=lhs, b=rhs: a(x) * b(x)
            else:
                node = lambda x, a=lhs, b=rhs: a(x) / b(x)
        return node

    def factor(self) -> Callable[[float], float]:
        if self.peek().kind == "op" and self.peek().text == "-":
            self.advance()
            inner = self.factor()
            return lambda x, a=inner: -a(x)
        return self.power()

    def power(self) -> Callable[[float], float]:
        base = self.atom()
        if self.peek().kind == "op" and self.peek().text == "^":
            self.advance()
            exponent = self.factor()
            return lambda x, a=base, b=exponent: a(x) ** b(x)
        return base

    def atom(self) -> Callable[[float], float]:
        tok = self.peek()
        if tok.kind == "num":
            self.advance()
            value = float(tok.text)
            return lambda x, v=value: v
        if tok.kind == "name":
            self.advance()
            if tok.text == "x":
                return lambda x: x
            fn = FUNCTIONS.get(tok.text)
            if fn is None:
                expected = ", ".join(sorted(FUNCTIONS))
                raise ParseError(tok.pos, f"unknown name {tok.text!r}: expected 'x' or one of {expected}")
            opener = self.peek()
            if opener.kind != "lparen":
                raise ParseError(opener.pos, f"expected '(' after {tok.text!r}")
            self.advance()
            arg = self.expr()
            closer = self.peek()
            if closer.kind != "rparen":
                raise ParseError(closer.pos, "expected ')'")
            self.advance()
            return lambda x, f=fn, a=arg: f(a(x))
        if tok.kind == "lparen":
            self.advance()
            inner = self.expr()
            closer = self.peek()
            if closer.kind != "rparen":
                raise ParseError(closer.pos, "expected ')'")
            self.advance()
            return inner
        raise ParseError(tok.pos, "expected a number, 'x', a function call, or '('")


def parse_expression(text: str) -> Callable[[float], float]:
    """Compile `text` into a float -> float evaluator, or raise ParseError."""
    parser = _Parser(_tokenize(text))
    node = parser.expr()
    trailing = parser.peek()
    if trailing.kind != "end":
        raise ParseError(trailing.pos, f"unexpected {trailing.text!r} after expression")
    return node
