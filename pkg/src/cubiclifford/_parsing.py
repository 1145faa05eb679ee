"""Shared recursive-descent parser for the small expression grammar.

Tokens: identifiers, integer and ``p/q`` literals, ``+ - * ^`` and
parentheses; whitespace insignificant. A context object supplies the
semantic actions, so the same grammar serves free-algebra expressions and
commutative polynomials.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError

_OPS = set("+-*^()/")


def tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _OPS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, n))
    return tokens


class ExprParser:
    """Grammar:  expr := term (('+'|'-') term)*
                 term := factor ('*' factor)*
                 factor := '-' factor | primary ('^' INT)*
                 primary := NAME | INT ['/' INT] | '(' expr ')'
    """

    def __init__(self, text, context):
        self.tokens = tokenize(text)
        self.pos = 0
        self.ctx = context

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.advance()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"trailing input {tok[1]!r}", tok[2])
        return value

    def expr(self):
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.term()
            value = self.ctx.add(value, rhs) if op == "+" else self.ctx.sub(value, rhs)
        return value

    def term(self):
        value = self.factor()
        while self.peek()[0] == "*":
            self.advance()
            value = self.ctx.mul(value, self.factor())
        return value

    def factor(self):
        if self.peek()[0] == "-":
            self.advance()
            return self.ctx.neg(self.factor())
        value = self.primary()
        while self.peek()[0] == "^":
            self.advance()
            tok = self.expect("int")
            value = self.ctx.pow_int(value, tok[1])
        return value

    def primary(self):
        tok = self.advance()
        kind, val, pos = tok
        if kind == "int":
            if self.peek()[0] == "/":
                self.advance()
                den = self.expect("int")
                if den[1] == 0:
                    raise ParseError("zero denominator", den[2])
                return self.ctx.const(Fraction(val, den[1]))
            return self.ctx.const(Fraction(val))
        if kind == "name":
            return self.ctx.symbol(val, pos)
        if kind == "(":
            value = self.expr()
            self.expect(")")
            return value
        raise ParseError(f"unexpected token {val!r}", pos)
