"""Recursive-descent parser for polynomial expressions in ``x``.

Grammar (whitespace ignored)::

    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/" | <juxtaposition>) unary)*
    unary   := ("+" | "-") unary | power
    power   := atom ("^" INTEGER)?
    atom    := INTEGER | "x" | "(" expr ")"

``^`` binds tighter than multiplication, so ``2x^3`` is ``2*(x^3)`` and
``-x^2`` is ``-(x^2)``.  Division is only allowed by nonzero constants, which
covers rational literals such as ``32/5`` and ``500x/189``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .ratpoly import DivisionByZeroPoly, RatPoly


class PolySyntaxError(ValueError):
    def __init__(self, message: str, pos: int, text: str):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos
        self.text = text


class NegativeExponent(PolySyntaxError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|(x)|(\*\*|[-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolySyntaxError(f"unexpected character {text[bad]!r}", bad, text)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", m.group(1), start))
        elif m.group(2):
            tokens.append(("x", "x", start))
        else:
            op = "^" if m.group(3) == "**" else m.group(3)
            tokens.append(("op", op, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise PolySyntaxError(message, tok[2], self.text)

    def expect(self, value):
        tok = self.take()
        if tok[1] != value or tok[0] != "op":
            self.fail(f"expected {value!r}", tok)

    def parse(self) -> RatPoly:
        if self.peek()[0] == "end":
            self.fail("empty expression")
        out = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return out

    def expr(self) -> RatPoly:
        out = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def _starts_atom(self, tok) -> bool:
        return tok[0] in ("int", "x") or tok[:2] == ("op", "(")

    def term(self) -> RatPoly:
        out = self.unary()
        while True:
            tok = self.peek()
            if tok[:2] == ("op", "*"):
                self.take()
                out = out * self.unary()
            elif tok[:2] == ("op", "/"):
                self.take()
                div_tok = self.peek()
                rhs = self.unary()
                if rhs.degree > 0:
                    self.fail("division by a non-constant expression", div_tok)
                if not rhs:
                    raise DivisionByZeroPoly(f"division by zero at position {div_tok[2]}")
                out = out * RatPoly([1 / rhs.lc])
            elif self._starts_atom(tok):
                out = out * self.power()
            else:
                return out

    def unary(self) -> RatPoly:
        tok = self.peek()
        if tok[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        if tok[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> RatPoly:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.peek()
            if tok[:2] == ("op", "-"):
                raise NegativeExponent("negative exponent", tok[2], self.text)
            if tok[0] != "int":
                self.fail("exponent must be a nonnegative integer literal")
            self.take()
            base = base ** int(tok[1])
            if self.peek()[:2] == ("op", "^"):
                self.fail("chained exponents are ambiguous; use parentheses")
        return base

    def atom(self) -> RatPoly:
        tok = self.take()
        if tok[0] == "int":
            return RatPoly([Fraction(int(tok[1]))])
        if tok[0] == "x":
            return RatPoly.x()
        if tok[:2] == ("op", "("):
            inner = self.expr()
            self.expect(")")
            return inner
        if tok[0] == "end":
            self.fail("unexpected end of input", tok)
        self.fail(f"unexpected {tok[1]!r}", tok)


def parse_poly(text: str) -> RatPoly:
    """Expand a polynomial expression exactly, e.g. ``"x^6*(x^2-2x+32/5)^2"``."""
    return _Parser(text).parse()
