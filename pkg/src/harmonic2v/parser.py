"""Recursive-descent parser for polynomial expressions.

Grammar: rational literals (``3``, ``-5/7``), the imaginary unit ``i``,
variables ``x1..x<m>`` and ``u1..u<m>``, operators ``+ - * ^`` and
parentheses.  ``^`` takes a non-negative integer exponent.  Printing a
polynomial with ``str`` produces text this parser accepts, and parsing it
back reproduces the polynomial exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PolySyntaxError, VariableOutOfRange
from .poly import Polynomial
from .rationals import GAUSSIAN_I


class _Parser:
    def __init__(self, text: str, m: int):
        self.text = text
        self.m = m
        self.pos = 0

    def error(self, message: str):
        raise PolySyntaxError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def parse(self) -> Polynomial:
        value = self.expression()
        self.skip_ws()
        if self.pos != len(self.text):
            self.error("unexpected trailing input")
        return value

    def expression(self) -> Polynomial:
        sign = 1
        ch = self.peek()
        if ch in "+-":
            self.pos += 1
            sign = -1 if ch == "-" else 1
        total = self.term()
        if sign < 0:
            total = -total
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                total = total + self.term()
            elif ch == "-":
                self.pos += 1
                total = total - self.term()
            else:
                return total

    def term(self) -> Polynomial:
        total = self.power()
        while self.peek() == "*":
            self.pos += 1
            total = total * self.power()
        return total

    def power(self) -> Polynomial:
        base = self.atom()
        while self.peek() == "^":
            self.pos += 1
            exp = self.natural()
            out = Polynomial.constant(self.m, 1)
            for _ in range(exp):
                out = out * base
            base = out
        return base

    def atom(self) -> Polynomial:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.expression()
            self.expect(")")
            return inner
        if ch == "-":
            self.pos += 1
            return -self.atom()
        if ch.isdigit():
            return Polynomial.constant(self.m, self.rational())
        if ch == "i" and not self._lookahead_digit():
            self.pos += 1
            return Polynomial.constant(self.m, GAUSSIAN_I)
        if ch in ("x", "u"):
            return self.variable(ch)
        self.error("expected a rational, 'i', a variable, or '('")

    def _lookahead_digit(self) -> bool:
        nxt = self.pos + 1
        return nxt < len(self.text) and self.text[nxt].isdigit()

    def natural(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected a non-negative integer")
        return int(self.text[start : self.pos])

    def rational(self) -> Fraction:
        num = self.natural()
        if self.peek() == "/":
            self.pos += 1
            den = self.natural()
            if den == 0:
                self.error("zero denominator")
            return Fraction(num, den)
        return Fraction(num)

    def variable(self, axis: str) -> Polynomial:
        self.pos += 1
        index = self.natural()
        if not 1 <= index <= self.m:
            raise VariableOutOfRange(f"{axis}{index} exceeds ambient dimension m={self.m}")
        return Polynomial.variable(self.m, axis, index)


def parse_poly(text: str, m: int) -> Polynomial:
    """Parse an expression into an exact polynomial over m ambient dimensions."""
    return _Parser(text, m).parse()
