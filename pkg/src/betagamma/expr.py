"""Parser for operator expressions in S(V).

Grammar::

    expr   := term | expr '+' term | expr '-' term
    term   := rational? factor
    factor := 'beta(' name ',' nat ')' | 'gamma(' name ',' nat ')'
            | ':' factor factor ':' | 'D(' expr ')' | '(' expr ')'

``beta(x, k)`` is the field d^k beta^x, whose state is k! beta^x(-k-1)|0>. A rational
coefficient may be written ``3``, ``-1/2`` or ``2*beta(e,0)``. A leading sign is
accepted on the first term.
"""

from __future__ import annotations

from fractions import Fraction

from .fock import FockState, beta, derivative, gamma, wick
from .rep import LieRepData


class ExprError(ValueError):
    def __init__(self, message: str, pos: int, text: str):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos
        self.text = text


class _Parser:
    def __init__(self, text: str, rep: LieRepData):
        self.text = text
        self.rep = rep
        self.pos = 0

    def error(self, message: str, pos: int | None = None):
        raise ExprError(message, self.pos if pos is None else pos, self.text)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, token: str) -> bool:
        self.skip()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str) -> None:
        if not self.accept(token):
            self.error(f"expected {token!r}")

    def parse(self) -> FockState:
        if not self.text.strip():
            self.error("empty expression")
        value = self.expr()
        self.skip()
        if self.pos != len(self.text):
            self.error("unexpected trailing input")
        return value

    def expr(self) -> FockState:
        sign = 1
        if self.accept("-"):
            sign = -1
        else:
            self.accept("+")
        value = sign * self.term()
        while True:
            if self.accept("+"):
                value = value + self.term()
            elif self.accept("-"):
                value = value - self.term()
            else:
                return value

    def rational(self) -> Fraction | None:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            return None
        num = int(self.text[start : self.pos])
        den = 1
        if self.text.startswith("/", self.pos):
            self.pos += 1
            dstart = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if self.pos == dstart:
                self.error("expected denominator")
            den = int(self.text[dstart : self.pos])
            if den == 0:
                self.error("zero denominator", dstart)
        self.accept("*")
        return Fraction(num, den)

    def term(self) -> FockState:
        coef = self.rational()
        if coef is not None and self.peek() in ("", "+", "-", ")"):
            # a bare number is a multiple of the vacuum
            return coef * FockState.vacuum()
        value = self.factor()
        return value if coef is None else coef * value

    def factor(self) -> FockState:
        self.skip()
        if self.accept("beta("):
            return self.field(beta)
        if self.accept("gamma("):
            return self.field(gamma)
        if self.accept("D("):
            inner = self.expr()
            self.expect(")")
            return derivative(inner)
        if self.accept("("):
            inner = self.expr()
            self.expect(")")
            return inner
        if self.accept(":"):
            left = self.factor()
            right = self.factor()
            self.expect(":")
            return wick(left, right)
        self.error("expected a factor")

    def field(self, build) -> FockState:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in ",)":
            self.pos += 1
        label = self.text[start : self.pos].strip()
        try:
            index = self.rep.v_index(label)
        except KeyError:
            self.error(f"unknown basis label {label!r}", start)
        self.expect(",")
        self.skip()
        kstart = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == kstart:
            self.error("expected a derivative order")
        k = int(self.text[kstart : self.pos])
        self.expect(")")
        return build(index, k)


def parse_expr(text: str, rep: LieRepData) -> FockState:
    return _Parser(text, rep).parse()
