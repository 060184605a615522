"""Text grammar for polynomials and 2x2 matrices.

Polynomials::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/')? unary)*      # juxtaposition multiplies
    unary  := '-' unary | power
    power  := atom ('^' INT)?
    atom   := INT | 'X' | '(' expr ')'

Division is only allowed by a non-zero constant, so ``1/3*X`` and ``X/3``
both parse. Whitespace is ignored. Matrices are ``[[a,b],[c,d]]`` with
polynomial entries.
"""
from __future__ import annotations

from fractions import Fraction

from ..errors import ParseError
from .poly import Poly


class _Parser:
    def __init__(self, text: str):
        self.text = text
        # positions refer to the original text; skip whitespace lazily
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str):
        if self.peek() != ch:
            raise ParseError(self.pos, repr(ch), self.text)
        self.pos += 1

    def at_end(self) -> bool:
        return self.peek() == ""

    def integer(self) -> int:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError(start, "integer", self.text)
        return int(self.text[start:self.pos])

    def expr(self) -> Poly:
        acc = self.term()
        while self.peek() in ("+", "-"):
            op = self.peek()
            self.pos += 1
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> Poly:
        acc = self.unary()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                acc = acc * self.unary()
            elif ch == "/":
                self.pos += 1
                where = self.pos
                div = self.unary()
                if not div.is_constant() or div.is_zero():
                    raise ParseError(where, "non-zero constant divisor", self.text)
                acc = acc / div.to_scalar()
            elif ch in ("X", "x", "(") or ch.isdigit():
                acc = acc * self.power()
            else:
                return acc

    def unary(self) -> Poly:
        if self.peek() == "-":
            self.pos += 1
            return -self.unary()
        if self.peek() == "+":
            self.pos += 1
            return self.unary()
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            self._skip()
            if self.peek() == "{":
                self.pos += 1
                n = self.integer()
                self.take("}")
            else:
                n = self.integer()
            base = base ** n
        return base

    def atom(self) -> Poly:
        ch = self.peek()
        if ch.isdigit():
            return Poly.const(self.integer())
        if ch in ("X", "x"):
            self.pos += 1
            return Poly.x()
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            self.take(")")
            return inner
        raise ParseError(self.pos, "integer, 'X' or '('", self.text)


def parse_poly(text: str) -> Poly:
    """Parse a polynomial; raises ParseError with the offending position."""
    p = _Parser(text)
    if p.at_end():
        raise ParseError(p.pos, "expression", text)
    out = p.expr()
    if not p.at_end():
        raise ParseError(p.pos, "end of input", text)
    return out


def parse_matrix(text: str) -> tuple[Poly, Poly, Poly, Poly]:
    """Parse ``[[a,b],[c,d]]`` into its four entries (row-major)."""
    p = _Parser(text)
    p.take("[")
    entries = []
    for row in range(2):
        if row:
            p.take(",")
        p.take("[")
        entries.append(p.expr())
        p.take(",")
        entries.append(p.expr())
        p.take("]")
    p.take("]")
    if not p.at_end():
        raise ParseError(p.pos, "end of input", text)
    return tuple(entries)


def _render_scalar(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_poly(p) -> str:
    """Canonical text: descending exponents, ``p/q*X^k`` terms, no spaces."""
    if not isinstance(p, Poly):
        return _render_scalar(Fraction(p))
    if p.is_zero():
        return "0"
    out = []
    for k in range(p.degree(), -1, -1):
        c = p.coeff(k)
        if c == 0:
            continue
        neg = c < 0
        mag = -c if neg else c
        if k == 0:
            body = _render_scalar(mag)
        else:
            mono = "X" if k == 1 else f"X^{k}"
            body = mono if mag == 1 else f"{_render_scalar(mag)}*{mono}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append(("-" if neg else "+") + body)
    return "".join(out)


def render_matrix(entries) -> str:
    a, b, c, d = (render_poly(e) for e in entries)
    return f"[[{a},{b}],[{c},{d}]]"
