"""The five model backends and their partial operations.

Values are kept raw (``int`` for NAT, ``Fraction`` for QNONNEG, ``Poly`` for
the polynomial models) so codecs can use ordinary operators; ``ModelElem``
is the tagged, validated wrapper for public use.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, floor
from typing import Union

from ..errors import (
    DivisionByZero,
    ModelMismatch,
    NotEuclidean,
    NotIntegerValued,
    NotMember,
    Underflow,
)
from .poly import Poly, binom_poly

Raw = Union[int, Fraction, Poly]


class ModelId(enum.Enum):
    NAT = "nat"
    M0 = "M0"
    M1 = "M1"
    M2 = "M2"
    QNONNEG = "Qnn"

    @property
    def discrete(self) -> bool:
        return self is not ModelId.QNONNEG

    @property
    def polynomial(self) -> bool:
        return self in (ModelId.M0, ModelId.M1, ModelId.M2)

    @property
    def cli_id(self) -> str:
        return self.value

    @classmethod
    def parse(cls, text: str) -> "ModelId":
        key = text.strip()
        for m in cls:
            if key.lower() in (m.value.lower(), m.name.lower()):
                return m
        if key in ("N", "ℕ"):
            return cls.NAT
        raise ValueError(f"unknown model {text!r}; expected one of nat, M0, M1, M2, Qnn")

    def __str__(self):
        return self.value


def coerce(model: ModelId, value) -> Raw:
    """Convert ``value`` to the raw carrier type of ``model`` without checking membership."""
    if isinstance(value, bool):
        raise TypeError("booleans are not model values")
    if model is ModelId.NAT:
        if isinstance(value, int):
            return value
        if isinstance(value, Poly):
            if not value.is_constant():
                raise NotMember(f"{value} is not a natural number")
            value = value.constant()
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise NotMember(f"{value} is not a natural number")
            return int(value)
        raise TypeError(f"cannot use {value!r} in {model}")
    if model is ModelId.QNONNEG:
        if isinstance(value, Poly):
            if not value.is_constant():
                raise NotMember(f"{value} is not a rational number")
            return value.constant()
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        raise TypeError(f"cannot use {value!r} in {model}")
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly.const(value)
    raise TypeError(f"cannot use {value!r} in {model}")


def zero(model: ModelId) -> Raw:
    return coerce(model, 0)


def one(model: ModelId) -> Raw:
    return coerce(model, 1)


def binomial_coords(p) -> list[int]:
    """Coordinates of ``p`` in the basis C(X,0), C(X,1), ...: the values Δᵏp(0)."""
    if not isinstance(p, Poly):
        p = Poly.const(p)
    d = p.degree()
    vals = [p(j) for j in range(d + 1)]
    out = []
    for k in range(d + 1):
        delta = sum((-1) ** (k - j) * comb(k, j) * vals[j] for j in range(k + 1))
        if delta.denominator != 1:
            raise NotIntegerValued(f"{p} is not integer-valued (difference {k} is {delta})")
        out.append(int(delta))
    return out


def from_binomial_coords(coords) -> Poly:
    out = Poly()
    for k, c in enumerate(coords):
        if c:
            out = out + binom_poly(k) * c
    return out


def is_member(model: ModelId, value) -> bool:
    try:
        v = coerce(model, value)
    except (NotMember, TypeError):
        return False
    if model is ModelId.NAT or model is ModelId.QNONNEG:
        return v >= 0
    if v.sign() < 0:
        return False
    if model is ModelId.M0:
        return v.has_integer_coeffs()
    if model is ModelId.M1:
        try:
            binomial_coords(v)
        except NotIntegerValued:
            return False
        return True
    return v.constant().denominator == 1


def check_member(model: ModelId, value) -> Raw:
    if not is_member(model, value):
        raise NotMember(f"{value} is not an element of {model}")
    return coerce(model, value)


def euc_raw(model: ModelId, a: Raw, b: Raw) -> tuple[Raw, Raw]:
    """Quotient and remainder of ``a`` by ``b`` in ``model``.

    Raises ``DivisionByZero`` for ``b == 0`` and ``NotEuclidean`` when the
    model has no such pair.
    """
    if b == 0:
        raise DivisionByZero(f"division of {a} by zero in {model}")
    if model is ModelId.NAT:
        return divmod(a, b)
    if model is ModelId.QNONNEG:
        raise NotEuclidean(model, a, b)
    q, r = _m2_divmod(a, b)
    if model is not ModelId.M2 and not (is_member(model, q) and is_member(model, r)):
        raise NotEuclidean(model, a, b)
    return q, r


def _m2_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    # a = A'X + a0; divide A' by b over Q, then fix the integer part of the
    # quotient so that the remainder lands in [0, b).
    a0 = a.constant()
    a_tail = Poly(a.dense[1:])
    p1, r1 = divmod(a_tail, b)
    t = r1 * Poly.x() + a0
    db = b.degree()
    k = floor(t.coeff(db) / b.lead())
    while t - b * k < 0:
        k -= 1
    while t - b * (k + 1) >= 0:
        k += 1
    q = p1 * Poly.x() + k
    r = t - b * k
    return q, r


def sample_member(model: ModelId, rng: random.Random, size: int = 3) -> Raw:
    """A random element of ``model``; ``size`` bounds degree and coefficient height."""
    size = max(size, 1)
    if model is ModelId.NAT:
        return rng.randint(0, 4 ** size)
    if model is ModelId.QNONNEG:
        return Fraction(rng.randint(0, 4 ** size), rng.randint(1, 2 * size + 1))
    if rng.random() < 0.25:
        return Poly.const(rng.randint(0, 3 * size))
    deg = rng.randint(1, size)
    h = 2 * size
    if model is ModelId.M0:
        cs = [rng.randint(-h, h) for _ in range(deg)] + [rng.randint(1, h)]
        return Poly(cs)
    if model is ModelId.M1:
        cs = [rng.randint(-h, h) for _ in range(deg)] + [rng.randint(1, h)]
        return from_binomial_coords(cs)
    cs = [rng.randint(-h, h)]
    for _ in range(deg - 1):
        cs.append(Fraction(rng.randint(-h, h), rng.randint(1, 4)))
    cs.append(Fraction(rng.randint(1, h), rng.randint(1, 4)))
    return Poly(cs)


@dataclass(frozen=True)
class ModelElem:
    model: ModelId
    value: Raw

    def __post_init__(self):
        object.__setattr__(self, "value", check_member(self.model, self.value))

    def _same(self, other: "ModelElem"):
        if not isinstance(other, ModelElem):
            raise TypeError(f"expected ModelElem, got {type(other).__name__}")
        if other.model is not self.model:
            raise ModelMismatch(f"{self.model} vs {other.model}")

    def __add__(self, other: "ModelElem") -> "ModelElem":
        self._same(other)
        return ModelElem(self.model, self.value + other.value)

    def __mul__(self, other: "ModelElem") -> "ModelElem":
        self._same(other)
        return ModelElem(self.model, self.value * other.value)

    def __le__(self, other: "ModelElem") -> bool:
        return leq(self, other)

    def __lt__(self, other: "ModelElem") -> bool:
        return leq(self, other) and self != other

    def __str__(self):
        from .parse import render_poly

        return render_poly(self.value)

    def to_json(self) -> dict:
        from .parse import render_poly

        return {"model": self.model.cli_id, "poly": render_poly(self.value)}


@dataclass(frozen=True)
class EucResult:
    quotient: ModelElem
    remainder: ModelElem


def elem(model: ModelId, value) -> ModelElem:
    """Build a ``ModelElem``, parsing ``value`` first when it is text."""
    if isinstance(value, str):
        from .parse import parse_poly

        value = parse_poly(value)
    return ModelElem(model, value)


def leq(a: ModelElem, b: ModelElem) -> bool:
    a._same(b)
    return a.value <= b.value


def add(a: ModelElem, b: ModelElem) -> ModelElem:
    return a + b


def mul(a: ModelElem, b: ModelElem) -> ModelElem:
    return a * b


def try_sub(a: ModelElem, b: ModelElem) -> ModelElem:
    """The unique z with b + z = a, or ``Underflow`` when b > a."""
    a._same(b)
    if not b.value <= a.value:
        raise Underflow(f"{b} exceeds {a} in {a.model}")
    return ModelElem(a.model, a.value - b.value)


def try_euc_div(a: ModelElem, b: ModelElem) -> EucResult:
    a._same(b)
    q, r = euc_raw(a.model, a.value, b.value)
    return EucResult(ModelElem(a.model, q), ModelElem(a.model, r))
