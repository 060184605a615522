"""Exact univariate polynomials over the rationals in the indeterminate X.

``Poly`` is immutable and hashable. Arithmetic mixes freely with ``int`` and
``Fraction``; a constant polynomial compares and hashes equal to the
corresponding number. Ordering is the dominance order: ``p < q`` iff the
leading coefficient of ``q - p`` is positive.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not an exact scalar: {x!r}")


class Poly:
    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Union[Iterable[Scalar], Mapping[int, Scalar], Scalar] = ()):
        if isinstance(coeffs, (int, Fraction)):
            dense = [_frac(coeffs)]
        elif isinstance(coeffs, Mapping):
            if not coeffs:
                dense = []
            else:
                if min(coeffs) < 0:
                    raise ValueError("negative exponent")
                dense = [Fraction(0)] * (max(coeffs) + 1)
                for k, v in coeffs.items():
                    dense[k] = _frac(v)
        else:
            dense = [_frac(v) for v in coeffs]
        while dense and dense[-1] == 0:
            dense.pop()
        self._c: tuple[Fraction, ...] = tuple(dense)
        self._hash = None

    # -- construction ------------------------------------------------------
    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, v: Scalar) -> "Poly":
        return cls((v,))

    @classmethod
    def _raw(cls, dense: tuple) -> "Poly":
        p = cls.__new__(cls)
        d = list(dense)
        while d and d[-1] == 0:
            d.pop()
        p._c = tuple(d)
        p._hash = None
        return p

    # -- inspection ---------------------------------------------------------
    @property
    def coeffs(self) -> dict[int, Fraction]:
        """Sparse exponent -> coefficient map with no zero entries."""
        return {k: c for k, c in enumerate(self._c) if c != 0}

    @property
    def dense(self) -> tuple[Fraction, ...]:
        return self._c

    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._c) - 1

    def coeff(self, k: int) -> Fraction:
        return self._c[k] if 0 <= k < len(self._c) else Fraction(0)

    def lead(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def constant(self) -> Fraction:
        return self.coeff(0)

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return len(self._c) <= 1

    def sign(self) -> int:
        if not self._c:
            return 0
        return 1 if self._c[-1] > 0 else -1

    def has_integer_coeffs(self) -> bool:
        return all(c.denominator == 1 for c in self._c)

    def to_scalar(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.constant()

    # -- arithmetic --------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly._raw((_frac(other),))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._c, o._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return Poly._raw(tuple(out))

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(tuple(-v for v in self._c))

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly._raw(tuple(v * other for v in self._c))
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return Poly._raw(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Poly._raw(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Poly._raw((Fraction(1),))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        """Division by a non-zero scalar, or by a polynomial dividing exactly."""
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero")
            return Poly._raw(tuple(v / other for v in self._c))
        if isinstance(other, Poly):
            q, r = divmod(self, other)
            if not r.is_zero():
                raise ValueError(f"{other} does not divide {self} in Q[X]")
            return q
        return NotImplemented

    def __divmod__(self, other):
        """Division with remainder in Q[X]: deg(remainder) < deg(divisor)."""
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        db = o.degree()
        lb = o.lead()
        if len(rem) - 1 < db:
            return Poly._raw(()), self
        quo = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] / lb
            quo[k] = c
            if c:
                for j, bj in enumerate(o._c):
                    rem[k + j] -= c * bj
        return Poly._raw(tuple(quo)), Poly._raw(tuple(rem[:db]))

    def __call__(self, at):
        """Evaluate at a scalar, or compose with another polynomial."""
        if isinstance(at, (int, Fraction, Poly)):
            acc = Fraction(0) if not isinstance(at, Poly) else Poly._raw(())
            for c in reversed(self._c):
                acc = acc * at + c
            return acc
        raise TypeError(f"cannot evaluate at {at!r}")

    def subst(self, p: "Poly") -> "Poly":
        out = self(p)
        return out if isinstance(out, Poly) else Poly.const(out)

    # -- comparison --------------------------------------------------------
    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        if self._hash is None:
            if len(self._c) <= 1:
                self._hash = hash(self.constant())
            else:
                self._hash = hash(self._c)
        return self._hash

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is None:
            raise TypeError
        return (self - o).sign()

    def __lt__(self, other):
        try:
            return self._cmp(other) < 0
        except TypeError:
            return NotImplemented

    def __le__(self, other):
        try:
            return self._cmp(other) <= 0
        except TypeError:
            return NotImplemented

    def __gt__(self, other):
        try:
            return self._cmp(other) > 0
        except TypeError:
            return NotImplemented

    def __ge__(self, other):
        try:
            return self._cmp(other) >= 0
        except TypeError:
            return NotImplemented

    def __bool__(self):
        return bool(self._c)

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        from .parse import render_poly

        return render_poly(self)


X = Poly.x()


def binom_poly(k: int) -> Poly:
    """C(X, k) = X(X-1)...(X-k+1)/k! as a polynomial."""
    out = Poly.const(1)
    for i in range(k):
        out = out * Poly((-i, 1)) / (i + 1)
    return out
