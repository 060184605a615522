"""Gödel-style sequence codes built from a quadratic pairing and the β-function.

A code is ``s = <n, <u, v>>`` where ``n`` is the length and the i-th entry
is ``u mod (1 + (i+1)v)``. Encoding picks ``v = c!`` and solves for ``u``
with the Chinese Remainder Theorem. Any common prime factor of two moduli
divides the difference of their indices, hence is below the length; so
``c >= length`` makes the moduli pairwise coprime and ``c! >= max(xs)``
makes each one exceed its entry.

Two choices of ``c`` are offered. ``"compact"`` (the default) takes the
least ``c`` meeting both conditions. ``"naive"`` takes
``c = max(length, max(xs)) + 1``, which is simpler to state but gives codes
of millions of bits once entries reach 10^4. Decoding does not care which
was used. Big-number work goes through gmpy2.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import gmpy2

from .errors import IndexOutOfRange, NotAPair, NotASequence


def _pair(x, y):
    s = x + y
    return s * s + x


def cantor_pair(x: int, y: int) -> int:
    """<x, y> = (x + y)^2 + x."""
    if x < 0 or y < 0:
        raise ValueError("pairing is defined on naturals")
    return int(_pair(gmpy2.mpz(x), y))


def _unpair(p) -> tuple:
    if p < 0:
        raise NotAPair(f"{p} is negative")
    s, x = gmpy2.isqrt_rem(gmpy2.mpz(p))
    if x > s:
        raise NotAPair(f"{p} is not in the range of the pairing")
    return x, s - x


def cantor_unpair(p: int) -> tuple[int, int]:
    x, y = _unpair(p)
    return int(x), int(y)


@lru_cache(maxsize=64)
def _fac(c: int):
    return gmpy2.fac(c)


def _modulus(v, i: int):
    return 1 + (i + 1) * v


def beta_get(w: int, i: int) -> int:
    """The unique x < 1 + (i+1)v with x ≡ u, where w = <u, v>."""
    if i < 0:
        raise IndexOutOfRange(f"negative index {i}")
    u, v = _unpair(w)
    return int(u % _modulus(v, i))


@dataclass(frozen=True)
class BetaSeq:
    code: int

    def __post_init__(self):
        if not isinstance(self.code, int) or self.code < 0:
            raise NotASequence(f"{self.code!r} is not a natural number")

    def parts(self) -> tuple[int, int, int]:
        """(length, u, v); raises NotASequence if the code does not unpack."""
        return tuple(int(t) for t in _parts(self.code))

    def __len__(self):
        return beta_length(self)


def _parts(code: int):
    try:
        n, w = _unpair(code)
    except NotAPair:
        raise NotASequence(f"{code} is not a pair") from None
    if n == 0:
        return n, gmpy2.mpz(0), gmpy2.mpz(0)
    try:
        u, v = _unpair(w)
    except NotAPair:
        raise NotASequence(f"second component of {code} is not a pair") from None
    return n, u, v


def _factorial_index(xs: list[int], modulus: str) -> int:
    n, top = len(xs), max(xs)
    if modulus == "naive":
        return max(n, top) + 1
    if modulus != "compact":
        raise ValueError(f"unknown modulus choice {modulus!r}")
    c, f = max(n, 1), _fac(max(n, 1))
    while f < top:
        c += 1
        f *= c
    return c


def beta_encode(xs: Iterable[int], modulus: str = "compact") -> BetaSeq:
    xs = list(xs)
    if any(x < 0 for x in xs):
        raise ValueError("entries must be naturals")
    n = len(xs)
    if n == 0:
        return BetaSeq(0)
    v = _fac(_factorial_index(xs, modulus))
    u = gmpy2.mpz(xs[0])
    m = _modulus(v, 0)
    for i in range(1, n):
        mi = _modulus(v, i)
        t = ((xs[i] - u % mi) * gmpy2.invert(m % mi, mi)) % mi
        u += m * t
        m *= mi
    return BetaSeq(int(_pair(gmpy2.mpz(n), _pair(u, v))))


def beta_length(s: BetaSeq) -> int:
    n, _, _ = _parts(s.code)
    return int(n)


def beta_project(s: BetaSeq, i: int) -> int:
    n, u, v = _parts(s.code)
    if not 0 <= i < n:
        raise IndexOutOfRange(f"index {i} outside a sequence of length {n}")
    return int(u % _modulus(v, i))


def beta_decode(s: BetaSeq) -> list[int]:
    n, u, v = _parts(s.code)
    return [int(u % _modulus(v, i)) for i in range(int(n))]


def beta_append(s: BetaSeq, x: int, modulus: str = "compact") -> BetaSeq:
    """A code for decode(s) + [x], obtained by re-encoding."""
    return beta_encode(beta_decode(s) + [x], modulus)


def beta_seq_star(code: int) -> bool:
    """Whether ``code`` satisfies the sequence predicate: code = <z, w> and each β(·, i, w), i < z, has a value ≤ w."""
    try:
        n, w = _unpair(code)
    except NotAPair:
        return False
    if n == 0:
        return True
    try:
        u, _ = _unpair(w)
    except NotAPair:
        return False
    return u <= w
