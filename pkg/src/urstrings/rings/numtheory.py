"""Divisibility helpers: gcd, the primal split, and the two notions of power of two."""
from __future__ import annotations

import math

from ..errors import PreconditionViolated
from .models import ModelId, coerce, is_member


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def primal_split(x: int, y: int, z: int) -> tuple[int, int]:
    """Split x | y*z as x = u*v with u | y and v | z, taking u = gcd(x, y)."""
    if x == 0 and y == 0 and z == 0:
        raise PreconditionViolated("primal_split needs one of x, y, z non-zero")
    if x == 0:
        if y * z != 0:
            raise PreconditionViolated(f"0 does not divide {y * z}")
    elif (y * z) % x:
        raise PreconditionViolated(f"{x} does not divide {y}*{z}")
    u = math.gcd(x, y)
    v = x // u if u else 1
    return u, v


def pow2_smullyan(x: int) -> bool:
    """Every divisor of x is 1 or even."""
    return x > 0 and x & (x - 1) == 0


def pow2_tarski(x: int) -> bool:
    """x has no factor of the form 2y+3. Over the naturals this agrees with Smullyan's notion."""
    return x > 0 and x & (x - 1) == 0


def divides(model: ModelId, y, x) -> bool:
    """Whether some z in ``model`` has x = y*z."""
    y = coerce(model, y)
    x = coerce(model, x)
    if y == 0:
        return x == 0
    if model is ModelId.NAT:
        return x % y == 0
    if model is ModelId.QNONNEG:
        return True
    q, r = divmod(x, y)
    return r.is_zero() and is_member(model, q)


def pow2_refute(model: ModelId, x, witness) -> bool:
    """Check a witness that ``x`` is not a power of two in ``model``.

    A single value ``y`` refutes Smullyan's definition when y | x, y != 1 and
    2 does not divide y. A pair ``(y, z)`` refutes Tarski's definition when
    x = (2y+3)z.
    """
    if not is_member(model, x):
        return False
    if isinstance(witness, tuple):
        y, z = witness
        if not (is_member(model, y) and is_member(model, z)):
            return False
        y, z = coerce(model, y), coerce(model, z)
        return coerce(model, x) == (2 * y + 3) * z
    y = witness
    if not is_member(model, y):
        return False
    return divides(model, y, x) and coerce(model, y) != 1 and not divides(model, 2, y)

