"""Length-first (bijective base 2) coding of {a,b}-words and the ur-strings built on it.

The word ``w`` is coded by ``sm(ε) = 0``, ``sm(wa) = 2 sm(w) + 1`` and
``sm(wb) = 2 sm(w) + 2``. Concatenation becomes ``m ⊛ n = m·ℓ(n) + n``
where ``ℓ(n)`` is the largest power of two not exceeding ``n + 1``.

An ur-string of naturals is a pair ``(mask, payload)`` of codes: the
component ``u`` contributes ``b Λ(u)`` to the mask and ``b u`` to the
payload, so the mask records where each component starts and how long it is.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import EmptyString, InvalidUrString, Malformed, PreconditionViolated
from .sides import Side

A_CODE = 1
B_CODE = 2


def sm_encode(s: str) -> int:
    n = 0
    for ch in s:
        if ch == "a":
            n = 2 * n + 1
        elif ch == "b":
            n = 2 * n + 2
        else:
            raise ValueError(f"letter {ch!r} is not in {{a, b}}")
    return n


def sm_decode(n: int) -> str:
    if n < 0:
        raise ValueError("codes are naturals")
    out = []
    while n:
        if n & 1:
            out.append("a")
            n = (n - 1) >> 1
        else:
            out.append("b")
            n = (n - 2) >> 1
    return "".join(reversed(out))


def length(n: int) -> int:
    """Length of the word coded by ``n``."""
    return (n + 1).bit_length() - 1


def ell(n: int) -> int:
    return 1 << length(n)


def dyad_concat(m: int, n: int) -> int:
    return m * ell(n) + n


def concat_all(codes: Iterable[int]) -> int:
    out = 0
    for c in codes:
        out = dyad_concat(out, c)
    return out


def lambda_tally(n: int) -> int:
    """Code of the all-a word of the same length."""
    return ell(n) - 1


def is_b_free(n: int) -> bool:
    return n == ell(n) - 1


def dyad_pair(x: int, y: int) -> int:
    """Λ(x) b x y."""
    return concat_all((lambda_tally(x), B_CODE, x, y))


def dyad_unpair(p: int) -> tuple[int, int]:
    """Inverse of ``dyad_pair``; the first b marks the length of x."""
    w = sm_decode(p)
    k = w.find("b")
    if k < 0 or len(w) < 2 * k + 1:
        raise PreconditionViolated(f"{p} is not a dyadic pair")
    return sm_encode(w[k + 1:2 * k + 1]), sm_encode(w[2 * k + 1:])


def dyad_split_at(x: int, tally: int) -> tuple[int, int]:
    """Write x = u ⊛ v with Λ(v) = tally."""
    if not is_b_free(tally):
        raise PreconditionViolated(f"{tally} is not b-free")
    big = ell(tally)
    if big > ell(x):
        raise PreconditionViolated(f"tally {tally} is longer than {x}")
    u, r = divmod(x - (big - 1), big)
    return u, r + big - 1


@dataclass(frozen=True)
class SmUrString:
    mask: int
    payload: int

    def problems(self) -> str | None:
        """Why this pair is not an ur-string, or None when it is."""
        if self.mask < 0 or self.payload < 0:
            return "negative code"
        if lambda_tally(self.mask) != lambda_tally(self.payload):
            return "mask and payload differ in length"
        m = sm_decode(self.mask)
        if m and m[0] != "b":
            return "non-empty mask must start with b"
        p = sm_decode(self.payload)
        for i, ch in enumerate(m):
            if ch == "b" and p[i] != "b":
                return f"payload lacks the separator at position {i}"
        return None

    def is_valid(self) -> bool:
        return self.problems() is None

    def __str__(self):
        return f"({self.mask}, {self.payload})"


def _require(alpha: SmUrString, exc=InvalidUrString) -> SmUrString:
    why = alpha.problems()
    if why:
        raise exc(f"{alpha}: {why}")
    return alpha


def urs_empty() -> SmUrString:
    return SmUrString(0, 0)


def urs_singleton(n: int) -> SmUrString:
    if n < 0:
        raise ValueError("components are naturals")
    return SmUrString(dyad_concat(B_CODE, lambda_tally(n)), dyad_concat(B_CODE, n))


def urs_concat(alpha: SmUrString, beta: SmUrString) -> SmUrString:
    _require(alpha)
    _require(beta)
    return SmUrString(dyad_concat(alpha.mask, beta.mask), dyad_concat(alpha.payload, beta.payload))


def urs_from_list(xs: Iterable[int]) -> SmUrString:
    out = urs_empty()
    for x in xs:
        out = urs_concat(out, urs_singleton(x))
    return out


def urs_frege(alpha: SmUrString) -> int:
    _require(alpha)
    return dyad_pair(alpha.mask, alpha.payload)


def urs_decode(alpha: SmUrString) -> list[int]:
    _require(alpha, Malformed)
    m = sm_decode(alpha.mask)
    p = sm_decode(alpha.payload)
    out = []
    i = 0
    while i < len(m):
        j = m.find("b", i + 1)
        if j < 0:
            j = len(m)
        out.append(sm_encode(p[i + 1:j]))
        i = j
    return out


def urs_pop(alpha: SmUrString) -> tuple[SmUrString, int]:
    """Split off the last component: alpha = rest ⋆ [last]."""
    _require(alpha)
    if alpha.mask == 0:
        raise EmptyString("cannot pop the empty ur-string")
    m = sm_decode(alpha.mask)
    tail = len(m) - m.rfind("b")
    rest_mask, _ = dyad_split_at(alpha.mask, (1 << tail) - 1)
    rest_payload, last = dyad_split_at(alpha.payload, (1 << tail) - 1)
    _, value = dyad_split_at(last, (1 << (tail - 1)) - 1)
    return SmUrString(rest_mask, rest_payload), value


def urs_editors_split(alpha, beta, gamma, delta) -> tuple[Side, SmUrString]:
    for u in (alpha, beta, gamma, delta):
        _require(u)
    if urs_concat(alpha, beta) != urs_concat(gamma, delta):
        raise PreconditionViolated("alpha ⋆ beta differs from gamma ⋆ delta")
    la, lg = ell(alpha.mask), ell(gamma.mask)
    if la == lg:
        return Side.BOTH, urs_empty()
    short, long_ = (alpha, gamma) if la < lg else (gamma, alpha)
    scale = ell(long_.mask) // ell(short.mask)
    eta = SmUrString(long_.mask - short.mask * scale, long_.payload - short.payload * scale)
    return (Side.LEFT if la < lg else Side.RIGHT), eta
