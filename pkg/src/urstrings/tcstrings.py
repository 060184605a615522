"""Concatenation theory on concrete words.

Three pieces live here:

* partitions of a word, their common refinement (a pull-back of the two
  refinement maps) and the unique embedding between partitions;
* ur-strings over words, where the component ``x`` (a b-free word) is
  stored as ``b x``;
* the rewriting model with the single rule ``abc -> b``, whose normal
  forms under ``x ⋄ y = nf(xy)`` satisfy the editors principle and both
  cancellations but not bi-cancellation.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Sequence

from .errors import BaseMismatch, DomainViolation, NoMorphism, NoWitness, PreconditionViolated
from .sides import Side


# -- partitions -------------------------------------------------------------

@dataclass(frozen=True)
class Partition:
    parts: tuple[str, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(p == "" for p in parts):
            raise ValueError("partition parts must be non-empty")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: str) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Pipe-separated parts, e.g. ``"ab|c"``; the empty text is the empty partition."""
        return cls(tuple(text.split("|")) if text else ())

    @property
    def base(self) -> str:
        return "".join(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return "|".join(self.parts)


def partitions_of(w: str) -> list[Partition]:
    """Every partition of ``w`` (2^(|w|-1) of them for non-empty w)."""
    if not w:
        return [Partition(())]
    out = []
    for cuts in product((False, True), repeat=len(w) - 1):
        parts, start = [], 0
        for i, cut in enumerate(cuts, start=1):
            if cut:
                parts.append(w[start:i])
                start = i
        parts.append(w[start:])
        out.append(Partition(tuple(parts)))
    return out


def refinement_check(gamma: Partition, alpha: Partition, f: Sequence[int]) -> bool:
    """Whether f is a partition morphism gamma -> alpha: surjective, weakly monotone, blockwise."""
    f = list(f)
    if len(f) != len(gamma) or gamma.base != alpha.base:
        return False
    if not f:
        return len(alpha) == 0
    if f[0] != 0 or f[-1] != len(alpha) - 1:
        return False
    if any(not (0 <= t - s <= 1) for s, t in zip(f, f[1:])):
        return False
    blocks = [""] * len(alpha)
    for part, j in zip(gamma.parts, f):
        blocks[j] += part
    return tuple(blocks) == alpha.parts


def embed(delta: Partition, gamma: Partition) -> list[int]:
    """The unique morphism delta -> gamma, found by walking both partitions left to right."""
    if delta.base != gamma.base:
        raise BaseMismatch(f"{delta} and {gamma} partition different words")
    out, j, acc = [], 0, ""
    for part in delta.parts:
        if j >= len(gamma):
            raise NoMorphism(f"{delta} does not refine {gamma}")
        acc += part
        out.append(j)
        target = gamma.parts[j]
        if acc == target:
            j, acc = j + 1, ""
        elif not target.startswith(acc):
            raise NoMorphism(f"{delta} does not refine {gamma}")
    return out


def _psing(z: str) -> tuple[str, ...]:
    return (z,) if z else ()


def _refine(alpha: tuple, beta: tuple) -> tuple[tuple, list, list]:
    if not alpha and not beta:
        return (), [], []
    u, v = alpha[-1], beta[-1]
    a0, b0 = alpha[:-1], beta[:-1]
    if len(u) >= len(v):
        # alpha0 · z = beta0 and u = z v
        z = u[: len(u) - len(v)]
        g_parts, f, g = _refine(a0 + _psing(z), b0)
        return g_parts + (v,), f + [len(a0)], g + [len(b0)]
    z = v[: len(v) - len(u)]
    g_parts, f, g = _refine(a0, b0 + _psing(z))
    return g_parts + (u,), f + [len(a0)], g + [len(b0)]


def common_refinement(alpha: Partition, beta: Partition) -> tuple[Partition, list[int], list[int]]:
    """The coarsest common refinement gamma with its maps f: gamma -> alpha, g: gamma -> beta.

    Peels the last parts: if u is the longer of the two last parts, then
    u = z v and the problem recurses on (alpha0 + (z), beta0).
    """
    if alpha.base != beta.base:
        raise BaseMismatch(f"{alpha} and {beta} partition different words")
    parts, f, g = _refine(alpha.parts, beta.parts)
    return Partition(parts), f, g


# -- ur-strings over words --------------------------------------------------

def urs_str_singleton(x: str) -> str:
    if "b" in x:
        raise DomainViolation(f"{x!r} is not b-free")
    return "b" + x


def _check_urs(s: str) -> str:
    if s and not s.startswith("b"):
        raise DomainViolation(f"{s!r} is neither empty nor starts with b")
    return s


def urs_str_concat(s: str, t: str) -> str:
    return _check_urs(s) + _check_urs(t)


def urs_str_decode(s: str) -> list[str]:
    _check_urs(s)
    return s.split("b")[1:] if s else []


def urs_str_encode(xs: Sequence[str]) -> str:
    return "".join(urs_str_singleton(x) for x in xs)


# -- the abc -> b rewriting model -------------------------------------------

def srs_normalize(w: str) -> str:
    """Innermost-first reduction with a stack; the system is confluent so any order agrees."""
    stack: list[str] = []
    for ch in w:
        if ch not in "abc":
            raise ValueError(f"letter {ch!r} is not in {{a, b, c}}")
        stack.append(ch)
        if ch == "c" and len(stack) >= 3 and stack[-3] == "a" and stack[-2] == "b":
            del stack[-3:]
            stack.append("b")
    return "".join(stack)


def srs_is_normal(w: str) -> bool:
    return "abc" not in w


def srs_concat(x: str, y: str) -> str:
    return srs_normalize(srs_normalize(x) + srs_normalize(y))


def srs_is_atom(w: str) -> bool:
    """Atoms of the model are exactly a and c.

    The count of b's is invariant under the rule, so a and c only arise
    from themselves; b = a ⋄ bc is decomposable, and a longer normal word
    splits at its first letter without any reduction.
    """
    return w in ("a", "c")


@lru_cache(maxsize=None)
def srs_reducts(w: str) -> frozenset:
    """All normal forms reachable from w along any reduction order."""
    hits = [i for i in range(len(w) - 2) if w[i:i + 3] == "abc"]
    if not hits:
        return frozenset((w,))
    out = set()
    for i in hits:
        out |= srs_reducts(w[:i] + "b" + w[i + 3:])
    return frozenset(out)


def srs_confluent(w: str) -> bool:
    return srs_reducts(w) == frozenset((srs_normalize(w),))


def _side_of(x, y, u, v, w) -> Side | None:
    left = srs_concat(x, w) == u and y == srs_concat(w, v)
    right = x == srs_concat(u, w) and srs_concat(w, y) == v
    if left and right:
        return Side.BOTH
    if left:
        return Side.LEFT
    if right:
        return Side.RIGHT
    return None


def _substrings(*words: str) -> set[str]:
    out = {""}
    for w in words:
        for i in range(len(w)):
            for j in range(i + 1, len(w) + 1):
                out.add(w[i:j])
    return out


def _candidates(x: str, y: str, u: str, v: str, bound: int):
    subs = _substrings(x, y, u, v, x + y, u + v)
    yield from sorted(subs, key=lambda s: (len(s), s))
    pads = [""]
    for k in range(1, bound + 1):
        pads += ["a" * k, "c" * k, "a" * k + "b", "b" + "c" * k]
    for p in pads:
        for s in sorted(subs, key=lambda s: (len(s), s)):
            yield p + s
            yield s + p


def srs_editors_witness(x: str, y: str, u: str, v: str) -> tuple[Side, str]:
    """A normal w with (x⋄w = u and y = w⋄v) or (x = u⋄w and w⋄y = v)."""
    for s in (x, y, u, v):
        if not srs_is_normal(s):
            raise PreconditionViolated(f"{s!r} is not in normal form")
    if srs_concat(x, y) != srs_concat(u, v):
        raise PreconditionViolated("x ⋄ y differs from u ⋄ v")
    bound = len(x) + len(y) + 3
    seen = set()
    for w in _candidates(x, y, u, v, bound):
        w = srs_normalize(w)
        if w in seen or len(w) > bound:
            continue
        seen.add(w)
        side = _side_of(x, y, u, v, w)
        if side is not None:
            return side, w
    raise NoWitness(f"x={x!r} y={y!r} u={u!r} v={v!r}", "no editors witness within the search bound")


def srs_bicancel_counterexample() -> tuple[str, str, str]:
    """(x, u, v) with u ⋄ x ⋄ v = x although u and v are not empty."""
    return ("b", "a", "c")
