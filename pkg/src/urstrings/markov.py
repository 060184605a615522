"""Markov coding: words and ur-strings as 2x2 matrices of determinant 1.

``a`` and ``b`` become ``A = [[1,1],[0,1]]`` and ``B = [[1,0],[1,1]]``,
concatenation is matrix product, and the ur-string ``[x0, ..., xk]`` is the
product of the blocks ``[x] = B A^x``. Entries live in any of the model
backends; signed intermediates (inverses, the editors matrix) are plain
4-tuples of raw values and only re-enter ``Mat2`` once shown non-negative.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import (
    DecodeBudgetExceeded,
    DegreeTooLow,
    EmptyString,
    ModelMismatch,
    NoWitness,
    NotEuclidean,
    NotMember,
    OutOfBounds,
    PreconditionViolated,
    UnsupportedModel,
)
from .rings import ModelId, Poly, coerce, euc_raw, is_member, render_matrix, render_poly
from .sides import Side

Quad = tuple  # (a, b, c, d), row-major, possibly with negative entries


class Letter(enum.Enum):
    A = "A"
    B = "B"
    EMPTY = ""

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Mat2:
    model: ModelId
    a: object
    b: object
    c: object
    d: object

    def __post_init__(self):
        for name in "abcd":
            v = getattr(self, name)
            if not is_member(self.model, v):
                raise NotMember(f"entry {name} = {render_poly(v)} is not in {self.model}")
            object.__setattr__(self, name, coerce(self.model, v))
        if self.a * self.d - self.b * self.c != 1:
            raise PreconditionViolated(f"{render_matrix(self.entries)} has determinant other than 1")

    @property
    def entries(self) -> Quad:
        return (self.a, self.b, self.c, self.d)

    def __mul__(self, other: "Mat2") -> "Mat2":
        return mat_mul(self, other)

    def is_identity(self) -> bool:
        return self.entries == (1, 0, 0, 1)

    def with_model(self, model: ModelId) -> "Mat2":
        return Mat2(model, *self.entries)

    def inverse_quad(self) -> Quad:
        return (self.d, -self.b, -self.c, self.a)

    def __str__(self):
        return render_matrix(self.entries)


def quad_mul(x: Quad, y: Quad) -> Quad:
    a, b, c, d = x
    e, f, g, h = y
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def quad_inverse(x: Quad) -> Quad:
    a, b, c, d = x
    return (d, -b, -c, a)


def _nonneg(q: Quad) -> bool:
    return all(v >= 0 for v in q)


def mat_from_quad(model: ModelId, q: Quad) -> Mat2:
    return Mat2(model, *q)


def mat_mul(x: Mat2, y: Mat2) -> Mat2:
    if x.model is not y.model:
        raise ModelMismatch(f"{x.model} vs {y.model}")
    return Mat2(x.model, *quad_mul(x.entries, y.entries))


def mat_identity(model: ModelId) -> Mat2:
    return Mat2(model, 1, 0, 0, 1)


def atom_A(model: ModelId) -> Mat2:
    return Mat2(model, 1, 1, 0, 1)


def atom_B(model: ModelId) -> Mat2:
    return Mat2(model, 1, 0, 1, 1)


def pow_A(model: ModelId, n) -> Mat2:
    return Mat2(model, 1, n, 0, 1)


def pow_B(model: ModelId, n) -> Mat2:
    return Mat2(model, 1, 0, n, 1)


def power(model: ModelId, letter: Letter, n) -> Mat2:
    return pow_A(model, n) if letter is Letter.A else pow_B(model, n)


def encode_string(model: ModelId, w: str) -> Mat2:
    out = (1, 0, 0, 1)
    for ch in w:
        if ch == "a":
            out = quad_mul(out, (1, 1, 0, 1))
        elif ch == "b":
            out = quad_mul(out, (1, 0, 1, 1))
        else:
            raise ValueError(f"letter {ch!r} is not in {{a, b}}")
    return Mat2(model, *out)


def last_letter(alpha: Mat2) -> Letter:
    """Compare the columns: the larger one belongs to the last letter."""
    a, b, c, d = alpha.entries
    if (a < b and c <= d) or (a <= b and c < d):
        return Letter.A
    if (b < a and d <= c) or (b <= a and d < c):
        return Letter.B
    return Letter.EMPTY


def pop_letter(alpha: Mat2) -> tuple[Mat2, Letter]:
    """Write alpha = beta · L for its last letter L."""
    a, b, c, d = alpha.entries
    letter = last_letter(alpha)
    if letter is Letter.A:
        return Mat2(alpha.model, a, b - a, c, d - c), letter
    if letter is Letter.B:
        return Mat2(alpha.model, a - b, b, c - d, d), letter
    raise EmptyString("the identity has no last letter")


def decode_string(alpha: Mat2, budget: int = 100_000) -> str:
    """Recover the word by popping letters; only terminates on standard lengths."""
    out = []
    while not alpha.is_identity():
        if len(out) >= budget:
            raise DecodeBudgetExceeded(f"more than {budget} letters")
        alpha, letter = pop_letter(alpha)
        out.append("a" if letter is Letter.A else "b")
    return "".join(reversed(out))


def is_prefix_qf(alpha: Mat2, beta: Mat2) -> bool:
    """Whether alpha · gamma = beta for some gamma, i.e. alpha⁻¹ beta is non-negative."""
    if alpha.model is not beta.model:
        raise ModelMismatch(f"{alpha.model} vs {beta.model}")
    a, b, c, d = alpha.entries
    e, f, g, h = beta.entries
    return d * e >= b * g and d * f >= b * h and a * g >= c * e and a * h >= c * f


def editors_split(alpha: Mat2, beta: Mat2, gamma: Mat2, delta: Mat2) -> tuple[Side, Mat2]:
    """Find eta with (alpha = gamma·eta and eta·beta = delta) or (alpha·eta = gamma and beta = eta·delta)."""
    if len({m.model for m in (alpha, beta, gamma, delta)}) != 1:
        raise ModelMismatch("editors_split needs one model")
    model = alpha.model
    if quad_mul(alpha.entries, beta.entries) != quad_mul(gamma.entries, delta.entries):
        raise PreconditionViolated("alpha·beta differs from gamma·delta")
    mu = quad_mul(gamma.inverse_quad(), alpha.entries)
    if not (mu[0] > 0 and mu[3] > 0):
        raise PreconditionViolated(f"diagonal of mu = {render_matrix(mu)} is not positive")
    if _nonneg(mu):
        return Side.RIGHT, Mat2(model, *mu)
    inv = quad_inverse(mu)
    if _nonneg(inv):
        return Side.LEFT, Mat2(model, *inv)
    raise NoWitness(render_matrix(mu))


def editors_mu(alpha: Mat2, gamma: Mat2) -> Quad:
    """The signed matrix gamma⁻¹ alpha."""
    return quad_mul(gamma.inverse_quad(), alpha.entries)


def transpose(alpha: Mat2) -> Mat2:
    return Mat2(alpha.model, alpha.a, alpha.c, alpha.b, alpha.d)


def anti_transpose(alpha: Mat2) -> Mat2:
    return Mat2(alpha.model, alpha.d, alpha.b, alpha.c, alpha.a)


def subst_x(alpha: Mat2, p: Poly) -> Mat2:
    if not isinstance(p, Poly) or p.degree() < 1:
        raise DegreeTooLow(f"substitution X := {render_poly(p)} needs degree at least 1")
    return Mat2(alpha.model, *(coerce(ModelId.M2, v).subst(p) for v in alpha.entries))


# -- ur-strings -------------------------------------------------------------

def block(model: ModelId, x) -> Mat2:
    """The singleton [x] = B A^x = [[1, x], [1, x+1]]."""
    return Mat2(model, 1, x, 1, coerce(model, x) + 1)


def urs_encode(model: ModelId, xs: Iterable) -> Mat2:
    out = (1, 0, 0, 1)
    for x in xs:
        out = quad_mul(out, block(model, x).entries)
    return Mat2(model, *out)


def urs_domain(alpha: Mat2) -> bool:
    a, b, c, d = alpha.entries
    if a * d != b * c + 1:
        return False
    return (b == 0 and c == 0) or (a <= c and b <= d)


def urs_pop(alpha: Mat2) -> tuple[Mat2, object]:
    """Write alpha = beta · [n] with n the quotient of b by a."""
    if not urs_domain(alpha):
        raise PreconditionViolated(f"{alpha} is not an ur-string")
    if alpha.is_identity():
        raise EmptyString("cannot pop the empty ur-string")
    a, b, c, d = alpha.entries
    n, _ = euc_raw(alpha.model, b, a)
    inv = (n + 1, -n, -1, 1)
    beta = Mat2(alpha.model, *quad_mul(alpha.entries, inv))
    return beta, n


def urs_decode(alpha: Mat2, budget: int = 100_000) -> list:
    out = []
    while not alpha.is_identity():
        if len(out) >= budget:
            raise DecodeBudgetExceeded(f"more than {budget} components")
        alpha, n = urs_pop(alpha)
        out.append(n)
    out.reverse()
    return out


def urs_frege(alpha: Mat2):
    """Injective code <a, <b, <c, d>>> of an ur-string, computed in its own model.

    The quadratic pairing (x+y)^2 + x is injective in any discretely
    ordered semiring, so this needs no decoding to be a Frege function.
    """
    if not urs_domain(alpha):
        raise PreconditionViolated(f"{alpha} is not an ur-string")

    def pair(x, y):
        return (x + y) * (x + y) + x

    a, b, c, d = alpha.entries
    return pair(a, pair(b, pair(c, d)))


@dataclass(frozen=True)
class BezEucReport:
    bezout: bool
    euclidean_ab: bool
    euclidean_cd: bool

    def to_json(self) -> dict:
        return {"bezout": self.bezout, "euclidean_ab": self.euclidean_ab, "euclidean_cd": self.euclidean_cd}


def is_euclidean_pair(model: ModelId, x, y) -> bool:
    """Whether y = x·q + r with 0 <= r < x has a solution in ``model``."""
    try:
        euc_raw(model, coerce(model, y), coerce(model, x))
    except NotEuclidean:
        return False
    return True


def bez_euc_check(model: ModelId, a, b, c, d) -> BezEucReport:
    a, b, c, d = (coerce(model, v) for v in (a, b, c, d))
    return BezEucReport(
        bezout=a * d - b * c == 1,
        euclidean_ab=a != 0 and is_euclidean_pair(model, a, b),
        euclidean_cd=c != 0 and is_euclidean_pair(model, c, d),
    )


# -- normal forms -----------------------------------------------------------

@dataclass(frozen=True)
class RunNF:
    model: ModelId
    runs: tuple  # ((Letter, exponent), ...), alternating, exponents > 0

    def value(self) -> Mat2:
        out = (1, 0, 0, 1)
        for letter, e in self.runs:
            out = quad_mul(out, power(self.model, letter, e).entries)
        return Mat2(self.model, *out)

    def letters(self) -> str:
        return "".join(str(letter) for letter, _ in self.runs)

    def __str__(self):
        return " ".join(_render_run(letter, e) for letter, e in self.runs)

    def to_json(self) -> list:
        return [{"letter": str(letter), "exponent": render_poly(e)} for letter, e in self.runs]


def _render_run(letter: Letter, e) -> str:
    if e == 1:
        return str(letter)
    if isinstance(e, Poly) and not e.is_constant():
        return f"{letter}^{{{render_poly(e)}}}"
    return f"{letter}^{render_poly(e)}"


def _tidy(model: ModelId, runs: Sequence) -> tuple:
    out = []
    for letter, e in runs:
        if e == 0:
            continue
        if out and out[-1][0] is letter:
            out[-1] = (letter, out[-1][1] + e)
        else:
            out.append((letter, coerce(model, e)))
    return tuple(out)


def normal_form_steps(alpha: Mat2) -> tuple[list[Mat2], RunNF]:
    """Run the reduction; returns the matrices visited (starting with alpha) and the result.

    Each step peels a run off the right end. Only the terminal B-cases
    can stop with a non-identity matrix, and they do so immediately.
    """
    model = alpha.model
    if model not in (ModelId.NAT, ModelId.M2):
        raise UnsupportedModel(f"normal forms need Euclidean division; use M2 instead of {model}")
    peeled = []  # runs in right-to-left order
    visited = [alpha]
    cur = alpha
    while not cur.is_identity():
        a, b, c, d = cur.entries
        letter = last_letter(cur)
        if letter is Letter.A:
            q, r = euc_raw(model, b, a)
            peeled.append((Letter.A, q))
            cur = Mat2(model, a, r, c, d - q * c)
        elif letter is Letter.B:
            if b == 0:
                peeled.append((Letter.B, c))
                break
            q, r = euc_raw(model, a, b)
            c2 = c - q * d
            if c2 >= 0:
                peeled.append((Letter.B, q))
                cur = Mat2(model, r, b, c2, d)
            else:
                # r = 0 here, and the remaining matrix is B^(d-1) A B^(q-1)
                peeled.extend([(Letter.B, q - 1), (Letter.A, 1), (Letter.B, d - 1)])
                break
        else:
            raise PreconditionViolated(f"{cur} has no last letter but is not the identity")
        visited.append(cur)
    peeled.reverse()
    return visited, RunNF(model, _tidy(model, peeled))


def normal_form(alpha: Mat2) -> RunNF:
    return normal_form_steps(alpha)[1]


@dataclass(frozen=True, order=True)
class OrdNorm:
    """The ordinal ω^degree_part + finite_part."""

    degree_part: int
    finite_part: int

    def __str__(self):
        if self.degree_part < 0:
            return "0"
        head = "1" if self.degree_part == 0 else ("ω" if self.degree_part == 1 else f"ω^{self.degree_part}")
        return head if self.finite_part == 0 else f"{head}+{self.finite_part}"


def nnorm(p, q) -> int:
    """max(m, n) for the irreducible triple (m, n, k) with p = m/k and q = n/k."""
    p, q = Fraction(p), Fraction(q)
    if p < 0 or q < 0 or (p == 0 and q == 0):
        raise PreconditionViolated("nnorm needs non-negative arguments, not both zero")
    k = p.denominator * q.denominator // gcd(p.denominator, q.denominator)
    m, n = int(p * k), int(q * k)
    g = gcd(gcd(m, n), k)
    return max(m, n) // g


def _deg_lead(v) -> tuple[int, Fraction]:
    if isinstance(v, Poly):
        return v.degree(), v.lead()
    v = Fraction(v)
    return (0, v) if v != 0 else (-1, Fraction(0))


def pair_norm(x, y) -> OrdNorm:
    dx, lx = _deg_lead(x)
    dy, ly = _deg_lead(y)
    if dx < 0 and dy < 0:
        raise PreconditionViolated("the norm needs a non-zero entry")
    if dx != dy:
        return OrdNorm(max(dx, dy), 0)
    return OrdNorm(dx, nnorm(lx, ly))


def ord_norm(alpha: Mat2) -> OrdNorm:
    return pair_norm(alpha.a, alpha.b)


# -- profiles and cuts ------------------------------------------------------

@dataclass(frozen=True)
class ProfileRun:
    letter: Letter
    count: int | None  # None stands for the order type ϖ = ω + ℤ·ℚ + ω̆

    @property
    def is_varpi(self) -> bool:
        return self.count is None

    def __str__(self):
        return f"{self.letter}:{'ϖ' if self.count is None else self.count}"


def profile(nf: RunNF) -> list[ProfileRun]:
    out = []
    for letter, e in nf.runs:
        if isinstance(e, Poly) and not e.is_constant():
            out.append(ProfileRun(letter, None))
        else:
            out.append(ProfileRun(letter, int(e.to_scalar() if isinstance(e, Poly) else e)))
    return out


@dataclass(frozen=True)
class Cut:
    run_index: int
    offset: object


def prefix_at_cut(nf: RunNF, cut: Cut) -> Mat2:
    """The prefix made of the runs before ``run_index`` and ``offset`` letters of that run, over M2."""
    runs = nf.runs
    i = cut.run_index
    off = coerce(ModelId.M2, cut.offset)
    if not 0 <= i <= len(runs):
        raise OutOfBounds(f"run index {i} outside 0..{len(runs)}")
    if i == len(runs):
        if off != 0:
            raise OutOfBounds("only offset 0 is allowed past the last run")
    elif not (0 <= off <= coerce(ModelId.M2, runs[i][1])):
        raise OutOfBounds(f"offset {render_poly(off)} outside 0..{render_poly(runs[i][1])}")
    out = (1, 0, 0, 1)
    for letter, e in runs[:i]:
        out = quad_mul(out, power(ModelId.M2, letter, coerce(ModelId.M2, e)).entries)
    if i < len(runs):
        out = quad_mul(out, power(ModelId.M2, runs[i][0], off).entries)
    return Mat2(ModelId.M2, *out)


def cut_in_model(nf: RunNF, cut: Cut, target: ModelId) -> bool:
    return all(is_member(target, v) for v in prefix_at_cut(nf, cut).entries)
