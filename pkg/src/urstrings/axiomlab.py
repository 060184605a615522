"""Seeded harness that evaluates the arithmetic, string and ur-string axioms on concrete backends.

A target is one of

* a model id (``nat``, ``M0``, ``M1``, ``M2``, ``Qnn``) for the arithmetic axioms pa1-21 and pa17-;
* ``dyadic`` for the string axioms, the tally axioms and the ur-string axioms on length-first codes;
* ``markov:<model>`` for the string and ur-string axioms on matrices over a model;
* ``srs`` for the string axioms on normal forms of the ``abc -> b`` rewriting system.

Universal statements are sampled. Existential parts go through a witness
finder. When the finder is complete (the witness is forced, as with
Euclidean division in a discretely ordered ring or the editors matrix) a
failure is a refutation, and the refutation is re-checked by a separate
verifier before it is reported. Otherwise the check ends in ``Unknown``.
"""
from __future__ import annotations

import enum
import itertools
import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from . import dyadic as dy
from . import markov as mk
from . import tcstrings as tcs
from .errors import (
    DomainError,
    NoWitness,
    NotApplicable,
    NotEuclidean,
    ParseError,
    PreconditionViolated,
)
from .rings import (
    ModelId,
    Poly,
    X,
    binom_poly,
    coerce,
    euc_raw,
    gcd,
    is_member,
    parse_poly,
    pow2_refute,
    primal_split,
    sample_member,
)
from .rings.parse import render_poly


# -- ids and reports ---------------------------------------------------------

class Family(enum.Enum):
    PA = "pa"
    TC = "tc"
    TCL = "tcl"
    TCU = "tcu"


_RANGES = {
    Family.PA: frozenset(range(1, 22)),
    Family.TC: frozenset(range(1, 9)) | {12},
    Family.TCL: frozenset(range(1, 6)),
    Family.TCU: frozenset(range(1, 9)),
}
_FAMILY_ORDER = {f: i for i, f in enumerate(Family)}
_AXIOM_RE = re.compile(r"^(pa|tcu|tcl|tcλ|tc)(\d+)([-⁻]?)$")


@dataclass(frozen=True)
class AxiomId:
    family: Family
    index: int
    variant: str = ""  # "-" marks pa17- (Bezout pairs are Euclidean)

    def __post_init__(self):
        if self.index not in _RANGES[self.family]:
            raise ValueError(f"{self.family.value}{self.index} is not a known axiom")
        if self.variant and (self.family, self.index, self.variant) != (Family.PA, 17, "-"):
            raise ValueError(f"unknown variant {self.variant!r} for {self.family.value}{self.index}")

    @classmethod
    def parse(cls, text: str) -> "AxiomId":
        m = _AXIOM_RE.match(text.strip())
        if not m:
            raise ParseError(0, "axiom id such as pa17, pa17-, tc5, tcl3 or tcu7", text)
        fam = "tcl" if m.group(1) == "tcλ" else m.group(1)
        return cls(Family(fam), int(m.group(2)), "-" if m.group(3) else "")

    @property
    def sort_key(self):
        return (_FAMILY_ORDER[self.family], self.index, self.variant)

    def __str__(self):
        return f"{self.family.value}{self.index}{self.variant}"


def axioms(family: Family, indices: Iterable[int]) -> list[AxiomId]:
    return [AxiomId(family, i) for i in indices]


PA17_MINUS = AxiomId(Family.PA, 17, "-")


class Status(enum.Enum):
    HOLDS = "holds"
    REFUTED = "refuted"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SampleConfig:
    seed: int = 0
    count: int = 150
    size_bound: int = 3
    search_budget: int = 2000


@dataclass(frozen=True)
class CheckReport:
    axiom: AxiomId
    target: str
    samples: int
    status: Status
    witness: tuple | None = None
    note: str = ""

    def to_json(self) -> dict:
        return {
            "target": self.target,
            "axiom": str(self.axiom),
            "status": self.status.value,
            "samples": self.samples,
            "witness": None if self.witness is None else [_show(w) for w in self.witness],
            "note": self.note,
        }

    def __str__(self):
        s = f"{self.target:<10} {str(self.axiom):<7} {self.status.value:<8} samples={self.samples}"
        if self.witness is not None:
            s += " witness=(" + ", ".join(_show(w) for w in self.witness) + ")"
        if self.note:
            s += f"  [{self.note}]"
        return s


def _show(v) -> str:
    if isinstance(v, (mk.Mat2, dy.SmUrString)):
        return str(v)
    if isinstance(v, (Poly, Fraction)):
        return render_poly(v)
    if isinstance(v, str):
        return repr(v)
    return str(v)


class _Refuted(Exception):
    def __init__(self, witness: tuple, note: str = ""):
        super().__init__(note)
        self.witness = witness
        self.note = note


class _Unknown(Exception):
    pass


# -- the registry of named counterexamples -------------------------------------

def _p(text: str) -> Poly:
    return parse_poly(text)


FRAK_A = (_p("9"), _p("3X+2"), _p("3X+4"), _p("X^2+2X+1"))
FRAK_B = (_p("5X+7"), _p("X^2-2"), _p("25"), _p("5X-7"))
FRAK_S = (_p("X^2-6X+10"), 8 * binom_poly(4) + 3, _p("3"), _p("X^2+1"))
FRAK_A2 = (_p("9"), _p("9X+2"), _p("9X+4"), _p("9X^2+6X+1"))
QNN_EDITORS = (
    (Fraction(7, 5), Fraction(1, 5), Fraction(3, 5), Fraction(4, 5)),
    (1, 1, 0, 1),
    (1, 1, 0, 1),
    (Fraction(4, 5), Fraction(1, 5), Fraction(3, 5), Fraction(7, 5)),
)


@dataclass(frozen=True)
class Counterexample:
    name: str
    claim: str
    data: dict
    check: Callable[[], bool] = field(repr=False, compare=False)

    def verify(self) -> bool:
        return bool(self.check())


def _nf_is(quad, model, expected: str) -> bool:
    return str(mk.normal_form(mk.Mat2(model, *quad))) == expected


def _qnn_editors_fails() -> bool:
    x, y, u, v = (mk.Mat2(ModelId.QNONNEG, *q) for q in QNN_EDITORS)
    try:
        mk.editors_split(x, y, u, v)
    except NoWitness:
        return _markov_editors_refuted(x, y, u, v) and Fraction(-3, 5) in mk.editors_mu(x, u)
    return False


def _x_tarski_not_smullyan() -> bool:
    m = ModelId.M0
    smullyan_fails = pow2_refute(m, X, X)
    # X = (2y+3)z in Z[X] forces z = 1, y = (X-3)/2, or z = X, y = -1; neither y is in M0
    tarski_holds = not any(
        is_member(m, y) for y in ((X - 3) / 2, Poly.const(-1))
    )
    return smullyan_fails and tarski_holds


def known_counterexamples() -> list[Counterexample]:
    m0, m1, m2 = ModelId.M0, ModelId.M1, ModelId.M2
    a_mat = mk.Mat2(m0, *FRAK_A)
    bb = mk.mat_mul(mk.atom_B(m0), mk.Mat2(m0, *FRAK_B))
    return [
        Counterexample(
            "frak_A", "Markov string of M0 with non-Euclidean top row; M2 normal form B^{X/3} A^2 B^4 A^{X/3}",
            {"matrix": FRAK_A, "model": m0, "normal_form": "B^{1/3*X} A^2 B^4 A^{1/3*X}"},
            lambda: _nf_is(FRAK_A, m2, "B^{1/3*X} A^2 B^4 A^{1/3*X}")
            and mk.bez_euc_check(m0, *FRAK_A) == mk.BezEucReport(True, False, False),
        ),
        Counterexample(
            "frak_A_tcu7", "frak_A is a non-empty M0 ur-string that is not beta*[x]",
            {"matrix": FRAK_A, "model": m0},
            lambda: mk.urs_domain(a_mat) and _markov_unpoppable(a_mat),
        ),
        Counterexample(
            "frak_B", "A-string of M0 not of the form A^P; M2 normal form A^{X/5} B^3 A B A^2 B A^{X/5-1}",
            {"matrix": FRAK_B, "model": m0, "normal_form": "A^{1/5*X} B^3 A B A^2 B A^{1/5*X-1}"},
            lambda: _nf_is(FRAK_B, m2, "A^{1/5*X} B^3 A B A^2 B A^{1/5*X-1}"),
        ),
        Counterexample(
            "B_frak_B", "B*frak_B is an M0 ur-string atom that does not pop",
            {"matrix": bb.entries, "model": m0},
            lambda: mk.urs_domain(bb) and _markov_unpoppable(bb),
        ),
        Counterexample(
            "frak_S", "Skolem's example in M1 (not M0); M2 normal form A^{X^2/3-2X+3} B^3 A^{X^2/3}",
            {"matrix": FRAK_S, "model": m1, "normal_form": "A^{1/3*X^2-2*X+3} B^3 A^{1/3*X^2}"},
            lambda: _nf_is(FRAK_S, m2, "A^{1/3*X^2-2*X+3} B^3 A^{1/3*X^2}")
            and not is_member(m0, FRAK_S[1])
            and _markov_unpoppable(mk.Mat2(m1, *FRAK_S)),
        ),
        Counterexample(
            "frak_A_3X", "frak_A with X := 3X; M2 normal form B^X A^2 B^4 A^X",
            {"matrix": FRAK_A2, "model": m0, "normal_form": "B^{X} A^2 B^4 A^{X}"},
            lambda: _nf_is(FRAK_A2, m2, "B^{X} A^2 B^4 A^{X}"),
        ),
        Counterexample(
            "qnn_editors", "editors principle fails for Markov strings over the non-negative rationals",
            {"quadruple": QNN_EDITORS, "model": ModelId.QNONNEG},
            _qnn_editors_fails,
        ),
        Counterexample(
            "qnn_discrete", "0 < 1/2 < 1 breaks discreteness in the non-negative rationals",
            {"y": 0, "x": Fraction(1, 2), "model": ModelId.QNONNEG},
            lambda: _verify_pa_refutation(ModelId.QNONNEG, AxiomId(Family.PA, 11), (Fraction(1, 2), 0)),
        ),
        Counterexample(
            "X_pow2", "X is a power of two in Tarski's sense but not in Smullyan's, in M0",
            {"x": X, "model": m0},
            _x_tarski_not_smullyan,
        ),
        Counterexample(
            "srs_bicancel", "a, b, c normal words with a*b*c = b in the abc -> b model",
            {"x": "b", "u": "a", "v": "c"},
            lambda: tcs.srs_concat(tcs.srs_concat("a", "b"), "c") == "b",
        ),
    ]


# -- arithmetic axioms ---------------------------------------------------------

def _specials(model: ModelId) -> list:
    if model is ModelId.NAT:
        return [0, 1, 2, 3]
    if model is ModelId.QNONNEG:
        return [Fraction(0), Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2)]
    out = [Poly.const(0), Poly.const(1), Poly.const(2), X, X + 1, 2 * X, X * X]
    if model in (ModelId.M1, ModelId.M2):
        out.append(binom_poly(2))
    if model is ModelId.M2:
        out += [X / 2, X / 3 - 1]
    return out


def _value_tuples(model: ModelId, rng: random.Random, arity: int, cfg: SampleConfig) -> Iterator[tuple]:
    yield from itertools.product(_specials(model), repeat=arity)
    for _ in range(cfg.count):
        yield tuple(sample_member(model, rng, cfg.size_bound) for _ in range(arity))


def _forall(tuples: Iterable[tuple], pred: Callable[..., bool]) -> int:
    n = 0
    for t in tuples:
        n += 1
        if not pred(*t):
            raise _Refuted(t)
    return n


def _div_nat(u: int, x: int) -> bool:
    return x == 0 if u == 0 else x % u == 0


def _pow2_by_divisors(y: int) -> bool:
    """Smullyan's definition evaluated directly: every divisor of y is 1 or even."""
    return y > 0 and all(d == 1 or d % 2 == 0 for d in range(1, y + 1) if y % d == 0)


def _quotient(model: ModelId, x, y):
    """Some (z, r) with x = z*y + r and 0 <= r < y; the M2 quotient is the only candidate."""
    if model is ModelId.QNONNEG:
        return x / y, Fraction(0)
    return euc_raw(model, x, y)


_UNIVERSAL_PA = {
    1: (1, lambda x: x + 0 == x),
    2: (2, lambda x, y: x + y == y + x),
    3: (3, lambda x, y, z: (x + y) + z == x + (y + z)),
    4: (1, lambda x: x * 1 == x),
    5: (2, lambda x, y: x * y == y * x),
    6: (3, lambda x, y, z: (x * y) * z == x * (y * z)),
    7: (3, lambda x, y, z: x * (y + z) == x * y + x * z),
    8: (2, lambda x, y: x <= y or y <= x),
    9: (3, lambda x, y, z: not (x <= y and y <= z) or x <= z),
    10: (1, lambda x: not (x + 1 <= x)),
    11: (2, lambda x, y: not (y <= x) or y == x or y + 1 <= x),
    12: (3, lambda x, y, z: not (y <= x) or y + z <= x + z),
    13: (3, lambda x, y, z: not (y <= x) or y * z <= x * z),
}


def _check_pa(model: ModelId, ax: AxiomId, rng: random.Random, cfg: SampleConfig) -> int:
    i = ax.index
    if ax.variant:
        return _check_pa17_minus(model, rng, cfg)
    if i in _UNIVERSAL_PA:
        arity, pred = _UNIVERSAL_PA[i]
        return _forall(_value_tuples(model, rng, arity, cfg), pred)
    if i == 14:
        def pred(x):
            return x == 0 or is_member(model, x - 1)
        return _forall(_value_tuples(model, rng, 1, cfg), pred)
    if i == 15:
        def pred(x, y):
            return not (y <= x) or is_member(model, x - y)
        return _forall(_value_tuples(model, rng, 2, cfg), pred)
    if i in (16, 17):
        def pred(x, y):
            if y == 0:
                return True
            try:
                z, r = _quotient(model, x, y)
            except NotEuclidean:
                return False
            return is_member(model, z) and is_member(model, r) and 0 <= r < y and x == z * y + r
        if i == 16:
            numerals = [coerce(model, n) for n in range(1, 2 * cfg.size_bound + 1)]
            tuples = ((x, n) for (x,) in _value_tuples(model, rng, 1, cfg) for n in numerals)
        else:
            tuples = _value_tuples(model, rng, 2, cfg)
        return _forall(tuples, pred)
    if model is not ModelId.NAT:
        raise NotApplicable(f"pa{i} is decided only over nat")
    return _check_pa_nat_divisibility(i, rng, cfg)


def _check_pa_nat_divisibility(i: int, rng: random.Random, cfg: SampleConfig) -> int:
    top = 4 ** cfg.size_bound
    if i == 18:
        def tuples():
            for _ in range(cfg.count):
                y, z = rng.randint(0, top), rng.randint(0, top)
                p = y * z
                divs = [d for d in range(1, p + 1) if p % d == 0] if p else [0, rng.randint(1, top)]
                yield rng.choice(divs), y, z

        def pred(x, y, z):
            try:
                u, v = primal_split(x, y, z)
            except PreconditionViolated:
                return False
            return x == u * v and _div_nat(u, y) and _div_nat(v, z)
        return _forall(tuples(), pred)
    if i == 19:
        def pred(x):
            y = dy.ell(x)
            return _pow2_by_divisors(y) and y <= x + 1 < 2 * y
        return _forall(((rng.randint(0, top),) for _ in range(cfg.count)), pred)
    if i == 20:
        def tuples():
            for _ in range(cfg.count):
                if rng.random() < 0.5:
                    a, b = sorted(rng.randint(0, 2 * cfg.size_bound) for _ in range(2))
                    yield 1 << a, 1 << b
                else:
                    yield rng.randint(1, top), rng.randint(1, top)

        def pred(x, y):
            if not (_pow2_by_divisors(x) and _pow2_by_divisors(y) and x <= y):
                return True
            return _div_nat(x, y)
        return _forall(tuples(), pred)
    if i == 21:
        def pred(x, y):
            z = gcd(x, y)
            return all(_div_nat(u, z) == (_div_nat(u, x) and _div_nat(u, y)) for u in range(0, max(x, y, z) + 2))
        pairs = [(0, 0), (0, 5), (6, 0)] + [(rng.randint(0, top), rng.randint(0, top)) for _ in range(cfg.count)]
        return _forall(pairs, pred)
    raise NotApplicable(f"pa{i}")


def _bezout_samples(model: ModelId, rng: random.Random, cfg: SampleConfig) -> Iterator[tuple]:
    """(a, b, c, d) with ad - bc = 1, from the registry and from random Markov products."""
    for quad in (FRAK_A, FRAK_B, FRAK_S):
        if all(is_member(model, v) for v in quad):
            yield tuple(coerce(model, v) for v in quad)
    for _ in range(cfg.count):
        m = _markov_random(model, rng, cfg.size_bound, rng.randint(1, 4))
        yield m.entries
        a, b, c, d = m.entries
        yield (d, c, b, a)


def _check_pa17_minus(model: ModelId, rng: random.Random, cfg: SampleConfig) -> int:
    def pred(a, b, c, d):
        if a * d - b * c != 1:
            return True
        return mk.is_euclidean_pair(model, a, b) if model is not ModelId.QNONNEG else True
    return _forall(_bezout_samples(model, rng, cfg), pred)


def _not_euclidean(model: ModelId, a, b) -> bool:
    """No q, r in ``model`` with b = a*q + r, 0 <= r < a: the M2 quotient is unique and must lie outside."""
    q, r = euc_raw(ModelId.M2, coerce(ModelId.M2, b), coerce(ModelId.M2, a))
    assert b == a * q + r and 0 <= r < a
    return not (is_member(model, q) and is_member(model, r))


def _verify_pa_refutation(model: ModelId, ax: AxiomId, w: tuple) -> bool:
    i = ax.index
    if ax.variant:
        a, b, c, d = w
        return a * d - b * c == 1 and _not_euclidean(model, a, b)
    if i in _UNIVERSAL_PA:
        return not _UNIVERSAL_PA[i][1](*w)
    if i == 14:
        (x,) = w
        return x != 0 and not is_member(model, x - 1)
    if i == 15:
        x, y = w
        return y <= x and not is_member(model, x - y)
    if i in (16, 17):
        x, y = w
        return y != 0 and model is not ModelId.QNONNEG and _not_euclidean(model, y, x)
    return False


# -- string structures -----------------------------------------------------------

@dataclass
class StringLayer:
    """A monoid presentation together with its witness finders."""

    name: str
    empty: object
    op: Callable
    small: list
    sample_pieces: Callable[[random.Random], list]
    is_atom: Callable[[object], bool]
    editors: Callable  # (x, y, u, v) -> w, or raises NoWitness
    editors_complete: bool
    stack: Callable  # x != empty -> (y, a)
    refute_editors: Callable | None = None
    tally: Callable | None = None
    has_b: Callable | None = None
    first_splits: list = field(default_factory=list)  # (x, y, u, v) instances tried before sampling

    def prod(self, pieces):
        out = self.empty
        for p in pieces:
            out = self.op(out, p)
        return out


def _pieces_tuples(layer: StringLayer, rng, arity: int, cfg: SampleConfig, cap: int = 20000) -> Iterator[tuple]:
    for n, t in enumerate(itertools.product(layer.small, repeat=arity)):
        if n >= cap:
            break
        yield t
    for _ in range(cfg.count):
        yield tuple(layer.prod(layer.sample_pieces(rng)) for _ in range(arity))


def _split_instances(layer: StringLayer, rng, cfg: SampleConfig) -> Iterator[tuple]:
    """(x, y, u, v) with x*y = u*v: fixed instances, small pairs grouped by product, then random double cuts."""
    yield from layer.first_splits
    groups: dict = {}
    for x, y in itertools.product(layer.small, repeat=2):
        groups.setdefault(layer.op(x, y), []).append((x, y))
    for pairs in groups.values():
        for (x, y), (u, v) in itertools.product(pairs, repeat=2):
            yield x, y, u, v
    for _ in range(cfg.count):
        ps = layer.sample_pieces(rng)
        i, j = rng.randint(0, len(ps)), rng.randint(0, len(ps))
        yield layer.prod(ps[:i]), layer.prod(ps[i:]), layer.prod(ps[:j]), layer.prod(ps[j:])


def _check_tc(layer: StringLayer, ax: AxiomId, rng, cfg: SampleConfig) -> int:
    e, op = layer.empty, layer.op
    i = ax.index
    if ax.family is Family.TCL:
        return _check_tcl(layer, i, rng, cfg)
    if i == 1:
        return _forall(_pieces_tuples(layer, rng, 1, cfg), lambda x: op(e, x) == x and op(x, e) == x)
    if i == 2:
        return _forall(_pieces_tuples(layer, rng, 2, cfg), lambda x, y: op(x, y) != e or (x == e and y == e))
    if i == 3:
        return _forall(_pieces_tuples(layer, rng, 3, cfg), lambda x, y, z: op(op(x, y), z) == op(x, op(y, z)))
    if i in (4, 5):
        n = 0
        for x, y, u, v in _split_instances(layer, rng, cfg):
            n += 1
            try:
                w = layer.editors(x, y, u, v)
            except NoWitness:
                if layer.editors_complete and layer.refute_editors(x, y, u, v):
                    raise _Refuted((x, y, u, v), "no editors witness exists") from None
                raise _Unknown(f"no witness found for {(x, y, u, v)}") from None
            if i == 4:
                ok = op(x, w) == u or x == op(u, w)
            else:
                ok = (op(x, w) == u and y == op(w, v)) or (x == op(u, w) and op(w, y) == v)
            if not ok:
                raise _Unknown(f"finder returned a non-witness for {(x, y, u, v)}")
        return n
    if i == 6:
        return _forall(_pieces_tuples(layer, rng, 2, cfg), lambda x, y: op(x, y) != x or y == e)
    if i == 7:
        n = 0
        for (x,) in _pieces_tuples(layer, rng, 1, cfg, cap=200):
            seen: dict = {}
            ys = list(layer.small) + [layer.prod(layer.sample_pieces(rng)) for _ in range(10)]
            for y in ys:
                n += 1
                p = op(x, y)
                if p in seen and seen[p] != y:
                    raise _Refuted((x, seen[p], y))
                seen[p] = y
        return n
    if i == 8:
        def pred(x):
            if x == e:
                return True
            y, a = layer.stack(x)
            return layer.is_atom(a) and op(y, a) == x
        return _forall(_pieces_tuples(layer, rng, 1, cfg), pred)
    if i == 12:
        return _forall(
            _pieces_tuples(layer, rng, 3, cfg),
            lambda x, u, v: op(op(u, x), v) != x or (u == e and v == e),
        )
    raise NotApplicable(str(ax))


def _check_tcl(layer: StringLayer, i: int, rng, cfg: SampleConfig) -> int:
    lam, e, op = layer.tally, layer.empty, layer.op
    if lam is None:
        raise NotApplicable(f"{layer.name} has no tally function")
    if i == 1:
        return _forall([()], lambda: lam(e) == e)
    if i == 2:
        return _forall(_pieces_tuples(layer, rng, 1, cfg), lambda x: lam(x) != e or x == e)
    if i == 3:
        return _forall(_pieces_tuples(layer, rng, 2, cfg), lambda x, y: lam(op(x, y)) == op(lam(x), lam(y)))
    if i == 4:
        return _forall(_pieces_tuples(layer, rng, 1, cfg), lambda x: lam(lam(x)) == lam(x))
    if i == 5:
        return _forall(_pieces_tuples(layer, rng, 1, cfg), lambda x: not layer.has_b(lam(x)))
    raise NotApplicable(f"tcl{i}")


def _dyadic_layer(cfg: SampleConfig) -> StringLayer:
    def pieces(rng):
        return [rng.choice((dy.A_CODE, dy.B_CODE)) for _ in range(rng.randint(0, 4 * cfg.size_bound))]

    def editors(x, y, u, v):
        lx, lu = dy.ell(x), dy.ell(u)
        if lx <= lu:
            return u - x * (lu // lx)
        return x - u * (lx // lu)

    def stack(x):
        a = dy.A_CODE if x & 1 else dy.B_CODE
        return (x - a) // 2, a

    return StringLayer(
        name="dyadic",
        empty=0,
        op=dy.dyad_concat,
        small=list(range(15)),
        sample_pieces=pieces,
        is_atom=lambda a: len(dy.sm_decode(a)) == 1,
        editors=editors,
        editors_complete=True,
        refute_editors=lambda *q: True,
        stack=stack,
        tally=dy.lambda_tally,
        has_b=lambda n: "b" in dy.sm_decode(n),
    )


def _srs_layer(cfg: SampleConfig) -> StringLayer:
    small = [w for k in range(4) for w in map("".join, itertools.product("abc", repeat=k)) if tcs.srs_is_normal(w)]

    def pieces(rng):
        return [tcs.srs_normalize("".join(rng.choice("abc") for _ in range(rng.randint(0, 3))))
                for _ in range(rng.randint(0, 2 * cfg.size_bound))]

    def editors(x, y, u, v):
        return tcs.srs_editors_witness(x, y, u, v)[1]

    def stack(x):
        if x[-1] == "b":
            return x[:-1] + "ab", "c"
        return x[:-1], x[-1]

    return StringLayer(
        name="srs",
        empty="",
        op=tcs.srs_concat,
        small=small,
        sample_pieces=pieces,
        is_atom=tcs.srs_is_atom,
        editors=editors,
        editors_complete=False,
        stack=stack,
    )


def _markov_exponent(model: ModelId, rng, size: int):
    e = sample_member(model, rng, size)
    return coerce(model, 1) if e == 0 else e


def _markov_random(model: ModelId, rng, size: int, runs: int) -> mk.Mat2:
    out = mk.mat_identity(model)
    for k in range(runs):
        letter = mk.Letter.A if (k + rng.randint(0, 1)) % 2 else mk.Letter.B
        out = mk.mat_mul(out, mk.power(model, letter, _markov_exponent(model, rng, size)))
    return out


def _registry_mats(model: ModelId) -> list[mk.Mat2]:
    out = []
    for quad in (FRAK_A, FRAK_B, FRAK_S):
        if all(is_member(model, v) for v in quad):
            out.append(mk.Mat2(model, *quad))
    return out


def _markov_editors_refuted(x, y, u, v) -> bool:
    """x*w = u forces w = x^-1 u and x = u*w forces w = u^-1 x; check that neither is a matrix of the model."""
    model = x.model
    for w in (mk.quad_mul(x.inverse_quad(), u.entries), mk.quad_mul(u.inverse_quad(), x.entries)):
        if all(v_ >= 0 and is_member(model, v_) for v_ in w):
            return False
    return True


def _markov_layer(model: ModelId, cfg: SampleConfig) -> StringLayer:
    one = mk.mat_identity(model)
    A, B = mk.atom_A(model), mk.atom_B(model)
    small = [one, A, B, A * A, A * B, B * A, B * B, A * B * A, B * A * B]
    extra = _registry_mats(model)
    qnn = [] if model is not ModelId.QNONNEG else [mk.Mat2(model, *q) for q in QNN_EDITORS]

    def pieces(rng):
        out = []
        for _ in range(rng.randint(0, 4)):
            if extra and rng.random() < 0.15:
                out.append(rng.choice(extra))
            else:
                letter = rng.choice((mk.Letter.A, mk.Letter.B))
                out.append(mk.power(model, letter, _markov_exponent(model, rng, cfg.size_bound)))
        return out

    def editors(x, y, u, v):
        side, w = mk.editors_split(x, y, u, v)
        return w

    def stack(x):
        y, letter = mk.pop_letter(x)
        return y, A if letter is mk.Letter.A else B

    return StringLayer(
        name=f"markov:{model.cli_id}",
        empty=one,
        op=mk.mat_mul,
        small=small + extra + qnn,
        sample_pieces=pieces,
        is_atom=lambda a: a in (A, B),
        editors=editors,
        editors_complete=True,
        refute_editors=_markov_editors_refuted,
        stack=stack,
        first_splits=[tuple(qnn)] if qnn else [],
    )


# -- ur-string structures ---------------------------------------------------------

@dataclass
class UrLayer:
    name: str
    empty: object
    concat: Callable
    single: Callable
    sample_elem: Callable
    extra: list  # ur-strings outside the image of lists, tried first
    editors: Callable  # (a, b, g, d) -> eta, or raises NoWitness
    in_domain: Callable
    pop: Callable  # alpha -> (beta, x); raises DomainError when it cannot
    unpoppable: Callable  # independent proof that alpha has no decomposition beta*[x]
    atom_split: Callable  # [x] -> nontrivial split found by bounded search, or None
    frege: Callable

    def from_list(self, xs):
        out = self.empty
        for x in xs:
            out = self.concat(out, self.single(x))
        return out


def _ur_samples(layer: UrLayer, rng, cfg: SampleConfig) -> Iterator:
    yield layer.empty
    yield from layer.extra
    for _ in range(cfg.count):
        yield _ur_random(layer, rng, cfg)


def _ur_random(layer: UrLayer, rng, cfg: SampleConfig):
    parts = []
    for _ in range(rng.randint(0, 6)):
        if layer.extra and rng.random() < 0.1:
            parts.append(rng.choice(layer.extra))
        else:
            parts.append(layer.single(layer.sample_elem(rng)))
    out = layer.empty
    for p in parts:
        out = layer.concat(out, p)
    return out


def _check_tcu(layer: UrLayer, i: int, rng, cfg: SampleConfig) -> int:
    e, cat = layer.empty, layer.concat

    def tuples(k):
        pool = [e] + list(layer.extra)
        yield from itertools.product(pool, repeat=k)
        for _ in range(cfg.count):
            yield tuple(_ur_random(layer, rng, cfg) for _ in range(k))

    if i == 1:
        return _forall(tuples(1), lambda a: cat(e, a) == a and cat(a, e) == a)
    if i == 2:
        return _forall(tuples(2), lambda a, b: cat(a, b) != e or a == e or b == e)
    if i == 3:
        return _forall(tuples(3), lambda a, b, c: cat(cat(a, b), c) == cat(a, cat(b, c)))
    if i == 4:
        def pred(x):
            s = layer.single(x)
            return s != e and layer.atom_split(x) is None
        return _forall(((layer.sample_elem(rng),) for _ in range(cfg.count)), pred)
    if i == 5:
        def pairs():
            for _ in range(cfg.count):
                x = layer.sample_elem(rng)
                yield x, x
                yield x, layer.sample_elem(rng)
        return _forall(pairs(), lambda x, y: layer.single(x) != layer.single(y) or x == y)
    if i == 6:
        n = 0
        for _ in range(cfg.count):
            parts = [layer.single(layer.sample_elem(rng)) for _ in range(rng.randint(0, 6))]
            if layer.extra and rng.random() < 0.3:
                parts.insert(rng.randint(0, len(parts)), rng.choice(layer.extra))
            j, k = rng.randint(0, len(parts)), rng.randint(0, len(parts))
            a, b = _fold(layer, parts[:j]), _fold(layer, parts[j:])
            g, d = _fold(layer, parts[:k]), _fold(layer, parts[k:])
            n += 1
            try:
                eta = layer.editors(a, b, g, d)
            except NoWitness:
                raise _Unknown(f"no editors witness for {(a, b, g, d)}") from None
            ok = layer.in_domain(eta) and (
                (cat(a, eta) == g and b == cat(eta, d)) or (a == cat(g, eta) and cat(eta, b) == d)
            )
            if not ok:
                raise _Unknown(f"finder returned a non-witness for {(a, b, g, d)}")
        return n
    if i == 7:
        n = 0
        for a in _ur_samples(layer, rng, cfg):
            n += 1
            if a == e:
                continue
            try:
                beta, x = layer.pop(a)
            except DomainError:
                if layer.unpoppable(a):
                    raise _Refuted((a,), "not empty and not of the form beta*[x]") from None
                raise _Unknown(f"could not pop {a}") from None
            if cat(beta, layer.single(x)) != a:
                raise _Unknown(f"pop returned a non-witness for {a}")
        return n
    if i == 8:
        n = 0
        seen: dict = {}
        for a in _ur_samples(layer, rng, cfg):
            n += 1
            f = layer.frege(a)
            if f in seen and seen[f] != a:
                raise _Refuted((seen[f], a))
            seen[f] = a
        return n
    raise NotApplicable(f"tcu{i}")


def _fold(layer: UrLayer, parts):
    out = layer.empty
    for p in parts:
        out = layer.concat(out, p)
    return out


def _dyadic_ur_layer(cfg: SampleConfig) -> UrLayer:
    def editors(a, b, g, d):
        return dy.urs_editors_split(a, b, g, d)[1]

    def atom_split(x):
        s = dy.urs_singleton(x)
        m, p = dy.sm_decode(s.mask), dy.sm_decode(s.payload)
        for k in range(1, len(m)):
            left = dy.SmUrString(dy.sm_encode(m[:k]), dy.sm_encode(p[:k]))
            right = dy.SmUrString(dy.sm_encode(m[k:]), dy.sm_encode(p[k:]))
            if left.is_valid() and right.is_valid():
                return left, right
        return None

    return UrLayer(
        name="dyadic",
        empty=dy.urs_empty(),
        concat=dy.urs_concat,
        single=dy.urs_singleton,
        sample_elem=lambda rng: rng.randint(0, (1 << 16) - 1),
        extra=[],
        editors=editors,
        in_domain=dy.SmUrString.is_valid,
        pop=dy.urs_pop,
        unpoppable=lambda a: False,
        atom_split=atom_split,
        frege=dy.urs_frege,
    )


def _markov_unpoppable(alpha: mk.Mat2) -> bool:
    """No x, beta in the model with alpha = beta*[x].

    beta = alpha*[x]^-1 has top row (a(x+1) - b, b - ax), so ax <= b <= a(x+1).
    Over M2 that pins x to the Euclidean quotient q of b by a, or q-1 when
    the remainder is 0; neither may be usable in the model.
    """
    model = alpha.model
    a, b, c, d = (coerce(ModelId.M2, v) for v in alpha.entries)
    q, r = euc_raw(ModelId.M2, b, a)
    candidates = [q] + ([q - 1] if r == 0 else [])
    for x in candidates:
        if not is_member(model, x):
            continue
        beta = mk.quad_mul(alpha.entries, (x + 1, -x, -1, 1))
        if all(v >= 0 and is_member(model, v) for v in beta):
            try:
                if mk.urs_domain(mk.Mat2(model, *beta)):
                    return False
            except DomainError:
                pass
    return True


def _markov_ur_layer(model: ModelId, cfg: SampleConfig) -> UrLayer:
    empty = mk.mat_identity(model)
    extra = [m for m in _registry_mats(model) if mk.urs_domain(m)]
    for m in list(extra):
        bm = mk.mat_mul(mk.atom_B(model), m)
        if mk.urs_domain(bm):
            extra.append(bm)

    def editors(a, b, g, d):
        return mk.editors_split(a, b, g, d)[1]

    def atom_split(x):
        s = mk.block(model, x)
        x = coerce(model, x)
        rng = random.Random(repr(x))
        js = [coerce(model, 0), x] + [sample_member(model, rng, cfg.size_bound) for _ in range(8)]
        for j in js:
            if not (0 <= j <= x):
                continue
            beta = mk.block(model, j)
            gamma = mk.quad_mul(beta.inverse_quad(), s.entries)
            if all(v >= 0 and is_member(model, v) for v in gamma):
                g = mk.Mat2(model, *gamma)
                if mk.urs_domain(g) and not g.is_identity():
                    return beta, g
        return None

    return UrLayer(
        name=f"markov:{model.cli_id}",
        empty=empty,
        concat=mk.mat_mul,
        single=lambda x: mk.block(model, x),
        sample_elem=lambda rng: sample_member(model, rng, cfg.size_bound),
        extra=extra,
        editors=editors,
        in_domain=mk.urs_domain,
        pop=mk.urs_pop,
        unpoppable=_markov_unpoppable,
        atom_split=atom_split,
        frege=mk.urs_frege,
    )


# -- dispatch ---------------------------------------------------------------------

def _parse_target(target: str):
    t = target.strip()
    if t in ("dyadic", "srs"):
        return t, None
    if t.startswith("markov:"):
        return "markov", ModelId.parse(t.split(":", 1)[1])
    return "pa", ModelId.parse(t)


def canonical_target(target: str) -> str:
    kind, model = _parse_target(target)
    if kind == "pa":
        return model.cli_id
    if kind == "markov":
        return f"markov:{model.cli_id}"
    return kind


def _run(kind, model, ax: AxiomId, rng, cfg: SampleConfig) -> int:
    fam = ax.family
    if kind == "pa":
        if fam is not Family.PA:
            raise NotApplicable(f"{ax} does not apply to the model {model.cli_id}")
        return _check_pa(model, ax, rng, cfg)
    if fam is Family.PA:
        raise NotApplicable(f"{ax} applies to models, not to {kind}")
    if fam is Family.TCU:
        if kind == "srs":
            raise NotApplicable("the rewriting model has no ur-string layer")
        layer = _dyadic_ur_layer(cfg) if kind == "dyadic" else _markov_ur_layer(model, cfg)
        return _check_tcu(layer, ax.index, rng, cfg)
    if kind == "dyadic":
        layer = _dyadic_layer(cfg)
    elif kind == "srs":
        layer = _srs_layer(cfg)
    else:
        layer = _markov_layer(model, cfg)
    return _check_tc(layer, ax, rng, cfg)


def _verify_refutation(kind, model, ax: AxiomId, w: tuple) -> bool:
    """Independent re-check of a refuting witness."""
    if kind == "pa":
        return _verify_pa_refutation(model, ax, w)
    if ax.family is Family.TCU and ax.index == 7:
        (a,) = w
        return not a.is_identity() and mk.urs_domain(a) and _markov_unpoppable(a) if kind == "markov" else False
    if ax.family is Family.TC and ax.index in (4, 5) and kind == "markov":
        x, y, u, v = w
        return mk.mat_mul(x, y) == mk.mat_mul(u, v) and _markov_editors_refuted(x, y, u, v)
    if kind == "srs" and ax.family is Family.TC:
        cat = tcs.srs_concat
        if ax.index == 12:
            x, u, v = w
            return cat(cat(u, x), v) == x and (u, v) != ("", "")
        if ax.index == 7:
            x, y, z = w
            return cat(x, y) == cat(x, z) and y != z
    if kind == "dyadic" and ax.family is Family.TC and ax.index == 7:
        x, y, z = w
        return dy.dyad_concat(x, y) == dy.dyad_concat(x, z) and y != z
    if ax.family is Family.TC and ax.index == 12:
        x, u, v = w
        op = dy.dyad_concat if kind == "dyadic" else mk.mat_mul
        return op(op(u, x), v) == x
    return False


def check_axiom(target: str, axiom, cfg: SampleConfig | None = None) -> CheckReport:
    cfg = cfg or SampleConfig()
    ax = axiom if isinstance(axiom, AxiomId) else AxiomId.parse(axiom)
    kind, model = _parse_target(target)
    name = canonical_target(target)
    rng = random.Random(f"{cfg.seed}|{name}|{ax}")
    try:
        n = _run(kind, model, ax, rng, cfg)
    except _Refuted as r:
        if not _verify_refutation(kind, model, ax, r.witness):
            return CheckReport(ax, name, 0, Status.UNKNOWN, r.witness, "refutation did not re-verify")
        return CheckReport(ax, name, 0, Status.REFUTED, r.witness, r.note)
    except _Unknown as u:
        return CheckReport(ax, name, 0, Status.UNKNOWN, None, str(u))
    return CheckReport(ax, name, n, Status.HOLDS)


# -- the declared matrix ---------------------------------------------------------------

H, R = Status.HOLDS, Status.REFUTED
_PA = lambda r: axioms(Family.PA, r)  # noqa: E731
_TC = lambda r: axioms(Family.TC, r)  # noqa: E731
_TCU = lambda r: axioms(Family.TCU, r)  # noqa: E731


def expected_matrix() -> list[tuple[str, AxiomId, Status | None]]:
    """(target, axiom, expected status); None means reported but not asserted."""
    rows: list = []
    rows += [("nat", a, H) for a in _PA(range(1, 22))] + [("nat", PA17_MINUS, H)]
    for m in ("M0", "M1"):
        rows += [(m, a, H) for a in _PA(range(1, 16))]
        rows += [(m, a, None) for a in _PA((16, 17))]
        rows += [(m, PA17_MINUS, R)]
    rows += [("M2", a, H) for a in _PA(range(1, 18))] + [("M2", PA17_MINUS, H)]
    rows += [("Qnn", a, H) for a in _PA((1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 15))]
    rows += [("Qnn", AxiomId(Family.PA, 11), R), ("Qnn", AxiomId(Family.PA, 14), None)]
    rows += [("dyadic", a, H) for a in _TC(list(range(1, 9)) + [12])]
    rows += [("dyadic", a, H) for a in axioms(Family.TCL, range(1, 6))]
    rows += [("dyadic", a, H) for a in _TCU(range(1, 9))]
    rows += [("markov:nat", a, H) for a in _TC(list(range(1, 9)) + [12])]
    rows += [("markov:nat", a, H) for a in _TCU(range(1, 9))]
    rows += [("markov:M0", a, H) for a in _TC(range(1, 9))]
    rows += [("markov:M0", a, H) for a in _TCU((1, 2, 3, 4, 5, 6, 8))]
    rows += [("markov:M0", AxiomId(Family.TCU, 7), R), ("markov:M1", AxiomId(Family.TCU, 7), R)]
    rows += [("markov:M2", a, H) for a in _TCU(range(1, 9))]
    rows += [("markov:Qnn", AxiomId(Family.TC, 5), R)]
    rows += [("srs", a, H) for a in _TC(range(1, 9))] + [("srs", AxiomId(Family.TC, 12), R)]
    return rows


@dataclass
class SuiteEntry:
    report: CheckReport
    expected: Status | None

    @property
    def agrees(self) -> bool:
        return self.expected is None or self.report.status is self.expected


@dataclass
class Summary:
    entries: list[SuiteEntry]
    registry: list[tuple[str, bool]]

    @property
    def mismatches(self) -> list[SuiteEntry]:
        return [e for e in self.entries if not e.agrees]

    @property
    def unknowns(self) -> list[SuiteEntry]:
        return [e for e in self.entries if e.report.status is Status.UNKNOWN]

    @property
    def ok(self) -> bool:
        return not self.mismatches and all(v for _, v in self.registry)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def counts(self) -> dict:
        out = {s.value: 0 for s in Status}
        for e in self.entries:
            out[e.report.status.value] += 1
        return out

    def lines(self) -> list[str]:
        out = []
        for e in self.entries:
            mark = "ok " if e.agrees else "BAD"
            exp = "-" if e.expected is None else e.expected.value
            out.append(f"{mark} {e.report}  (expected {exp})")
        for name, good in self.registry:
            out.append(f"{'ok ' if good else 'BAD'} registry {name}")
        c = self.counts()
        out.append(f"holds={c['holds']} refuted={c['refuted']} unknown={c['unknown']} mismatches={len(self.mismatches)}")
        return out


def run_suite(cfg: SampleConfig | None = None) -> Summary:
    cfg = cfg or SampleConfig()
    entries = [SuiteEntry(check_axiom(t, a, cfg), exp) for t, a, exp in expected_matrix()]
    entries.sort(key=lambda e: (e.report.target, e.report.axiom.sort_key))
    registry = [(c.name, c.verify()) for c in known_counterexamples()]
    return Summary(entries, registry)
