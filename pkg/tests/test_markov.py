import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from urstrings import markov as mk
from urstrings.errors import (
    DecodeBudgetExceeded,
    DegreeTooLow,
    EmptyString,
    ModelMismatch,
    NotEuclidean,
    NotMember,
    NoWitness,
    OutOfBounds,
    PreconditionViolated,
    UnsupportedModel,
)
from urstrings.rings import ModelId, Poly, X, is_member, parse_matrix, parse_poly, sample_member
from urstrings.sides import Side

NAT, M0, M1, M2, QNN = ModelId.NAT, ModelId.M0, ModelId.M1, ModelId.M2, ModelId.QNONNEG
FRAK_A = "[[9,3X+2],[3X+4,X^2+2X+1]]"
FRAK_B = "[[5X+7,X^2-2],[25,5X-7]]"
FRAK_S = "[[X^2-6X+10,1/3*X^4-2*X^3+11/3*X^2-2*X+3],[3,X^2+1]]"


def M(text, model=M2):
    return mk.Mat2(model, *parse_matrix(text))


def word_matrix(w):
    """Independent product of 2x2 integer matrices."""
    a, b, c, d = 1, 0, 0, 1
    for ch in w:
        if ch == "a":
            a, b, c, d = a, a + b, c, c + d
        else:
            a, b, c, d = a + b, b, c + d, d
    return a, b, c, d


def test_basic_products():
    A, B = mk.atom_A(NAT), mk.atom_B(NAT)
    assert str(B * A) == "[[1,1],[1,2]]"
    assert (B * A * B * A).entries == (2, 3, 3, 5)
    assert mk.mat_identity(NAT) * A == A
    assert mk.encode_string(NAT, "a") == A
    assert mk.pow_A(NAT, 5).entries == (1, 5, 0, 1)
    assert mk.encode_string(NAT, "").is_identity()
    with pytest.raises(ModelMismatch):
        mk.mat_mul(A, mk.atom_A(M0))
    with pytest.raises(PreconditionViolated):
        mk.Mat2(NAT, 1, 1, 1, 1)
    with pytest.raises(NotMember):
        mk.Mat2(M0, 1, X / 2, 0, 1)


def test_letters_and_pops():
    assert mk.last_letter(mk.mat_identity(NAT)) is mk.Letter.EMPTY
    assert mk.last_letter(M("[[1,3],[1,4]]", NAT)) is mk.Letter.A
    assert mk.last_letter(M(FRAK_A)) is mk.Letter.A
    assert mk.pop_letter(M("[[1,1],[1,2]]", NAT)) == (mk.atom_B(NAT), mk.Letter.A)
    assert mk.pop_letter(mk.atom_A(NAT)) == (mk.mat_identity(NAT), mk.Letter.A)
    assert mk.pop_letter(M("[[2,3],[3,5]]", NAT))[0].entries == (2, 1, 3, 2)
    with pytest.raises(EmptyString):
        mk.pop_letter(mk.mat_identity(NAT))


def test_isomorphism_with_words():
    for k in range(9):
        for w in map("".join, itertools.product("ab", repeat=k)):
            m = mk.encode_string(NAT, w)
            assert m.entries == word_matrix(w)
            assert mk.decode_string(m) == w


def test_decode_budget():
    with pytest.raises(DecodeBudgetExceeded):
        mk.decode_string(mk.encode_string(NAT, "ab" * 10), budget=5)


@given(st.text("ab", max_size=15), st.text("ab", max_size=15))
def test_encode_is_a_homomorphism(u, v):
    assert mk.encode_string(NAT, u + v) == mk.encode_string(NAT, u) * mk.encode_string(NAT, v)


def test_prefix_examples():
    A, B = mk.atom_A(NAT), mk.atom_B(NAT)
    assert mk.is_prefix_qf(A, A * B)
    assert not mk.is_prefix_qf(B, A * B)
    assert mk.is_prefix_qf(mk.mat_identity(NAT), B * A * A)


def test_prefix_test_matches_word_prefixes():
    words = [w for k in range(6) for w in map("".join, itertools.product("ab", repeat=k))]
    for u in words:
        for w in words:
            assert mk.is_prefix_qf(mk.encode_string(NAT, u), mk.encode_string(NAT, w)) == w.startswith(u)


def test_editors_examples():
    A, B, I = mk.atom_A(NAT), mk.atom_B(NAT), mk.mat_identity(NAT)
    assert mk.editors_split(A, B, A * B, I) == (Side.LEFT, B)
    w = "abba"
    E = lambda s: mk.encode_string(NAT, s)  # noqa: E731
    for i, j in itertools.product(range(5), repeat=2):
        x, y, u, v = E(w[:i]), E(w[i:]), E(w[:j]), E(w[j:])
        side, eta = mk.editors_split(x, y, u, v)
        if side is Side.RIGHT:
            assert x == u * eta and eta * y == v
        else:
            assert x * eta == u and y == eta * v


def test_editors_identity_mu_reports_right():
    A = mk.atom_A(NAT)
    assert mk.editors_split(A, A, A, A) == (Side.RIGHT, mk.mat_identity(NAT))


def test_qnn_editors_failure():
    alpha = mk.Mat2(QNN, Fraction(7, 5), Fraction(1, 5), Fraction(3, 5), Fraction(4, 5))
    delta = mk.Mat2(QNN, Fraction(4, 5), Fraction(1, 5), Fraction(3, 5), Fraction(7, 5))
    A = mk.atom_A(QNN)
    with pytest.raises(NoWitness) as ei:
        mk.editors_split(alpha, A, A, delta)
    mu = mk.editors_mu(alpha, A)
    assert mu == (Fraction(4, 5), Fraction(-3, 5), Fraction(3, 5), Fraction(4, 5))
    assert "-3/5" in str(ei.value)


def test_qnn_near_miss_quadruple_is_not_unimodular():
    # lowering d to 1/5 gives determinant 4/25, outside SL2
    with pytest.raises(PreconditionViolated):
        mk.Mat2(QNN, Fraction(7, 5), Fraction(1, 5), Fraction(3, 5), Fraction(1, 5))


def test_fibonacci():
    fib = [0, 1]
    for _ in range(45):
        fib.append(fib[-1] + fib[-2])
    BA = mk.atom_B(NAT) * mk.atom_A(NAT)
    P = mk.mat_identity(NAT)
    for n in range(1, 21):
        P = P * BA
        assert P.entries == (fib[2 * n - 1], fib[2 * n], fib[2 * n], fib[2 * n + 1])


# -- ur-strings ---------------------------------------------------------------------

def test_urs_examples():
    assert mk.urs_encode(NAT, [5]).entries == (1, 5, 1, 6)
    assert mk.urs_encode(NAT, [3, 1]).entries == (4, 7, 5, 9)
    assert mk.urs_encode(NAT, []).is_identity() and mk.urs_domain(mk.mat_identity(NAT))
    assert mk.urs_pop(M("[[1,5],[1,6]]", NAT)) == (mk.mat_identity(NAT), 5)
    assert mk.urs_pop(M("[[4,7],[5,9]]", NAT)) == (M("[[1,3],[1,4]]", NAT), 1)
    assert mk.urs_decode(mk.urs_encode(NAT, [3, 1, 4])) == [3, 1, 4]
    assert mk.urs_decode(mk.mat_identity(NAT)) == []


def test_urs_failures_in_m0():
    bb = mk.atom_B(M0) * M(FRAK_B, M0)
    assert mk.urs_domain(bb)
    with pytest.raises(NotEuclidean):
        mk.urs_pop(bb)
    with pytest.raises(NotEuclidean):
        mk.urs_decode(M(FRAK_A, M0))
    with pytest.raises(PreconditionViolated):
        mk.urs_pop(mk.atom_A(NAT))
    with pytest.raises(EmptyString):
        mk.urs_pop(mk.mat_identity(NAT))


@pytest.mark.parametrize("model", [NAT, M0, M1, M2])
def test_urs_round_trip_over_models(model):
    rng = random.Random(str(model))
    for _ in range(100):
        xs = [sample_member(model, rng, 2) for _ in range(rng.randint(0, 5))]
        assert mk.urs_decode(mk.urs_encode(model, xs)) == xs


def test_stack_on_nat_is_exhaustive_and_unique():
    # every non-identity D-element with small entries pops, and the pop is the only one
    for a in range(1, 9):
        for b in range(0, 12):
            for c in range(0, 12):
                if (b * c + 1) % a:
                    continue
                d = (b * c + 1) // a
                m = mk.Mat2(NAT, a, b, c, d)
                if not mk.urs_domain(m) or m.is_identity():
                    continue
                beta, n = mk.urs_pop(m)
                assert beta * mk.block(NAT, n) == m and mk.urs_domain(beta)
                others = [k for k in range(0, b + 2)
                          if k != n and all(v >= 0 for v in mk.quad_mul(m.entries, (k + 1, -k, -1, 1)))
                          and mk.urs_domain(mk.Mat2(NAT, *mk.quad_mul(m.entries, (k + 1, -k, -1, 1))))]
                assert others == []


def test_frege_injective_small():
    seen = {}
    for k in range(4):
        for xs in itertools.product(range(4), repeat=k):
            f = mk.urs_frege(mk.urs_encode(NAT, xs))
            assert f not in seen
            seen[f] = xs


def test_bez_euc():
    assert mk.bez_euc_check(M0, *parse_matrix(FRAK_A)) == mk.BezEucReport(True, False, False)
    rep = mk.bez_euc_check(NAT, 2, 5, 1, 3)
    assert rep.bezout and rep.euclidean_ab and rep.euclidean_cd
    assert not mk.bez_euc_check(NAT, 2, 2, 1, 1).bezout
    assert mk.bez_euc_check(M2, *parse_matrix(FRAK_A)).to_json() == {
        "bezout": True, "euclidean_ab": True, "euclidean_cd": True}


# -- normal forms ------------------------------------------------------------------------

def test_named_normal_forms():
    assert str(mk.normal_form(M(FRAK_A))) == "B^{1/3*X} A^2 B^4 A^{1/3*X}"
    assert str(mk.normal_form(M(FRAK_B))) == "A^{1/5*X} B^3 A B A^2 B A^{1/5*X-1}"
    assert str(mk.normal_form(M(FRAK_S))) == "A^{1/3*X^2-2*X+3} B^3 A^{1/3*X^2}"
    assert str(mk.normal_form(M("[[9,9X+2],[9X+4,9X^2+6X+1]]"))) == "B^{X} A^2 B^4 A^{X}"


def test_frak_b_reduction_steps():
    visited, _ = mk.normal_form_steps(M(FRAK_B))
    shown = [
        "[[5*X+7,X^2-2],[25,5*X-7]]",
        "[[5*X+7,18/5*X+5],[25,18]]",
        "[[7/5*X+2,18/5*X+5],[7,18]]",
        "[[7/5*X+2,4/5*X+1],[7,4]]",
        "[[3/5*X+1,4/5*X+1],[3,4]]",
        "[[3/5*X+1,1/5*X],[3,1]]",
        "[[1,1/5*X],[0,1]]",
    ]
    assert [str(m) for m in visited[:len(shown)]] == shown


def test_normal_form_of_finite_words():
    assert str(mk.normal_form(mk.encode_string(NAT, "abba"))) == "A B^2 A"
    for k in range(8):
        for w in map("".join, itertools.product("ab", repeat=k)):
            nf = mk.normal_form(mk.encode_string(NAT, w))
            if w:
                runs = [(ch.upper(), len(list(g))) for ch, g in itertools.groupby(w)]
                assert nf.letters() == "".join(ch for ch, _ in runs)
                assert [int(e) for _, e in nf.runs] == [n for _, n in runs]
            else:
                assert nf.runs == ()


def test_normal_form_rejects_submodels():
    with pytest.raises(UnsupportedModel):
        mk.normal_form(M(FRAK_A, M0))


def random_m2_product(rng, runs):
    out = mk.mat_identity(M2)
    letters = []
    for k in range(runs):
        e = sample_member(M2, rng, 2)
        if e == 0:
            e = Poly.const(1)
        letter = mk.Letter.A if (k + rng.randint(0, 1)) % 2 else mk.Letter.B
        letters.append((letter, e))
        out = out * mk.power(M2, letter, e)
    return out


def test_normal_form_sound_and_norm_descends():
    rng = random.Random(99)
    for _ in range(300):
        alpha = random_m2_product(rng, rng.randint(1, 6))
        visited, nf = mk.normal_form_steps(alpha)
        assert nf.value() == alpha
        norms = [mk.ord_norm(m) for m in visited]
        assert all(x > y for x, y in zip(norms, norms[1:]))
        # normal forms are unique: re-normalizing the value gives the same runs
        assert mk.normal_form(nf.value()) == nf


def test_norm_examples():
    assert mk.nnorm(Fraction(7, 5), Fraction(1, 5)) == 7
    assert mk.nnorm(2, 4) == 4
    assert mk.ord_norm(M(FRAK_A)) == mk.OrdNorm(1, 0)
    assert str(mk.ord_norm(M(FRAK_A))) == "ω"
    with pytest.raises(PreconditionViolated):
        mk.nnorm(0, 0)


def test_nnorm_against_triple_reduction():
    for p in [Fraction(a, b) for a in range(0, 7) for b in range(1, 5)]:
        for q in [Fraction(a, b) for a in range(0, 7) for b in range(1, 5)]:
            if p == 0 and q == 0:
                continue
            # smallest k making both integral, then the triple is irreducible
            k = next(k for k in itertools.count(1) if (p * k).denominator == 1 and (q * k).denominator == 1)
            assert mk.nnorm(p, q) == max(int(p * k), int(q * k))


def test_profiles():
    prof = mk.profile(mk.normal_form(M("[[9,9X+2],[9X+4,9X^2+6X+1]]")))
    assert [str(r) for r in prof] == ["B:ϖ", "A:2", "B:4", "A:ϖ"]
    assert [str(r) for r in mk.profile(mk.normal_form(mk.encode_string(NAT, "abba")))] == ["A:1", "B:2", "A:1"]
    assert [str(r) for r in mk.profile(mk.normal_form(M(FRAK_S)))] == ["A:ϖ", "B:3", "A:ϖ"]


def test_cuts():
    nf = mk.normal_form(M(FRAK_A))
    assert not mk.cut_in_model(nf, mk.Cut(3, X / 5), M0)
    assert mk.cut_in_model(nf, mk.Cut(3, X / 3), M0)
    assert mk.prefix_at_cut(nf, mk.Cut(3, X / 3)) == M(FRAK_A)
    assert mk.prefix_at_cut(nf, mk.Cut(0, 0)).is_identity()
    with pytest.raises(OutOfBounds):
        mk.prefix_at_cut(nf, mk.Cut(7, 0))
    with pytest.raises(OutOfBounds):
        mk.prefix_at_cut(nf, mk.Cut(1, 3))


def test_occurrences_with_smaller_slope_leave_m0():
    # B^{X/3} A^2 B^4 A^{qX+z} with q < 1/3 has a lower-right entry whose X^2 coefficient is below 1
    nf = mk.normal_form(M(FRAK_A))
    for q in (Fraction(1, 4), Fraction(1, 6), Fraction(0)):
        for z in (0, 1, 2):
            off = q * X + z
            if not is_member(M2, off):
                continue
            assert not mk.cut_in_model(nf, mk.Cut(3, off), M0)
    for z in (0, -1, -2):
        assert mk.cut_in_model(nf, mk.Cut(3, X / 3 + z), M0)


def test_transposes():
    A, B = mk.atom_A(NAT), mk.atom_B(NAT)
    assert mk.transpose(A) == B
    assert mk.anti_transpose(A) == A
    for k in range(6):
        for w in map("".join, itertools.product("ab", repeat=k)):
            m = mk.encode_string(NAT, w)
            swapped = w[::-1].translate(str.maketrans("ab", "ba"))
            assert mk.transpose(m) == mk.encode_string(NAT, swapped)
            assert mk.anti_transpose(m) == mk.encode_string(NAT, w[::-1])


def test_substitution():
    a = M(FRAK_A)
    assert mk.subst_x(a, 3 * X) == M("[[9,9X+2],[9X+4,9X^2+6X+1]]")
    assert mk.subst_x(a, X - 1) == M("[[9,3X-1],[3X+1,X^2]]")
    assert mk.subst_x(a, X) == a
    with pytest.raises(DegreeTooLow):
        mk.subst_x(a, Poly.const(2))


def test_substituted_frak_a_prime():
    # X := X-1 pushes the exponents X/3 - 1/3 out of M2, so the normal form changes shape
    nf = mk.normal_form(mk.subst_x(M(FRAK_A), X - 1))
    assert str(nf) == "B^{1/3*X} A^8 B A^{1/3*X-1}"
    assert nf.value() == M("[[9,3X-1],[3X+1,X^2]]")


@pytest.mark.parametrize("p", ["3X", "6X", "3X+3", "3X^2", "9X^2+3X"])
def test_substitution_commutes_with_normal_form(p):
    p = parse_poly(p)
    nf = mk.normal_form(M(FRAK_A))
    expected = [(letter, e.subst(p) if isinstance(e, Poly) else e) for letter, e in nf.runs]
    got = mk.normal_form(mk.subst_x(M(FRAK_A), p))
    assert list(got.runs) == [(letter, e) for letter, e in expected]


def test_run_nf_json():
    nf = mk.normal_form(M(FRAK_A))
    assert nf.to_json() == [
        {"letter": "B", "exponent": "1/3*X"}, {"letter": "A", "exponent": "2"},
        {"letter": "B", "exponent": "4"}, {"letter": "A", "exponent": "1/3*X"},
    ]
