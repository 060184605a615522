import math

import pytest
from hypothesis import given, settings, strategies as st

from urstrings.beta import (
    BetaSeq,
    beta_append,
    beta_decode,
    beta_encode,
    beta_get,
    beta_length,
    beta_project,
    beta_seq_star,
    cantor_pair,
    cantor_unpair,
)
from urstrings.errors import IndexOutOfRange, NotAPair, NotASequence


def brute_unpair(p):
    for s in range(p + 1):
        for x in range(s + 1):
            if s * s + x == p:
                return x, s - x
    return None


def test_pair_examples():
    assert cantor_pair(0, 0) == 0
    assert cantor_pair(1, 2) == 10
    with pytest.raises(NotAPair):
        cantor_unpair(3)


def test_two_is_a_pair():
    # (1 + 0)^2 + 1 = 2
    assert cantor_unpair(2) == (1, 0)


def test_unpair_against_brute_force():
    for p in range(200):
        expected = brute_unpair(p)
        if expected is None:
            with pytest.raises(NotAPair):
                cantor_unpair(p)
        else:
            assert cantor_unpair(p) == expected


@given(st.integers(0, 10**30), st.integers(0, 10**30))
def test_pair_round_trip_and_bounds(x, y):
    p = cantor_pair(x, y)
    assert cantor_unpair(p) == (x, y)
    assert x <= p and y <= p


def test_beta_get_examples():
    w = cantor_pair(52, 24)
    assert beta_get(w, 0) == 2
    assert beta_get(w, 1) == 3
    assert all(beta_get(cantor_pair(0, 0), i) == 0 for i in range(5))


def test_naive_encoding_of_two_three():
    s = beta_encode([2, 3], modulus="naive")
    assert s.parts() == (2, 52, 24)
    assert beta_decode(s) == [2, 3]


def test_compact_encoding_is_smaller_and_equivalent():
    s = beta_encode([2, 3])
    assert s.parts() == (2, 16, 6)
    assert s.code < beta_encode([2, 3], modulus="naive").code


def test_encode_examples():
    empty = beta_encode([])
    assert empty.code == cantor_pair(0, cantor_pair(0, 0)) == 0
    assert beta_length(empty) == 0 and beta_decode(empty) == []
    s = beta_encode([7])
    assert beta_project(s, 0) == 7
    assert beta_length(beta_encode([2, 3])) == 2
    assert beta_decode(beta_append(beta_encode([2, 3]), 9)) == [2, 3, 9]
    with pytest.raises(IndexOutOfRange):
        beta_project(beta_encode([2, 3]), 5)


def test_encode_rejects_negative_and_unknown_modulus():
    with pytest.raises(ValueError):
        beta_encode([-1])
    with pytest.raises(ValueError):
        beta_encode([1], modulus="other")


def test_not_a_sequence():
    with pytest.raises(NotASequence):
        beta_decode(BetaSeq(3))
    # length 1 but the second component 3 is not a pair
    with pytest.raises(NotASequence):
        beta_decode(BetaSeq(cantor_pair(1, 3)))
    with pytest.raises(NotASequence):
        BetaSeq(-1)


lists = st.lists(st.integers(0, 10**4), max_size=8)


@settings(max_examples=300)
@given(lists, st.sampled_from(["compact", "naive"]))
def test_round_trip(xs, modulus):
    if modulus == "naive" and xs and max(xs) > 60:
        xs = [x % 61 for x in xs]  # keep the naive factorial small in property runs
    s = beta_encode(xs, modulus)
    assert beta_decode(s) == xs
    assert beta_length(s) == len(xs)
    assert beta_seq_star(s.code)


@given(lists, st.integers(0, 10**4))
def test_append(xs, x):
    assert beta_decode(beta_append(beta_encode(xs), x)) == xs + [x]


@given(lists)
def test_moduli_are_coprime_and_exceed_entries(xs):
    if not xs:
        return
    n, u, v = beta_encode(xs).parts()
    moduli = [1 + (i + 1) * v for i in range(n)]
    for i, m in enumerate(moduli):
        assert xs[i] < m
        for m2 in moduli[i + 1:]:
            assert math.gcd(m, m2) == 1


def test_beta_relation_is_functional_at_small_scale():
    # for every small w and i there is exactly one x <= w with u = q*m + x, x < m
    for u in range(30):
        for v in range(6):
            w = cantor_pair(u, v)
            for i in range(4):
                m = 1 + (i + 1) * v
                xs = [x for x in range(w + 1) if x < m and any(q * m + x == u for q in range(u + 1))]
                assert xs == [beta_get(w, i)]
