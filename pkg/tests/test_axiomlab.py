from fractions import Fraction

import pytest

from urstrings import markov as mk
from urstrings.axiomlab import (
    FRAK_A,
    PA17_MINUS,
    AxiomId,
    Family,
    SampleConfig,
    Status,
    canonical_target,
    check_axiom,
    expected_matrix,
    known_counterexamples,
)
from urstrings.errors import NotApplicable, ParseError
from urstrings.rings import ModelId, X, euc_raw, is_member, parse_poly

FAST = SampleConfig(count=40)


def test_axiom_ids():
    assert AxiomId.parse("pa17-") == AxiomId.parse("pa17⁻") == PA17_MINUS
    assert AxiomId.parse("tcλ3") == AxiomId.parse("tcl3") == AxiomId(Family.TCL, 3)
    assert str(AxiomId.parse("tcu7")) == "tcu7"
    with pytest.raises(ValueError):
        AxiomId(Family.TC, 9)
    with pytest.raises(ValueError):
        AxiomId(Family.PA, 16, "-")
    with pytest.raises(ParseError):
        AxiomId.parse("foo1")
    ids = sorted([AxiomId.parse(t) for t in ("tcu1", "pa17-", "pa2", "tc12", "pa17")], key=lambda a: a.sort_key)
    assert [str(a) for a in ids] == ["pa2", "pa17", "pa17-", "tc12", "tcu1"]


def test_targets():
    assert canonical_target("markov:Qnn") == "markov:Qnn"
    assert canonical_target("nat") == "nat"
    assert canonical_target("srs") == "srs"


def test_registry_verifies():
    names = [c.name for c in known_counterexamples()]
    assert len(names) == len(set(names))
    for c in known_counterexamples():
        assert c.verify(), c.name


def test_deterministic_under_seed():
    a = check_axiom("M2", "pa7", FAST)
    b = check_axiom("M2", "pa7", FAST)
    assert a == b and a.status is Status.HOLDS and a.samples > 0


def test_not_applicable():
    with pytest.raises(NotApplicable):
        check_axiom("srs", "tcu1", FAST)
    with pytest.raises(NotApplicable):
        check_axiom("M0", "pa19", FAST)
    with pytest.raises(NotApplicable):
        check_axiom("dyadic", "pa1", FAST)


def test_pa17_minus_refuted_in_m0_by_the_frak_a_row():
    rep = check_axiom("M0", "pa17-", FAST)
    assert rep.status is Status.REFUTED
    a, b, c, d = rep.witness
    assert (a, b, c, d) == FRAK_A
    # Bezout: ad - bc = 1; not Euclidean: the unique M2 division leaves M0
    assert a * d - b * c == 1
    q, r = euc_raw(ModelId.M2, b, a)
    assert q * a + r == b and not (is_member(ModelId.M0, q) and is_member(ModelId.M0, r))
    assert check_axiom("M2", "pa17-", FAST).status is Status.HOLDS


def test_pa17_in_m0_reported_with_a_checkable_witness():
    rep = check_axiom("M0", "pa17", FAST)
    assert rep.status is Status.REFUTED
    x, y = rep.witness
    q, r = euc_raw(ModelId.M2, x, y)
    assert q * y + r == x and not is_member(ModelId.M0, q)


def test_tcu7_refuted_in_m0_holds_in_m2():
    rep = check_axiom("markov:M0", "tcu7", FAST)
    assert rep.status is Status.REFUTED
    (alpha,) = rep.witness
    assert alpha.entries == FRAK_A and mk.urs_domain(alpha)
    assert check_axiom("markov:M2", "tcu7", FAST).status is Status.HOLDS


def test_qnn_discreteness_and_editors():
    rep = check_axiom("Qnn", "pa11", FAST)
    assert rep.status is Status.REFUTED and rep.witness == (Fraction(1, 2), 0)
    rep = check_axiom("markov:Qnn", "tc5", FAST)
    assert rep.status is Status.REFUTED
    x, y, u, v = rep.witness
    assert mk.mat_mul(x, y) == mk.mat_mul(u, v)
    assert Fraction(-3, 5) in mk.editors_mu(x, u)


def test_srs_bicancellation():
    rep = check_axiom("srs", "tc12", FAST)
    assert rep.status is Status.REFUTED and rep.witness == ("b", "a", "c")
    assert check_axiom("srs", "tc7", FAST).status is Status.HOLDS


@pytest.mark.parametrize("target,axiom", [("dyadic", "tcl3"), ("dyadic", "tcu5"), ("markov:nat", "tc4"),
                                          ("nat", "pa20"), ("M1", "pa12")])
def test_selected_entries_hold(target, axiom):
    assert check_axiom(target, axiom, FAST).status is Status.HOLDS


def test_report_json():
    js = check_axiom("srs", "tc12", FAST).to_json()
    assert js["status"] == "refuted" and js["axiom"] == "tc12" and js["witness"] == ["'b'", "'a'", "'c'"]


def test_expected_matrix_shape():
    rows = expected_matrix()
    assert len({(t, a) for t, a, _ in rows}) == len(rows)
    assert all(s is Status.HOLDS for t, _, s in rows if t == "nat")
    assert ("M2", AxiomId(Family.PA, 17), Status.HOLDS) in rows
    assert ("M0", PA17_MINUS, Status.REFUTED) in rows
    assert ("markov:M0", AxiomId(Family.TCU, 7), Status.REFUTED) in rows


def test_x_is_not_a_quotient_witness_in_m0():
    # the smallest pa16 failure: X divided by 2 needs the quotient X/2
    q, r = euc_raw(ModelId.M2, X, parse_poly("2"))
    assert q == X / 2 and r == 0 and not is_member(ModelId.M0, q)
