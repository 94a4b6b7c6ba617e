from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from orbidt.errors import BracketVanishes, NeutralZero, PairingFailure
from orbidt.laurent import CRational, LaurentPoly, RationalPoint, dual
from orbidt.partitions import PlanePartition, index, partitions_up_to
from orbidt.vertex import (
    ahat_eval,
    ahat_limit,
    character,
    invariant_part,
    limit_direction,
    pair_weights,
    pair_weights_counts,
    tangent_from_weights,
    vertex_record,
    virtual_tangent,
    weights,
)

BOX = PlanePartition(((0, 0, 0),))
SMALL = [p for p in partitions_up_to(6)]


def m(a, b, c, coeff=1):
    return LaurentPoly.monomial((2 * a, 2 * b, 2 * c), coeff)


def test_character_examples():
    assert character(PlanePartition()) == LaurentPoly.zero(3)
    assert character(BOX) == LaurentPoly.one(3)
    assert character(PlanePartition(((0, 0, 0), (1, 0, 0)))) == 1 + m(1, 0, 0)


def test_single_box_tangent():
    expected = m(1, 0, 0) + m(0, 1, 0) + m(0, 0, 1) - m(1, 1, 0) - m(1, 0, 1) - m(0, 1, 1)
    assert virtual_tangent(BOX) == expected
    assert virtual_tangent(PlanePartition()) == LaurentPoly.zero(3)


def test_tangent_matches_textbook_formula_by_direct_expansion():
    # independent check through LaurentPoly arithmetic rather than Counters
    pi = PlanePartition(((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)))
    Q = character(pi)
    kappa = m(1, 1, 1)
    cube = (1 - m(1, 0, 0)) * (1 - m(0, 1, 0)) * (1 - m(0, 0, 1))
    inv_k = m(-1, -1, -1)
    raw = Q - dual(Q) * inv_k + Q * dual(Q) * cube * inv_k
    assert virtual_tangent(pi) == dual(raw)
    assert kappa * inv_k == LaurentPoly.one(3)


def test_invariant_part_examples():
    t = virtual_tangent(BOX)
    assert invariant_part(t, 1) == t
    assert invariant_part(t, 2) == m(0, 0, 1) - m(1, 1, 0)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_duality_for_small_partitions(r):
    kappa = m(1, 1, 1)
    for pi in SMALL:
        t = invariant_part(virtual_tangent(pi), r)
        assert t.constant_term() == 0
        assert dual(t) * kappa == -t


def test_pair_weights_examples():
    assert pair_weights(virtual_tangent(BOX)) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert weights(BOX, 2) == [(0, 0, 1)]
    assert weights(PlanePartition(), 1) == []


def test_pairing_failure():
    with pytest.raises(PairingFailure):
        pair_weights_counts({(1, 0, 0): 1})
    with pytest.raises(PairingFailure):
        pair_weights_counts({(1, 0, 0): 2, (0, 1, 1): -1})


@given(st.sampled_from(SMALL), st.integers(1, 3))
def test_pair_weights_round_trip(pi, r):
    t = invariant_part(virtual_tangent(pi), r)
    assert tangent_from_weights(pair_weights(t)) == t


def test_ahat_hand_values():
    assert ahat_eval([], RationalPoint(2, 3, 5)) == 1
    assert ahat_eval(weights(BOX, 2), RationalPoint(2, 3, 5)) == Fraction(175, 144)


def test_ahat_single_box_r1_by_brackets(pt):
    # [t2 t3][t1 t3][t1 t2] / ([t1][t2][t3])
    s1, s2, s3 = pt.s
    br = lambda v: v - 1 / v
    expected = br(s2 * s3) * br(s1 * s3) * br(s1 * s2) / (br(s1) * br(s2) * br(s3))
    assert ahat_eval(weights(BOX, 1), pt) == expected


def test_ahat_vanishing_bracket():
    with pytest.raises(BracketVanishes):
        ahat_eval([(1, 0, 0)], RationalPoint(1, 3, 5))


def test_limit_direction():
    assert limit_direction((1, 0, 0)) == 1
    assert limit_direction((0, 1, 0)) == -1
    assert limit_direction((0, 0, 1)) == 1
    assert limit_direction((2, 2, 2)) == 0


def test_ahat_limit_examples():
    c = CRational.c_power
    assert ahat_limit([(1, 0, 0), (0, 1, 0), (0, 0, 1)]) == c(1, -1)
    assert ahat_limit([(0, 0, 1)]) == c(1, -1)
    with pytest.raises(NeutralZero):
        ahat_limit([(0, 0, 0)])


def test_neutral_weight_limit_value():
    # [kappa^(1-b)]/[kappa^b] in c for w = kappa^2
    v = ahat_limit([(2, 2, 2)])
    assert v.evaluate(3) == (Fraction(1, 3) - 3) / (9 - Fraction(1, 9))


@pytest.mark.parametrize("r", [1, 2, 3])
def test_limit_equals_signed_index(r):
    for pi in SMALL:
        if len(pi):
            k = index(pi, r)
            assert ahat_limit(weights(pi, r)) == CRational.c_power(k, (-1) ** (k % 2))


def test_limit_agrees_with_large_point_evaluation():
    # t1 << t3 << 1 with kappa fixed: the vertex value approaches the limit
    pi = PlanePartition(((0, 0, 0), (0, 1, 0), (0, 0, 1)))
    ws = weights(pi, 1)
    c = Fraction(3)
    eps = Fraction(1, 10**6)
    s1, s3 = eps**2, eps
    pt = RationalPoint(s1, c / (s1 * s3), s3)
    approx = ahat_eval(ws, pt)
    exact = ahat_limit(ws).evaluate(c)
    assert abs(approx - exact) < Fraction(1, 1000)


def test_vertex_record(pt):
    rec = vertex_record(BOX, 2, RationalPoint(2, 3, 5))
    assert rec == {"boxes": [[0, 0, 0]], "alpha": [1, 0], "W": [[0, 0, 1]], "index": 1, "ahat_at_point": "175/144"}
