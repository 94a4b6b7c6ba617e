from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from orbidt.errors import UsageError, ZeroWeight, BracketVanishes
from orbidt.laurent import (
    CRational,
    LaurentPoly,
    RationalPoint,
    adams,
    bracket,
    c_poly,
    dual,
    evaluate,
    exponent,
)

T1 = exponent(0, (1, 0, 0))
T2 = exponent(0, (0, 1, 0))
T3 = exponent(0, (0, 0, 1))


def mono(*e, c=1):
    return LaurentPoly.monomial(tuple(e), c)


exps = st.tuples(*[st.integers(-4, 4)] * 4)
polys = st.dictionaries(exps, st.fractions(min_value=-5, max_value=5, max_denominator=4), max_size=4).map(
    lambda d: LaurentPoly(d, 4)
)
rationals = st.fractions(min_value=Fraction(1, 9), max_value=9, max_denominator=9)
points = st.tuples(rationals, rationals, rationals).map(lambda s: RationalPoint(*s))


def test_difference_of_squares():
    t1 = LaurentPoly.monomial(T1)
    assert (t1 + 1) * (t1 - 1) == t1 * t1 - 1
    assert (t1 + 1) * (t1 - 1) == LaurentPoly.monomial((4, 0, 0)) - 1


def test_additive_identity():
    p = mono(2, 0, 0) + mono(0, -2, 4, c=Fraction(3, 2))
    assert p + LaurentPoly.zero(3) == p
    assert p + 0 == p


def test_bracket_product_hand_value():
    lhs = bracket(T1) * bracket((-2, 0, 0))
    assert lhs == -(mono(2, 0, 0) - 2 + mono(-2, 0, 0))


def test_bracket_definition_and_antisymmetry():
    assert bracket(T1) == mono(1, 0, 0) - mono(-1, 0, 0)
    w = (2, 2, 0)
    assert bracket((-2, -2, 0)) == -bracket(w)


def test_bracket_trivial_raises():
    with pytest.raises(ZeroWeight):
        bracket((0, 0, 0))


def test_bracket_kappa_evaluates_to_c(pt):
    assert evaluate(bracket((2, 2, 2)), pt) == pt.c - 1 / pt.c


def test_arity_mismatch():
    with pytest.raises(UsageError):
        LaurentPoly.one(3) + LaurentPoly.one(4)


def test_adams_examples():
    p = LaurentPoly.monomial(exponent(1, (Fraction(1, 2), 0, 0), (1,)))
    assert adams(p, 3) == LaurentPoly.monomial(exponent(1, (Fraction(3, 2), 0, 0), (3,)))
    assert adams(p, 1) == p
    with pytest.raises(UsageError):
        adams(p, 0)


def test_dual_examples():
    p = mono(2, 0, 0) + mono(0, 2, -2)
    assert dual(p) == mono(-2, 0, 0) + mono(0, -2, 2)
    assert dual(bracket((2, 2, 0))) == -bracket((2, 2, 0))


def test_evaluate_examples():
    assert RationalPoint(2, 1, 1).bracket(T1) == Fraction(3, 2)
    s = RationalPoint(Fraction(2, 3), Fraction(5, 7), Fraction(3, 11))
    assert evaluate(LaurentPoly.monomial((2, 2, 2)), s) == Fraction(100, 5929)


def test_point_bracket_vanishes():
    with pytest.raises(BracketVanishes) as e:
        RationalPoint(2, Fraction(1, 2), 3).bracket((2, 2, 0))
    assert e.value.weight == (1, 1, 0)


def test_json_round_trip():
    p = mono(1, 0, -3, c=Fraction(-2, 3)) + mono(0, 0, 0, c=5)
    assert LaurentPoly.from_json(p.to_json()) == p
    assert p.to_json()["doubled"] is True


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentPoly.zero(4)


@given(polys, st.integers(1, 4), st.integers(1, 4))
def test_adams_composes(p, m, n):
    assert adams(adams(p, m), n) == adams(p, m * n)


@given(polys, polys, st.integers(1, 4))
def test_adams_is_ring_map(a, b, n):
    assert adams(a * b, n) == adams(a, n) * adams(b, n)
    assert adams(a + b, n) == adams(a, n) + adams(b, n)


@given(polys)
def test_dual_involution(p):
    assert dual(dual(p)) == p


t_polys = st.dictionaries(st.tuples(*[st.integers(-3, 3)] * 3), st.integers(-3, 3), max_size=4).map(
    lambda d: LaurentPoly(d, 3)
)


@given(t_polys, t_polys, points)
def test_evaluate_homomorphism(a, b, pt):
    assert evaluate(a * b, pt) == evaluate(a, pt) * evaluate(b, pt)
    assert evaluate(a + b, pt) == evaluate(a, pt) + evaluate(b, pt)


# -- CRational ---------------------------------------------------------------

def test_crational_normalization_and_equality():
    num = c_poly({2: 1, 0: -1})  # c^2 - 1
    den = c_poly({1: 1, 0: -1})  # c - 1
    x = CRational(num, den)
    assert x.is_polynomial()
    assert x.as_poly() == c_poly({1: 1, 0: 1})
    y = CRational(c_poly({1: 1}), c_poly({2: 1, 0: 1}))
    assert y == CRational(c_poly({-1: 2}), c_poly({0: 2, -2: 2}))
    assert (y * CRational(c_poly({2: 1, 0: 1}))) == CRational.c_power(1)
    with pytest.raises(TypeError):
        hash(y)


def test_crational_json_and_evaluate():
    y = CRational(c_poly({1: 1, -1: -1}), c_poly({2: 1, 0: 3}))
    assert CRational.from_json(y.to_json()) == y
    assert y.evaluate(2) == Fraction(2 - Fraction(1, 2), 7)


crats = st.tuples(
    st.dictionaries(st.integers(-3, 3), st.integers(-3, 3), max_size=3),
    st.dictionaries(st.integers(-3, 3), st.integers(1, 3), min_size=1, max_size=3),
).map(lambda nd: CRational(c_poly(nd[0]), c_poly(nd[1])))


@given(crats, crats, crats)
def test_crational_field_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) * c == a * c + b * c
    assert a - a == CRational.from_int(0)
    if b:
        assert (a / b) * b == a


@given(crats, st.fractions(min_value=2, max_value=7, max_denominator=3))
def test_crational_evaluation_homomorphism(a, c):
    b = CRational(c_poly({1: 1, 0: 1}), c_poly({0: 1, 2: 1}))
    assert (a * b).evaluate(c) == a.evaluate(c) * b.evaluate(c)
