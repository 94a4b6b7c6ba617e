from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from orbidt.errors import CalabiYauViolation, DomainError, NonKappaContent, UsageError
from orbidt.laurent import CRational, LaurentPoly, RationalPoint, c_poly
from orbidt.partitions import index_semigroup
from orbidt.pleth import (
    BracketTerm,
    QPair,
    SymbolicSum,
    assignments_to_sum,
    build_F,
    build_F_col,
    build_F_limit,
    build_F_num,
    build_F_r,
    chart_weights,
    expand,
    expand_term,
    mobius,
    pexp_direct,
    pexp_eval,
    plog,
    residual_series,
    rigidity_h,
    t_mono,
)
from orbidt.qseries import QSeries, z_enumerated
from orbidt.vertex import ahat_eval

T1, T2, T3 = t_mono(1, 0, 0), t_mono(0, 1, 0), t_mono(0, 0, 1)


def cser(N, coeffs):
    """Series in q with c-polynomial coefficients (r = 1)."""
    return QSeries(1, N, {(k,): c_poly(v) for k, v in coeffs.items()}, c_poly({0: 1}))


def test_calabi_yau_check():
    with pytest.raises(CalabiYauViolation):
        build_F(T1, T2, T1)


def test_build_F_symmetric(pt):
    a = expand(build_F(T1, T2, T3), pt, 4)
    b = expand(build_F(T3, T1, T2), pt, 4)
    assert a == b


def test_F_first_coefficient(pt):
    br = pt.bracket
    expected = -br(t_mono(0, 1, 1)) * br(t_mono(1, 0, 1)) * br(t_mono(1, 1, 0)) / (br(T1) * br(T2) * br(T3))
    assert expand(build_F(T1, T2, T3), pt, 3)[(1,)] == expected


def test_F_r_charts():
    assert build_F_r(1).canonical() == build_F(T1, T2, T3).canonical()
    for r in (1, 2, 3, 4):
        for w in chart_weights(r):
            assert tuple(map(sum, zip(*w))) == (2, 2, 2)
    assert chart_weights(2) == [(t_mono(2, 0, 0), t_mono(-1, 1, 0), T3), (t_mono(1, -1, 0), t_mono(0, 2, 0), T3)]


def test_F_col_examples(pt):
    assert len(build_F_col(1)) == 0
    s = build_F_col(2)
    assert sorted(t.lead_q for t in s.terms) == [(0, -1), (0, 1)]
    assert expand(s, pt, 3)[(1, 0)] == -pt.bracket(t_mono(1, 1, 0)) / pt.bracket(T3)


def test_F_limit_r1_expansion():
    got = expand(build_F_limit(1), "c", 3)
    assert got == cser(3, {1: {1: 1}, 2: {2: 1, 0: 1}, 3: {3: 1, 1: 1, -1: 1}})


@pytest.mark.parametrize("r", [2, 3])
def test_limit_forms_agree(r):
    assert build_F_limit(r, "double").canonical() == build_F_limit(r, "young").canonical()
    assert expand(build_F_limit(r, "double"), "c", 5) == expand(build_F_limit(r, "young"), "c", 5)


def test_F_num_r1():
    s = expand(build_F_num(1), "numeric", 4)
    assert [s[(n,)] for n in range(5)] == [0, 1, 2, 3, 4]  # q / (1 - q)^2
    assert [s.flip_q0()[(n,)] for n in range(5)] == [0, -1, 2, -3, 4]


def test_inverse_D_expansion():
    inv_d = expand_term(BracketTerm(Fraction(1), lead_q=(0,), pairs=(QPair((1, 1, 1), (1,)),)), "c", 5)
    assert inv_d == cser(5, {1: {0: -1}, 2: {1: -1, -1: -1}, 3: {2: -1, 0: -1, -2: -1}, 4: {3: -1, 1: -1, -1: -1, -3: -1},
                             5: {4: -1, 2: -1, 0: -1, -2: -1, -4: -1}})
    # D(q) / q = (c + 1/c) - q - 1/q, so (1/D) * ((c + 1/c) q - q^2 - 1) = q
    mult = cser(6, {0: {0: -1}, 1: {1: 1, -1: 1}, 2: {0: -1}})
    assert (inv_d * mult).truncate(5) == cser(5, {1: {0: 1}})


def test_pair_expansion_at_point_matches_geometric_product(pt):
    # 1/([uq][u/q]) = -q / ((1 - uq)(1 - q/u)) with u = t1
    u = pt.monomial(T1)
    term = BracketTerm(Fraction(1), lead_q=(0,), pairs=(QPair(T1, (1,)),))
    got = expand_term(term, pt, 6)
    geo = lambda x: QSeries(1, 6, {(k,): x**k for k in range(7)})
    expected = (geo(u) * geo(1 / u) * QSeries(1, 6, {(1,): -1}))
    assert got == expected


@pytest.mark.parametrize("S", [build_F_r(2), build_F_col(3), build_F_limit(2)])
def test_zero_constant_term(S, pt):
    mode = "c" if S.terms[0].num == () else pt
    assert expand(S, mode, 3).constant_term() == 0


def test_modes_reject_bad_input(pt):
    with pytest.raises(NonKappaContent):
        expand(build_F_r(1), "c", 2)
    with pytest.raises(UsageError):
        expand(build_F_r(1), "poly", 2)
    with pytest.raises(UsageError):
        expand(build_F_r(1), "nonsense", 2)


def test_adams_scales_everything():
    t = build_F_col(2).terms[0].adams(3)
    assert t.lead_q in ((0, 3), (0, -3))
    assert t.num == (t_mono(3, 3, 0),)
    assert t.pairs == (QPair((3, 3, 3), (3, 3)),)


def test_pexp_of_zero_is_one(pt):
    assert pexp_eval(SymbolicSum(2), pt, 4) == QSeries.one(2, 4)


def test_pexp_single_monomial():
    m = t_mono(1, -1, 0)
    got = pexp_eval(assignments_to_sum({(1,): [m]}, 1), "poly", 5)
    for k in range(6):
        assert got[(k,)] == LaurentPoly.monomial(tuple(k * x for x in m))


def test_nekrasov_first_order(pt):
    z = pexp_eval(build_F(T1, T2, T3), pt, 2)
    assert z[(1,)] == -ahat_eval([(1, 0, 0), (0, 1, 0), (0, 0, 1)], pt)


def test_mobius():
    assert [mobius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]


def test_plog_examples(pt):
    assert plog(lambda n: QSeries.one(1, 5), 5) == QSeries.zero(1, 5)
    S = assignments_to_sum({(1,): [t_mono(1, 0, 0)]}, 1)
    back = plog(lambda n: pexp_eval(S, pt.power(n), 5), 5)
    assert back == expand(S, pt, 5)


def test_plog_enumerated_r2(pt):
    fam = lambda n: z_enumerated(2, 3 // n, "point", pt.power(n))
    resid = plog(fam, 3) - expand(build_F_r(2), pt, 3)
    assert resid[(1, 0)] == -pt.bracket(t_mono(1, 1, 0)) / pt.bracket(T3)


def test_pexp_direct_examples():
    I = index_semigroup(2, 4)
    m = t_mono(0, 1, -1)
    z = pexp_direct({(1, 0): [m]}, I, 4)
    assert z[(2, 0)] == LaurentPoly.monomial(tuple(2 * x for x in m))
    assert all(k[1] == 0 or k[0] > 0 for k in z.keys())
    with pytest.raises(DomainError):
        pexp_direct({(0, 1): [m]}, I, 4)


assignments = st.dictionaries(
    st.sampled_from([(1, 0), (1, 1), (2, 0), (2, 1), (1, 2)]),
    st.lists(st.tuples(*[st.integers(-1, 1).map(lambda x: 2 * x)] * 3), min_size=1, max_size=2),
    min_size=1,
    max_size=2,
)


@given(assignments)
def test_pexp_direct_matches_pexp_eval(asg):
    I = index_semigroup(2, 4)
    assert pexp_direct(asg, I, 4) == pexp_eval(assignments_to_sum(asg, 2), "poly", 4)


@given(assignments, assignments)
def test_pexp_additive_to_multiplicative(a, b):
    sa, sb = assignments_to_sum(a, 2), assignments_to_sum(b, 2)
    assert pexp_eval(sa + sb, "poly", 4) == pexp_eval(sa, "poly", 4) * pexp_eval(sb, "poly", 4)


def test_rigidity_unit_class(pt):
    other = RationalPoint(pt.s1 * 3, pt.s2 / 2, pt.s3 * Fraction(2, 3))
    h1, h2 = rigidity_h((1, 0), pt, other)
    assert h1 == h2 == -1
    with pytest.raises(UsageError):
        rigidity_h((1, 0), pt, RationalPoint(1, 2, 3))


def test_residual_matches_color_sum_oracle(pt):
    # h_alpha is the expansion of sum_{0<i<=j<r}(q_[i,j] + q_[i,j]^-1) / D at c = s1 s2 s3
    r, N = 2, 5
    stripped = SymbolicSum(r, tuple(BracketTerm(t.scalar, t.lead_t, t.lead_q, (), (), t.pairs) for t in build_F_col(r).terms))
    oracle = expand(stripped, "c", N)
    resid = residual_series(pt, r, N)
    for k in set(oracle.keys()) | set(resid.keys()):
        assert resid[k] == CRational(oracle[k]).evaluate(pt.c)


def test_residual_vanishes_for_r1(pt):
    assert residual_series(pt, 1, 5) == QSeries.zero(1, 5)
