import pytest
from hypothesis import given, strategies as st

from orbidt.errors import DomainError, OutOfBound
from orbidt.partitions import (
    PlanePartition,
    color,
    color_vector,
    delta_I_member,
    enumerate_I_partitions,
    enumerate_partitions,
    from_slices,
    index,
    index_semigroup,
    interlaces,
    partitions_up_to,
    slices,
)


def pp(*boxes):
    return PlanePartition(tuple(boxes))


def macmahon_oracle(n_max):
    # coefficients of prod_k (1 - q^k)^(-k) by repeated geometric multiplication
    c = [1] + [0] * n_max
    for k in range(1, n_max + 1):
        for _ in range(k):
            for n in range(k, n_max + 1):
                c[n] += c[n - k]
    return c


SMALL = list(partitions_up_to(6))
partitions = st.sampled_from(SMALL)


def test_enumerate_small():
    assert enumerate_partitions(0) == [PlanePartition()]
    two = {p.boxes for p in enumerate_partitions(2)}
    assert two == {((0, 0, 0), (1, 0, 0)), ((0, 0, 0), (0, 1, 0)), ((0, 0, 0), (0, 0, 1))}


def test_counts_match_macmahon():
    assert [len(enumerate_partitions(n)) for n in range(9)] == macmahon_oracle(8)


def test_order_ideal_enforced():
    with pytest.raises(DomainError):
        pp((0, 0, 0), (2, 0, 0))
    with pytest.raises(DomainError):
        pp((0, 0, 1))


def test_color_vector_examples():
    assert color_vector(pp((0, 0, 0), (0, 0, 1)), 2) == (2, 0)
    assert color_vector(pp((0, 0, 0), (1, 0, 0)), 2) == (1, 1)
    assert color_vector(pp((0, 0, 0), (0, 1, 0)), 3) == (1, 0, 1)


@given(partitions, st.integers(1, 4))
def test_color_vector_sums_to_size(pi, r):
    assert sum(color_vector(pi, r)) == len(pi)


@given(partitions, st.integers(1, 4))
def test_color_matches_weight_arithmetic(pi, r):
    # character of x^a y^b z^c under weights (1, r-1, 0)
    for a, b, c in pi.boxes:
        assert color((a, b, c), r) == (a * 1 + b * (r - 1)) % r


def test_slices_examples():
    assert slices(pp((0, 0, 0))) == {0: (1,)}
    assert slices(pp((0, 0, 0), (1, 0, 0), (0, 1, 0))) == {-1: (1,), 0: (1,), 1: (1,)}


@given(partitions)
def test_slices_round_trip(pi):
    assert from_slices(slices(pi)) == pi


@given(partitions)
def test_adjacent_slices_interlace(pi):
    sl = slices(pi)
    for k, lam in sl.items():
        outer = k + 1 if k >= 0 else k - 1
        assert interlaces(lam, sl.get(outer, ()))


def test_interlaces():
    assert interlaces((3, 1), (2,))
    assert not interlaces((3, 1), (2, 2))
    assert interlaces((2,), ())
    assert not interlaces((1, 1), ())


def test_index_examples():
    assert index(PlanePartition(), 1) == 0
    assert index(pp((0, 0, 0)), 1) == 1
    assert index(pp((0, 0, 0), (1, 0, 0)), 1) == 0
    assert index(pp((0, 0, 0), (0, 1, 0)), 1) == 2
    assert index(pp((0, 0, 0), (0, 0, 1)), 1) == 2


@given(partitions, st.integers(1, 3))
def test_index_counts_zero_colored_boxes(pi, r):
    zero = [(i, j) for i, j, _ in pi.boxes if (i - j) % r == 0]
    up = sum(1 for i, j in zero if j >= i)
    assert index(pi, r) == up - (len(zero) - up)


def test_index_semigroup_examples():
    I = index_semigroup(2, 4)
    assert (1, 0) in I and (1, 1) in I
    assert (0, 1) not in I
    with pytest.raises(OutOfBound):
        I.is_in_I((3, 2))
    for r in (1, 2, 3):
        J = index_semigroup(r, 4)
        assert (1,) + (0,) * (r - 1) in J
        assert (1,) * r in J


def test_delta_members():
    assert delta_I_member((2, 2))
    assert not delta_I_member((2, 1))
    assert not delta_I_member((0, 0))


def test_enumerate_I_partitions_examples():
    I1 = index_semigroup(1, 5)
    assert sorted(enumerate_I_partitions((3,), I1)) == sorted([((3,),), ((2,), (1,)), ((1,), (1,), (1,))])
    I2 = index_semigroup(2, 5)
    assert enumerate_I_partitions((1, 1), I2) == [((1, 1),)]
    assert sorted(enumerate_I_partitions((2, 1), I2)) == sorted([((2, 1),), ((1, 1), (1, 0))])
    with pytest.raises(DomainError):
        enumerate_I_partitions((0, 1), I2)
