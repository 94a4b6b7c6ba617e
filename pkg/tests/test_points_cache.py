import json
from fractions import Fraction

import pytest

from orbidt.cache import cache_path, partition_records
from orbidt.errors import UsageError
from orbidt.points import is_generic, kappa_matched_pairs, parse_point, random_points


def test_genericity():
    assert is_generic([Fraction(2), Fraction(3), Fraction(5, 7)])
    assert not is_generic([Fraction(2), Fraction(4), Fraction(3)])
    assert not is_generic([Fraction(6), Fraction(2), Fraction(3)])
    assert not is_generic([Fraction(1), Fraction(2), Fraction(3)])


def test_random_points_deterministic():
    a = random_points(4, 7)
    assert a == random_points(4, 7)
    assert a != random_points(4, 8)
    for p in a:
        assert is_generic(p.s)
        assert all(1 <= x.numerator <= 97 and x.denominator <= 97 for x in p.s)


def test_kappa_matched():
    for p, q in kappa_matched_pairs(3, 1):
        assert p.c == q.c and p.s != q.s


def test_parse_point():
    assert parse_point(["2", "3/4", "-5"]).s == (2, Fraction(3, 4), -5)
    with pytest.raises(UsageError):
        parse_point(["1", "0", "2"])
    with pytest.raises(UsageError):
        parse_point(["x", "1", "2"])


def test_cache_round_trip(tmp_path):
    cold = partition_records(2, 3, tmp_path)
    path = cache_path(tmp_path, 2, 3)
    assert path.exists()
    assert [json.loads(l) for l in path.read_text().splitlines()] == cold
    assert partition_records(2, 3, tmp_path) == cold
    assert partition_records(2, 3, None) == cold


def test_cache_env(tmp_path, monkeypatch):
    monkeypatch.setenv("ORBIDT_CACHE_DIR", str(tmp_path))
    partition_records(1, 2)
    assert cache_path(tmp_path, 1, 2).exists()
