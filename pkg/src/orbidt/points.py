"""Seeded rational evaluation points for the localization sums.

A point ``(s1, s2, s3)`` is accepted only when ``s1, s2, s3`` are
multiplicatively independent.  Then ``s^e = 1`` forces ``e = 0``, so no
bracket ``[w]`` with ``w != 1`` vanishes at the point or at any of its
powers, which is what the Adams levels of PExp need.
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .errors import UsageError
from .laurent import RationalPoint

MAX_PQ = 97
MAX_TRIES = 32


def _factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def valuations(x: Fraction) -> dict[int, int]:
    """Prime valuations of a positive rational."""
    out = dict(_factor(x.numerator))
    for p, e in _factor(x.denominator).items():
        out[p] = out.get(p, 0) - e
    return {p: e for p, e in out.items() if e}


def _rank(rows: list[list[Fraction]]) -> int:
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def is_generic(s: Sequence[Fraction]) -> bool:
    """True iff the positive rationals ``s`` are multiplicatively independent."""
    if any(Fraction(x) <= 0 for x in s):
        return False
    vals = [valuations(Fraction(x)) for x in s]
    primes = sorted(set().union(*vals))
    if len(primes) < len(s):
        return False
    rows = [[Fraction(v.get(p, 0)) for p in primes] for v in vals]
    return _rank(rows) == len(s)


def _draw(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, MAX_PQ), rng.randint(1, MAX_PQ))


def random_point(rng: random.Random, tries: int = MAX_TRIES) -> RationalPoint:
    for _ in range(tries):
        s = (_draw(rng), _draw(rng), _draw(rng))
        if is_generic(s):
            return RationalPoint(*s)
    raise UsageError(f"no generic point found in {tries} draws")


def random_points(count: int, seed: int, tries: int = MAX_TRIES) -> list[RationalPoint]:
    rng = random.Random(seed)
    return [random_point(rng, tries) for _ in range(count)]


def kappa_matched_pair(rng: random.Random, tries: int = MAX_TRIES) -> tuple[RationalPoint, RationalPoint]:
    """Two generic points with the same ``s1 s2 s3`` but different ``s``."""
    for _ in range(tries):
        p = random_point(rng, tries)
        u, v = _draw(rng), _draw(rng)
        s1, s2, s3 = p.s
        q = (s1 * u, s2 * v, s3 / (u * v))
        if q != p.s and is_generic(q):
            return p, RationalPoint(*q)
    raise UsageError(f"no kappa-matched pair found in {tries} draws")


def kappa_matched_pairs(count: int, seed: int) -> list[tuple[RationalPoint, RationalPoint]]:
    rng = random.Random(seed)
    return [kappa_matched_pair(rng) for _ in range(count)]


def parse_point(values: Sequence[str]) -> RationalPoint:
    if len(values) != 3:
        raise UsageError("a point needs three rationals s1 s2 s3")
    try:
        s = tuple(Fraction(v) for v in values)
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"bad rational in {values}: {e}") from None
    if any(x == 0 for x in s):
        raise UsageError("point coordinates must be nonzero")
    return RationalPoint(*s)
