"""Fixed-point data of Hilb([C^3/mu_r]): virtual tangents, weights, vertex values.

Tangent characters are computed on integer exponent triples (``Counter``
keyed by ``(a, b, c)`` for ``t1^a t2^b t3^c``) and converted to
:class:`LaurentPoly` only at the public boundary.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Iterable

from .errors import BracketVanishes, DualityViolation, NeutralZero, PairingFailure
from .laurent import CRational, LaurentPoly, RationalPoint, c_poly
from .partitions import PlanePartition, color_vector, index

Weight = tuple[int, int, int]
KAPPA: Weight = (1, 1, 1)

_CUBE = {  # (1 - t1)(1 - t2)(1 - t3)
    (0, 0, 0): 1,
    (1, 0, 0): -1, (0, 1, 0): -1, (0, 0, 1): -1,
    (1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1,
    (1, 1, 1): -1,
}


def _add(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def _neg(a):
    return (-a[0], -a[1], -a[2])


def _partner(w: Weight) -> Weight:
    """``kappa / w``."""
    return (1 - w[0], 1 - w[1], 1 - w[2])


def to_poly(counts: dict) -> LaurentPoly:
    return LaurentPoly({(2 * a, 2 * b, 2 * c): v for (a, b, c), v in counts.items() if v}, 3)


def from_poly(p: LaurentPoly) -> Counter:
    out = Counter()
    for e, c in p.items():
        if any(x % 2 for x in e) or c.denominator != 1:
            raise DualityViolation(f"non-integral term {e}: {c}")
        out[(e[0] // 2, e[1] // 2, e[2] // 2)] = int(c)
    return out


def character_counts(pi: PlanePartition) -> Counter:
    return Counter(tuple(b) for b in pi.boxes)


def character(pi: PlanePartition) -> LaurentPoly:
    return to_poly(character_counts(pi))


def tangent_counts(pi: PlanePartition) -> Counter:
    q = character_counts(pi)
    raw = Counter()
    for w, m in q.items():
        raw[w] += m
        raw[_add(_neg(w), _neg(KAPPA))] -= m  # -dual(Q)/kappa
    qq = Counter()
    for w1, m1 in q.items():
        for w2, m2 in q.items():
            qq[(w1[0] - w2[0], w1[1] - w2[1], w1[2] - w2[2])] += m1 * m2
    for w, m in qq.items():
        for u, s in _CUBE.items():
            raw[(w[0] + u[0] - 1, w[1] + u[1] - 1, w[2] + u[2] - 1)] += m * s
    # global inversion: T = dual(T_raw)
    return Counter({_neg(w): m for w, m in raw.items() if m})


def check_tangent(t: dict) -> None:
    if t.get((0, 0, 0), 0):
        raise DualityViolation("virtual tangent has a trivial weight")
    for w, m in t.items():
        if m and t.get(_partner(w), 0) != -m:
            raise DualityViolation(f"coefficient of kappa/{w} is not -{m}")


def virtual_tangent(pi: PlanePartition) -> LaurentPoly:
    """``dual(Q - Qbar/kappa + Q Qbar (1-t1)(1-t2)(1-t3)/kappa)``."""
    t = tangent_counts(pi)
    check_tangent(t)
    return to_poly(t)


def invariant_counts(t: dict, r: int) -> Counter:
    return Counter({w: m for w, m in t.items() if m and (w[0] - w[1]) % r == 0})


def invariant_part(t: LaurentPoly, r: int) -> LaurentPoly:
    """Keep the monomials ``t1^a t2^b t3^c`` with ``a = b mod r``."""
    return t.filter(lambda e: ((e[0] - e[1]) // 2) % r == 0)


def pair_weights_counts(t: dict) -> list[Weight]:
    rest = Counter({w: m for w, m in t.items() if m})
    out: list[Weight] = []
    while rest:
        positive = sorted(w for w, m in rest.items() if m > 0)
        if not positive:
            raise PairingFailure(f"no positive weight left in {dict(rest)}")
        w = positive[0]
        p = _partner(w)
        if rest.get(p, 0) >= 0:
            raise PairingFailure(f"{w} has no negative partner kappa/w = {p}")
        m = rest[w]
        if -rest[p] < m:
            raise PairingFailure(f"multiplicities of {w} and {p} do not match")
        out.extend([w] * m)
        rest[w] -= m
        rest[p] += m
        for x in (w, p):
            if not rest[x]:
                del rest[x]
    return sorted(out)


def pair_weights(t: LaurentPoly) -> list[Weight]:
    """Multiset ``W`` with ``T = sum_{w in W} (w - kappa/w)``, sorted."""
    return pair_weights_counts(from_poly(t))


def tangent_from_weights(ws: Iterable[Weight]) -> LaurentPoly:
    out = Counter()
    for w in ws:
        out[tuple(w)] += 1
        out[_partner(tuple(w))] -= 1
    return to_poly(out)


def weights(pi: PlanePartition, r: int) -> list[Weight]:
    """``W(pi)`` for the mu_r-invariant virtual tangent at ``pi``."""
    t = invariant_counts(tangent_counts(pi), r)
    check_tangent(t)
    return pair_weights_counts(t)


def ahat_eval(ws: Iterable[Weight], pt: RationalPoint) -> Fraction:
    """``prod_{w in W} [kappa/w] / [w]`` at ``pt``."""
    s1, s2, s3 = pt.s
    c = pt.c
    out = Fraction(1)
    for a, b, e in ws:
        v = s1**a * s2**b * s3**e
        den = v - 1 / v
        vk = c / v
        num = vk - 1 / vk
        if not den:
            raise BracketVanishes((a, b, e))
        if not num:
            raise BracketVanishes(_partner((a, b, e)))
        out *= num / den
    return out


def limit_direction(w: Weight) -> int:
    """+1 if ``w -> 0``, -1 if ``w -> oo``, 0 if ``w`` is a power of kappa.

    Limit: t1, t3 -> 0 with |t1| << |t3| and kappa fixed, so
    ``w ~ t1^(a-b) t3^(c-b) kappa^b``.
    """
    a, b, c = w
    key = (a - b, c - b)
    if key > (0, 0):
        return 1
    if key < (0, 0):
        return -1
    return 0


def ahat_limit(ws: Iterable[Weight]) -> CRational:
    zero_count = 0
    inf_count = 0
    out = CRational.from_int(1)
    for w in ws:
        d = limit_direction(w)
        if d > 0:
            zero_count += 1
        elif d < 0:
            inf_count += 1
        else:
            b = w[0]
            if b == 0:
                raise NeutralZero("trivial weight in W")
            out = out * CRational(c_poly({1 - b: 1, b - 1: -1}), c_poly({b: 1, -b: -1}))
    return out * CRational.c_power(zero_count - inf_count, (-1) ** (zero_count + inf_count))


def vertex_record(pi: PlanePartition, r: int, pt: RationalPoint | None = None) -> dict:
    ws = weights(pi, r)
    rec = {
        "boxes": [list(b) for b in pi.boxes],
        "alpha": list(color_vector(pi, r)),
        "W": [list(w) for w in ws],
        "index": index(pi, r),
    }
    if pt is not None:
        rec["ahat_at_point"] = str(ahat_eval(ws, pt))
    return rec
