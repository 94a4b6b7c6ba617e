"""The acceptance criteria A1-A10 as plain functions.

Each check returns a :class:`CriterionResult`; ``selfcheck`` and the test
suite both go through :func:`run_criteria`.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from .laurent import CRational
from .partitions import enumerate_partitions, index, index_semigroup, partitions_up_to
from .pleth import (
    assignments_to_sum,
    build_F_col,
    build_F_limit,
    build_F_num,
    build_F_r,
    expand,
    pexp_direct,
    pexp_eval,
    plog,
    residual_series,
)
from .points import kappa_matched_pairs, random_points
from .qseries import QSeries, z_enumerated
from .transfer import transfer_checks, z_limit
from .vertex import (
    ahat_limit,
    check_tangent,
    invariant_counts,
    pair_weights,
    tangent_counts,
    tangent_from_weights,
    to_poly,
    weights,
)


@dataclass
class CriterionResult:
    name: str
    ok: bool
    detail: str = ""
    seconds: float = 0.0
    failures: list = field(default_factory=list)

    def line(self) -> str:
        return f"{self.name}: {'PASS' if self.ok else 'FAIL'} ({self.seconds:.1f}s) {self.detail}"


def _first_mismatch(a: QSeries, b: QSeries):
    for k in sorted(set(a.keys()) | set(b.keys()), key=lambda k: (sum(k), k)):
        if a[k] != b[k]:
            return k, a[k], b[k]
    return None


def as_crational(s: QSeries) -> QSeries:
    """Re-express c-polynomial coefficients as CRational."""
    return s.map(lambda v: v if isinstance(v, CRational) else CRational(v), CRational.from_int(1))


def macmahon(n_max: int) -> list[int]:
    """Coefficients of ``prod_k (1 - q^k)^{-k}`` up to ``q^n_max``."""
    coeffs = [1] + [0] * n_max
    for k in range(1, n_max + 1):
        for _ in range(k):
            for n in range(k, n_max + 1):
                coeffs[n] += coeffs[n - k]
    return coeffs


# -- criteria -------------------------------------------------------------------

def a1_main_theorem(cases=((1, 8), (2, 7), (3, 6)), n_points: int = 3, seed: int = 2024) -> CriterionResult:
    fails = []
    pts = random_points(n_points, seed)
    for r, N in cases:
        closed = build_F_r(r) + build_F_col(r)
        for pt in pts:
            lhs = z_enumerated(r, N, "point", pt)
            rhs = pexp_eval(closed, pt, N)
            bad = _first_mismatch(lhs, rhs)
            if bad:
                fails.append({"r": r, "N": N, "point": str(pt), "alpha": bad[0], "lhs": str(bad[1]), "rhs": str(bad[2])})
    return CriterionResult("A1", not fails, f"cases={list(cases)} points={n_points}", failures=fails)


def a2_limit_index(rs=(1, 2, 3), n_max: int = 7) -> CriterionResult:
    fails = []
    count = 0
    for r in rs:
        for pi in partitions_up_to(n_max):
            if not len(pi):
                continue
            count += 1
            if ahat_limit(weights(pi, r)) != CRational.c_power(index(pi, r), (-1) ** (index(pi, r) % 2)):
                fails.append({"r": r, "boxes": pi.boxes})
    return CriterionResult("A2", not fails, f"{count} partitions checked", failures=fails)


def a3_limit_series(rs=(1, 2, 3), N: int = 7) -> CriterionResult:
    fails = []
    for r in rs:
        enum = z_enumerated(r, N, "limit")
        ops = z_limit(r, N)
        closed = as_crational(pexp_eval(build_F_limit(r), "c", N))
        for name, other in (("transfer", ops), ("closed form", closed)):
            bad = _first_mismatch(enum, other)
            if bad:
                fails.append({"r": r, "vs": name, "alpha": bad[0], "lhs": repr(bad[1]), "rhs": repr(bad[2])})
    return CriterionResult("A3", not fails, f"r={list(rs)} N={N}", failures=fails)


def a4_numerical(rs=(2, 3), N: int = 8) -> CriterionResult:
    fails = []
    for r in rs:
        lhs = z_enumerated(r, N, "numerical")
        rhs = pexp_eval(build_F_num(r), "numeric", N).flip_q0()
        bad = _first_mismatch(lhs, rhs)
        if bad:
            fails.append({"r": r, "alpha": bad[0], "lhs": str(bad[1]), "rhs": str(bad[2])})
    return CriterionResult("A4", not fails, f"r={list(rs)} N={N}", failures=fails)


def a5_rigidity(r: int = 2, N: int = 6, n_pairs: int = 2, seed: int = 5) -> CriterionResult:
    fails = []
    h10 = None
    for p1, p2 in kappa_matched_pairs(n_pairs, seed):
        h1 = residual_series(p1, r, N)
        h2 = residual_series(p2, r, N)
        bad = _first_mismatch(h1, h2)
        if bad:
            fails.append({"points": [str(p1), str(p2)], "alpha": bad[0], "h1": str(bad[1]), "h2": str(bad[2])})
        unit = (1,) + (0,) * (r - 1)
        h10 = h1[unit]
        if h10 != -1 or h2[unit] != -1:
            fails.append({"points": [str(p1), str(p2)], "h_unit": [str(h1[unit]), str(h2[unit])]})
    return CriterionResult("A5", not fails, f"r={r} |alpha|<={N} pairs={n_pairs} h_(1,0)={h10}", failures=fails)


def a6_tangent(rs=(1, 2, 3), n_max: int = 7) -> CriterionResult:
    fails = []
    count = 0
    for r in rs:
        for pi in partitions_up_to(n_max):
            if not len(pi):
                continue
            count += 1
            t = invariant_counts(tangent_counts(pi), r)
            try:
                check_tangent(t)
                poly = to_poly(t)
                if tangent_from_weights(pair_weights(poly)) != poly:
                    fails.append({"r": r, "boxes": pi.boxes, "error": "round trip"})
            except Exception as e:  # report, do not abort the sweep
                fails.append({"r": r, "boxes": pi.boxes, "error": repr(e)})
    return CriterionResult("A6", not fails, f"{count} tangents checked", failures=fails)


def random_assignment(rng: random.Random, I, N: int) -> dict:
    members = [a for a in I.sorted_members() if sum(a) <= N]
    chosen = rng.sample(members, rng.randint(1, min(4, len(members))))
    out = {}
    for a in chosen:
        out[a] = [tuple(2 * rng.randint(-2, 2) for _ in range(3)) for _ in range(rng.randint(1, 3))]
    return out


def a7_pexp(r: int = 2, N: int = 5, trials: int = 20, seed: int = 11, N_log: int = 6) -> CriterionResult:
    fails = []
    rng = random.Random(seed)
    I = index_semigroup(r, N)
    for n in range(trials):
        asg = random_assignment(rng, I, N)
        lhs = pexp_direct(asg, I, N)
        rhs = pexp_eval(assignments_to_sum(asg, r), "poly", N)
        bad = _first_mismatch(lhs, rhs)
        if bad:
            fails.append({"trial": n, "assignment": {str(k): v for k, v in asg.items()}, "alpha": bad[0]})
    pt = random_points(1, seed)[0]
    s1, s2 = build_F_r(r), build_F_col(r)
    prod = pexp_eval(s1, pt, N) * pexp_eval(s2, pt, N)
    bad = _first_mismatch(pexp_eval(s1 + s2, pt, N), prod)
    if bad:
        fails.append({"multiplicative": str(bad[0])})
    S = s1 + s2
    back = plog(lambda n: pexp_eval(S, pt.power(n), N_log // n), N_log)
    bad = _first_mismatch(back, expand(S, pt, N_log))
    if bad:
        fails.append({"plog": str(bad[0])})
    return CriterionResult("A7", not fails, f"{trials} assignments, N={N}; round trip N={N_log}", failures=fails)


def a8_operators(rs=(1, 2), N: int = 4) -> CriterionResult:
    results = transfer_checks(rs, N)
    fails = [r.to_json() for r in results if not r.ok]
    return CriterionResult("A8", not fails, ", ".join(f"{r.name}={r.ok}" for r in results), failures=fails)


def a9_semigroup(rs=(2, 3), bound: int = 8) -> CriterionResult:
    fails = []
    for r in rs:
        I = index_semigroup(r, bound)
        mem = I.sorted_members()
        for a in mem:
            for b in mem:
                s = tuple(x + y for x, y in zip(a, b))
                if sum(s) > bound:
                    break
                if s not in I:
                    fails.append({"r": r, "a": a, "b": b})
        for j in range(1, r):
            e = tuple(1 if k == j else 0 for k in range(r))
            if e in I:
                fails.append({"r": r, "unit": e})
    return CriterionResult("A9", not fails, f"r={list(rs)} bound={bound}", failures=fails)


def a10_enumeration(n_count: int = 10, n_transfer: int = 8) -> CriterionResult:
    fails = []
    mm = macmahon(max(n_count, n_transfer))
    counts = [len(enumerate_partitions(n)) for n in range(n_count + 1)]
    if counts != mm[: n_count + 1]:
        fails.append({"counts": counts, "macmahon": mm[: n_count + 1]})
    plain = z_limit(1, n_transfer, limit=False)
    via_ops = [int(plain[(n,)]) for n in range(n_transfer + 1)]
    if via_ops != mm[: n_transfer + 1]:
        fails.append({"transfer": via_ops, "macmahon": mm[: n_transfer + 1]})
    return CriterionResult("A10", not fails, f"counts {counts}", failures=fails)


CRITERIA: dict[str, Callable[[], CriterionResult]] = {
    "A1": a1_main_theorem,
    "A2": a2_limit_index,
    "A3": a3_limit_series,
    "A4": a4_numerical,
    "A5": a5_rigidity,
    "A6": a6_tangent,
    "A7": a7_pexp,
    "A8": a8_operators,
    "A9": a9_semigroup,
    "A10": a10_enumeration,
}


def run_criterion(name: str) -> CriterionResult:
    t0 = time.perf_counter()
    res = CRITERIA[name]()
    res.seconds = time.perf_counter() - t0
    return res


def run_criteria(names=None) -> list[CriterionResult]:
    return [run_criterion(n) for n in (names or CRITERIA)]
