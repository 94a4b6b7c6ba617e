"""Tabulate h_alpha = (PLog Z - F_r) / ([t1t2]/[t3]) at kappa-matched points.

Columns agreeing across a row show that h_alpha depends on kappa only; the last
column evaluates the color-sum closed form at the same c.
"""
import argparse

from orbidt.laurent import CRational
from orbidt.pleth import BracketTerm, SymbolicSum, build_F_col, expand, residual_series
from orbidt.points import kappa_matched_pairs


def color_sum_oracle(r, N):
    terms = tuple(BracketTerm(t.scalar, t.lead_t, t.lead_q, (), (), t.pairs) for t in build_F_col(r).terms)
    return expand(SymbolicSum(r, terms), "c", N)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", type=int, default=2)
    ap.add_argument("--max-boxes", type=int, default=5)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    p1, p2 = kappa_matched_pairs(1, args.seed)[0]
    print(f"point 1: {p1}   point 2: {p2}   c = {p1.c}")
    h1 = residual_series(p1, args.r, args.max_boxes)
    h2 = residual_series(p2, args.r, args.max_boxes)
    oracle = color_sum_oracle(args.r, args.max_boxes)
    keys = sorted(set(h1.keys()) | set(h2.keys()) | set(oracle.keys()), key=lambda k: (sum(k), k))
    print(f"{'alpha':>12} {'h at pt1':>24} {'h at pt2':>24} {'closed form':>24}")
    for k in keys:
        print(f"{str(k):>12} {str(h1[k]):>24} {str(h2[k]):>24} {str(CRational(oracle[k]).evaluate(p1.c)):>24}")


if __name__ == "__main__":
    main()
