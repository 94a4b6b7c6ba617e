"""Wall-clock cost of the localization sum and of PExp as N grows."""
import argparse
import time

from orbidt.pleth import build_F_col, build_F_r, pexp_eval
from orbidt.points import random_points
from orbidt.qseries import z_enumerated


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", type=int, default=2)
    ap.add_argument("--max-boxes", type=int, default=8)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    pt = random_points(1, 0)[0]
    S = build_F_r(args.r) + build_F_col(args.r)
    print(f"{'N':>3} {'enumerate (s)':>14} {'pexp (s)':>10} equal")
    for N in range(1, args.max_boxes + 1):
        t0 = time.perf_counter()
        z = z_enumerated(args.r, N, "point", pt, jobs=args.jobs)
        t1 = time.perf_counter()
        p = pexp_eval(S, pt, N)
        t2 = time.perf_counter()
        print(f"{N:>3} {t1 - t0:>14.2f} {t2 - t1:>10.2f} {z == p}")


if __name__ == "__main__":
    main()
