"""Print the equivariant limit series three ways: enumeration, transfer matrix, closed form."""
import argparse
import time

from orbidt.checks import as_crational
from orbidt.pleth import build_F_limit, pexp_eval
from orbidt.qseries import z_enumerated
from orbidt.transfer import z_limit


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", type=int, default=2)
    ap.add_argument("--max-boxes", type=int, default=5)
    args = ap.parse_args()
    r, N = args.r, args.max_boxes
    runs = {}
    for name, fn in (
        ("enumeration", lambda: z_enumerated(r, N, "limit")),
        ("transfer", lambda: z_limit(r, N)),
        ("closed form", lambda: as_crational(pexp_eval(build_F_limit(r), "c", N))),
    ):
        t0 = time.perf_counter()
        runs[name] = fn()
        print(f"{name:>12}: {time.perf_counter() - t0:.2f}s")
    ref = runs["enumeration"]
    for k, v in ref.items():
        same = all(s[k] == v for s in runs.values())
        print(f"{str(k):>14}  {v!r}  {'ok' if same else 'MISMATCH'}")


if __name__ == "__main__":
    main()
