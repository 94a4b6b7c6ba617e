"""Run the acceptance criteria and print one line per criterion."""
import argparse
import sys

from orbidt.checks import CRITERIA, run_criterion


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("names", nargs="*", default=list(CRITERIA))
    args = ap.parse_args()
    ok = True
    for name in args.names:
        res = run_criterion(name)
        print(res.line(), flush=True)
        for f in res.failures[:3]:
            print("   ", f)
        ok &= res.ok
    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
