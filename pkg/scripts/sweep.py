"""Run the verify harness over a range of n for every scope and print a table of case counts and timings."""

import argparse
import time

from tower_schubert.verify import SCOPES, run_verify


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--max-m", type=int, default=3)
    ap.add_argument("--scopes", nargs="+", choices=SCOPES, default=list(SCOPES))
    ap.add_argument("--workers", type=int, default=None)
    args = ap.parse_args()

    print(f"{'scope':<10} {'n':>2} {'perms':>6} {'cases':>7} {'seconds':>8}  status")
    failed = False
    for scope in args.scopes:
        for n in range(1, args.max_n + 1):
            start = time.perf_counter()
            rep = run_verify(scope, n, max_m=args.max_m, workers=args.workers)
            dt = time.perf_counter() - start
            failed |= not rep.ok
            print(f"{scope:<10} {n:>2} {rep.perms:>6} {rep.cases:>7} {dt:>8.2f}  {'OK' if rep.ok else 'FAILED'}")
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
