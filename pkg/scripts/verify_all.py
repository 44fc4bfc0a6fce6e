"""Run both brute-force verifications over a range of dimensions and print a table.

    python scripts/verify_all.py --max-dim 6 --workers 4
"""

import argparse
import logging
import time

from ehrhart_delta.search import MAX_VERIFY_DIM, verify_main_theorem, verify_spanning_theorem


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-dim", type=int, default=5)
    parser.add_argument("--primes", type=int, nargs="+", default=[2, 3, 5])
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("-v", "--verbose", action="store_true")
    args = parser.parse_args()
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    if args.max_dim > MAX_VERIFY_DIM:
        parser.error(f"--max-dim is capped at {MAX_VERIFY_DIM}")

    failed = False
    print(f"{'d':>2} {'simplices':>9} {'simplex tuples':>14} {'witnesses':>9} {'mismatches':>10} {'sec':>7}")
    for d in range(1, args.max_dim + 1):
        start = time.perf_counter()
        rep = verify_main_theorem(d, workers=args.workers)
        failed |= not rep.ok
        print(f"{d:>2} {rep.simplices_checked:>9} {len(rep.realized_simplex_tuples):>14} "
              f"{len(rep.witnesses):>9} {len(rep.mismatches):>10} {time.perf_counter() - start:>7.2f}")
        for line in rep.mismatches:
            print("   ", line)

    print()
    print(f"{'d':>2} {'p':>2} {'simplices':>9} {'empty':>6} {'violations':>10}  empty-simplex indices")
    for d in range(1, args.max_dim + 1):
        for p in args.primes:
            rep = verify_spanning_theorem(d, p, workers=args.workers)
            failed |= not rep.ok
            dist = dict(sorted(rep.empty_index_distribution.items()))
            print(f"{d:>2} {p:>2} {rep.simplices_checked:>9} {rep.empty_simplices:>6} "
                  f"{len(rep.spanning_violations):>10}  {dist}")
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
