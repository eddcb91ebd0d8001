"""Run the full identity verification sweep and print a timing table.

Example:
    python3 scripts/run_verification.py --seed 42 --max-M 5 --max-N 3
"""

import argparse
import time

from reflectice.identities import (MAIN_GRID, verify_all)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--max-M", dest="max_M", type=int, default=5)
    parser.add_argument("--max-N", dest="max_N", type=int, default=3)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    print("seed=%d  max_M=%d  max_N=%d  jobs=%d  grid=%s"
          % (args.seed, args.max_M, args.max_N, args.jobs, MAIN_GRID))
    start = time.time()
    reports = verify_all(args.seed, max_M=args.max_M, max_N=args.max_N,
                         jobs=args.jobs)
    elapsed = time.time() - start

    width = max(len(r.identity_id) for r in reports)
    total = 0
    for r in reports:
        total += r.instances
        status = "ok" if r.all_passed else "FAIL"
        print("  %-*s  %6d instances  %s" % (width, r.identity_id,
                                             r.instances, status))
        if r.first_failure:
            print("    first failure: %s" % (r.first_failure,))
    failed = sum(1 for r in reports if not r.all_passed)
    print("%d identities, %d instances, %d failed, %.2fs"
          % (len(reports), total, failed, elapsed))
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
