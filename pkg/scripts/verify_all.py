#!/usr/bin/env python3
"""Re-verify every classification fact and print per-fact timings.

Exit status is 0 when every instance of every fact agrees, 1 otherwise.
"""

import argparse
import sys
import time

from zdgenus import TheoremId, verify
from zdgenus.classify import all_pass


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--budget", type=int, default=10**8,
                        help="search budget for genus computations")
    parser.add_argument("--jsonl", help="also dump every report here")
    args = parser.parse_args()

    sink = open(args.jsonl, "w") if args.jsonl else None
    failures = 0
    total_time = 0.0
    total_reports = 0
    for tid in TheoremId:
        start = time.perf_counter()
        reports = verify(tid, args.budget)
        elapsed = time.perf_counter() - start
        total_time += elapsed
        total_reports += len(reports)
        bad = sum(1 for r in reports if not r.agreement)
        unsettled = sum(1 for r in reports if r.inconclusive)
        ok = all_pass(reports)
        failures += 0 if ok else 1
        print(f"{tid.value:<28} instances={len(reports):<4} fail={bad:<3} "
              f"open={unsettled:<3} {elapsed:6.1f}s  "
              f"{'PASS' if ok else 'FAIL'}")
        if sink:
            for r in reports:
                sink.write(r.to_json() + "\n")
    if sink:
        sink.close()
    print(f"{total_reports} reports in {total_time:.1f}s; "
          f"{failures} failing fact(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
