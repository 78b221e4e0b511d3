#!/usr/bin/env python3
"""Run the full verification battery with per-criterion timing.

Exit status is nonzero when any criterion fails, so this can anchor a
CI job.  `--only 4,9` restricts to the listed criteria numbers.
"""

import argparse
import sys
import time

from hlkit.acceptance import CRITERIA


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--only", help="comma-separated criterion numbers")
    args = ap.parse_args(argv)

    wanted = None
    if args.only:
        wanted = {int(x) for x in args.only.replace(" ", "").split(",") if x}

    failures = 0
    total_start = time.perf_counter()
    for num, title, fn in CRITERIA:
        if wanted is not None and num not in wanted:
            continue
        start = time.perf_counter()
        ok, detail = fn()
        took = time.perf_counter() - start
        status = "PASS" if ok else "FAIL"
        print(f"[{status}] {num:2d} {title} ({took:.2f}s)")
        print(f"         {detail}")
        if not ok:
            failures += 1
    total = time.perf_counter() - total_start
    print(f"total: {total:.2f}s, failures: {failures}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
