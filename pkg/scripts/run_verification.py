#!/usr/bin/env python3
"""Run the full verification battery and print a human-readable summary.

Equivalent to `python3 -m supermolien verify --suite all --format table`
but with wall-clock timing per suite.  Exits nonzero when anything fails.
"""

import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from supermolien.verify import SUITES, run_suite


def main() -> int:
    seed = int(sys.argv[1]) if len(sys.argv) > 1 else 42
    grand_pass = grand_fail = 0
    for suite in SUITES[:-1]:
        t0 = time.monotonic()
        rep = run_suite(suite, seed)
        dt = time.monotonic() - t0
        grand_pass += rep["passed"]
        grand_fail += rep["failed"]
        print(f"[{suite:>10}] passed={rep['passed']:3d} failed={rep['failed']} ({dt:.1f}s)")
        for c in rep["checks"]:
            if not c["pass"]:
                print(f"    FAIL {c['name']}: {c}")
    print(f"[     total] passed={grand_pass} failed={grand_fail} seed={seed}")
    return 0 if grand_fail == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
