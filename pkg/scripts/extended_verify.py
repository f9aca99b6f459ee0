"""Run the verification suites at larger degrees and report wall time per check.

Usage: python3 scripts/extended_verify.py [max_n] [jobs]
"""

from __future__ import annotations

import sys
import time

from focksuture.verify import run_suite


def main() -> None:
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 8
    jobs = int(sys.argv[2]) if len(sys.argv) > 2 else 1
    t0 = time.perf_counter()
    report = run_suite("all", max_n, 0, jobs)
    print(report.to_text())
    print(f"total wall time {time.perf_counter() - t0:.1f}s")
    sys.exit(0 if report.passed else 1)


if __name__ == "__main__":
    main()
