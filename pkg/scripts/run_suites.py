#!/usr/bin/env python3
"""Run every verification suite and print a one-line result for each."""

from __future__ import annotations

import argparse
import sys

from distcrit.search import SUITES, default_workers, run_verification_suite

# suites whose natural range differs from the global max order
DEFAULT_RANGES = {"critical-tree": 9, "tree-bound": 9, "multipartite-formula": 8}


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--workers", type=int, default=default_workers())
    p.add_argument("suites", nargs="*", default=sorted(SUITES))
    args = p.parse_args(argv)

    failed = 0
    for name in args.suites:
        max_n = max(args.max_n, DEFAULT_RANGES.get(name, 0))
        r = run_verification_suite(name, max_n, workers=args.workers)
        tag = "conjecture" if r.conjecture else "theorem"
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {name:32s} {tag:10s} n<={max_n:<3d} assertions={r.assertions_run:<6d} "
              f"found={len(r.found):<4d} {r.wall_time:6.1f}s")
        for f in r.failures[:5]:
            print(f"    {f.assertion} {f.graph6} {f.detail}")
        if r.failures and not r.conjecture:
            failed += 1
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
