#!/usr/bin/env python3
"""Exhaustive search for distinguishing-critical graphs, grouped by D.

Prints one line per critical graph and a per-D summary; exits nonzero if any
structural audit fails.
"""

from __future__ import annotations

import argparse
import sys
import time
from collections import defaultdict

from distcrit.graph import is_connected
from distcrit.graph6 import write_graph6
from distcrit.search import default_workers, search_critical


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--workers", type=int, default=default_workers())
    args = p.parse_args(argv)

    start = time.perf_counter()
    by_d = defaultdict(list)
    failures = 0
    for g, report, audit in search_critical(args.max_n, workers=args.workers):
        kind = "connected" if is_connected(g) else "disconnected"
        bad = [i.id for i in audit.theorem_failures] if audit else []
        failures += len(bad)
        by_d[report.d].append(write_graph6(g))
        print(f"{write_graph6(g):12s} n={g.n} D={report.d} {kind}{' AUDIT FAIL ' + ','.join(bad) if bad else ''}")
    print()
    for d in sorted(by_d):
        print(f"D={d}: {len(by_d[d])} critical graphs: {' '.join(by_d[d])}")
    print(f"\n{sum(map(len, by_d.values()))} critical graphs of order <= {args.max_n} "
          f"in {time.perf_counter() - start:.1f}s, {failures} audit failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
