#!/usr/bin/env python3
"""List the minimal asymmetric graphs up to a given order, with complement pairs."""

from __future__ import annotations

import argparse
import sys

from distcrit.automorphism import certificate
from distcrit.graph import complement
from distcrit.graph6 import write_graph6
from distcrit.search import default_workers, search_minimal_asymmetric


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--workers", type=int, default=default_workers())
    args = p.parse_args(argv)

    found = search_minimal_asymmetric(args.max_n, workers=args.workers)
    index = {certificate(g): write_graph6(g) for g in found}
    for g in found:
        partner = index[certificate(complement(g))]
        self_comp = " (self-complementary)" if partner == write_graph6(g) else ""
        print(f"{write_graph6(g):10s} n={g.n} m={g.size} complement={partner}{self_comp}")
    counts = {n: sum(1 for g in found if g.n == n) for n in range(1, args.max_n + 1)}
    print(f"\ntotal {len(found)}; by order {dict((n, c) for n, c in counts.items() if c)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
