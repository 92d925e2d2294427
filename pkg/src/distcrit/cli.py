"""Command-line interface: JSON-lines (or TSV) records on stdout.

Exit status: 0 success, 1 theorem-suite failure, 2 usage error, 3 graph6
decode error.  Set DISTCRIT_WORKERS to run searches on a process pool.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import IO, Iterator, Sequence

from .automorphism import automorphism_group, cycle_notation
from .criticality import CriticalityBudgetExceeded, audit_structural_theorems, is_critical
from .distinguishing import BudgetExceeded, DistCache, count_inequivalent_distinguishing, distinguishing_number
from .enumerate import EnumerationConfig, EnumerationError, enumerate_graphs
from .graph import Graph
from .graph6 import Graph6Error, parse_graph6, stream_graph6, write_graph6
from .search import SUITES, run_verification_suite, search_critical, search_minimal_asymmetric

EXIT_OK, EXIT_SUITE_FAILED, EXIT_USAGE, EXIT_DECODE = 0, 1, 2, 3


class _Writer:
    def __init__(self, out: IO[str], fmt: str):
        self.out = out
        self.fmt = fmt
        self.header: list[str] | None = None

    def emit(self, record: dict) -> None:
        if self.fmt == "json":
            self.out.write(json.dumps(record, separators=(",", ":")) + "\n")
            return
        if self.header is None:
            self.header = list(record)
            self.out.write("\t".join(self.header) + "\n")
        cells = []
        for key in self.header:
            v = record.get(key)
            cells.append(v if isinstance(v, str) else json.dumps(v, separators=(",", ":")))
        self.out.write("\t".join(cells) + "\n")


def _graphs(args, stdin: IO) -> Iterator[Graph]:
    if args.graphs:
        for i, text in enumerate(args.graphs, start=1):
            try:
                yield parse_graph6(text)
            except Graph6Error as exc:
                raise Graph6Error(f"argument {i} ({text!r}): {exc}") from None
    else:
        yield from stream_graph6(stdin)


def _base(g: Graph) -> dict:
    return {"graph6": write_graph6(g), "order": g.n}


def _report_payload(report) -> dict:
    return {
        "D": report.d,
        "critical": report.is_critical,
        "strong_critical": report.is_strong_critical,
        "vacuous": report.vacuous,
        "witness_subset": list(report.witness_subset) if report.witness_subset is not None else None,
        "witness_vertex": report.witness_vertex,
        "subgraphs_evaluated": report.subgraphs_evaluated,
        "cache_hits": report.cache_hits,
    }


def _cmd_dnum(args, w: _Writer, stdin: IO) -> int:
    cache = DistCache()
    for g in _graphs(args, stdin):
        r = distinguishing_number(g, cache=cache)
        w.emit({**_base(g), "D": r.value, "witness": list(r.witness), "method": r.method})
    return EXIT_OK


def _cmd_count(args, w: _Writer, stdin: IO) -> int:
    for g in _graphs(args, stdin):
        w.emit({**_base(g), "k": args.k, "DGk": count_inequivalent_distinguishing(g, args.k)})
    return EXIT_OK


def _cmd_aut(args, w: _Writer, stdin: IO) -> int:
    for g in _graphs(args, stdin):
        a = automorphism_group(g)
        w.emit({
            **_base(g),
            "group_order": a.order,
            "generators": [cycle_notation(p) for p in a.generators],
            "orbits": [list(o) for o in a.orbits],
        })
    return EXIT_OK


def _cmd_critical(args, w: _Writer, stdin: IO) -> int:
    cache = DistCache()
    for g in _graphs(args, stdin):
        report = is_critical(g, cache=cache, budget=args.budget)
        rec = {**_base(g), **_report_payload(report)}
        rec["audit"] = audit_structural_theorems(g, report, cache=cache).as_dict() if report.is_critical else None
        w.emit(rec)
    return EXIT_OK


def _cmd_gen(args, w: _Writer | None, stdin: IO, out: IO) -> int:
    config = EnumerationConfig(
        max_order=args.n, min_order=args.n, connected_only=args.connected, tree_only=args.trees
    )
    for g in enumerate_graphs(config):
        if w is None:
            out.write(write_graph6(g) + "\n")
        else:
            w.emit(_base(g))
    return EXIT_OK


def _cmd_search(args, w: _Writer, stdin: IO) -> int:
    if args.minimal_asymmetric:
        for g in search_minimal_asymmetric(args.max_n, workers=args.workers):
            w.emit({**_base(g), "size": g.size, "minimal_asymmetric": True})
        return EXIT_OK
    source = list(stream_graph6(stdin)) if args.stdin else None
    for g, report, audit in search_critical(
        args.max_n,
        d_filter=args.d,
        disconnected_only=args.disconnected_only,
        strong=args.strong,
        workers=args.workers,
        source=source,
    ):
        rec = {**_base(g), **_report_payload(report)}
        rec["audit"] = audit.as_dict() if audit is not None else None
        w.emit(rec)
    return EXIT_OK


def _cmd_verify(args, w: _Writer, stdin: IO) -> int:
    result = run_verification_suite(args.suite, args.max_n, workers=args.workers)
    w.emit({
        "suite": result.name,
        "max_n": result.max_n,
        "conjecture": result.conjecture,
        "passed": result.passed,
        "assertions": result.assertions_run,
        "failures": [f.__dict__ for f in result.failures],
        "found": result.found,
        "wall_time": round(result.wall_time, 3),
    })
    if result.failures and not result.conjecture:
        return EXIT_SUITE_FAILED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="distcrit", description="Distinguishing numbers and critical graphs.")
    p.add_argument("--format", choices=["json", "tsv"], default=None, help="output format (default json)")
    sub = p.add_subparsers(dest="command", required=True)

    def with_graphs(sp):
        sp.add_argument("graphs", nargs="*", help="graph6 strings (default: read stdin)")
        return sp

    with_graphs(sub.add_parser("dnum", help="distinguishing number and witness labeling"))
    sp = with_graphs(sub.add_parser("count", help="inequivalent distinguishing k-labelings D(G,k)"))
    sp.add_argument("--k", type=int, required=True)
    with_graphs(sub.add_parser("aut", help="automorphism group order, generators, orbits"))
    sp = with_graphs(sub.add_parser("critical", help="criticality report and structural audit"))
    sp.add_argument("--budget", type=int, default=10, help="largest order accepted")

    sp = sub.add_parser("gen", help="all graphs of order N up to isomorphism, as graph6")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--connected", action="store_true")
    sp.add_argument("--trees", action="store_true")

    sp = sub.add_parser("search", help="exhaustive search for critical graphs")
    sp.add_argument("--max-n", type=int, default=8)
    sp.add_argument("--d", type=int, default=None)
    sp.add_argument("--strong", action="store_true")
    sp.add_argument("--minimal-asymmetric", action="store_true")
    sp.add_argument("--disconnected-only", action="store_true")
    sp.add_argument("--stdin", action="store_true", help="search graph6 graphs from stdin instead")
    sp.add_argument("--workers", type=int, default=None)

    sp = sub.add_parser("verify", help="run one verification suite")
    sp.add_argument("--suite", required=True, choices=sorted(SUITES))
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--workers", type=int, default=None)
    return p


def main(argv: Sequence[str] | None = None, stdin: IO | None = None, stdout: IO | None = None,
         stderr: IO | None = None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    fmt = args.format or "json"
    w = _Writer(stdout, fmt)
    try:
        if args.command == "gen":
            return _cmd_gen(args, None if args.format is None else w, stdin, stdout)
        handler = {
            "dnum": _cmd_dnum,
            "count": _cmd_count,
            "aut": _cmd_aut,
            "critical": _cmd_critical,
            "search": _cmd_search,
            "verify": _cmd_verify,
        }[args.command]
        return handler(args, w, stdin)
    except Graph6Error as exc:
        print(f"distcrit: decode error: {exc}", file=stderr)
        return EXIT_DECODE
    except (EnumerationError, CriticalityBudgetExceeded, BudgetExceeded, ValueError) as exc:
        print(f"distcrit: {exc}", file=stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
