"""Exhaustive searches and per-theorem verification suites.

Per-graph work is a pure function of the graph, so it can be farmed out to a
process pool; results come back in input order and hits are sorted by
(order, certificate), so sequential and parallel runs agree exactly.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Iterable, Iterator

from .automorphism import certificate
from .criticality import (
    CriticalityReport,
    StructuralAudit,
    audit_structural_theorems,
    is_critical,
    is_minimal_asymmetric,
    is_strong_critical,
    is_tree,
)
from .distinguishing import (
    DistCache,
    disjoint_copies_distinguishing_number,
    distinguishing_number,
    distinguishing_number_by_search,
    multipartite_distinguishing_number,
    multipartite_parts,
)
from .enumerate import graphs_of_order
from .graph import (
    Graph,
    bfs_distances,
    complement,
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    connected_components,
    cycle_graph,
    disjoint_union,
    empty_graph,
    is_connected,
)
from .graph6 import write_graph6

WORKERS_ENV = "DISTCRIT_WORKERS"

#: default order bounds: criticality searches vs. plain D(G) scans
DEFAULT_CRITICAL_MAX_N = 8
DEFAULT_SCAN_MAX_N = 9

_CACHE = DistCache()


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def _parallel_map(fn: Callable, items: list, workers: int | None, chunk_size: int = 64) -> list:
    workers = default_workers() if workers is None else workers
    if workers <= 1 or len(items) < 2 * chunk_size:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunk_size))


def _sort_key(g: Graph) -> tuple[int, bytes]:
    return (g.n, certificate(g))


def _all_graphs(max_n: int, min_n: int = 1, family: str = "all") -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from graphs_of_order(n, family)


# ---------------------------------------------------------------- searches


def _critical_item(g: Graph, d_filter: int | None, strong: bool):
    d = distinguishing_number(g, cache=_CACHE).value
    if d_filter is not None and d != d_filter:
        return None
    report = is_critical(g, cache=_CACHE)
    if strong:
        if g.n < 2 or not report.is_strong_critical:
            return None
    elif not report.is_critical:
        return None
    audit = audit_structural_theorems(g, report, cache=_CACHE) if report.is_critical else None
    return g, report, audit


def search_critical(
    max_n: int = DEFAULT_CRITICAL_MAX_N,
    d_filter: int | None = None,
    disconnected_only: bool = False,
    strong: bool = False,
    workers: int | None = None,
    source: Iterable[Graph] | None = None,
) -> Iterator[tuple[Graph, CriticalityReport, StructuralAudit | None]]:
    """All critical (or, with ``strong``, strong-critical) graphs of order <= max_n."""
    graphs = list(source) if source is not None else list(_all_graphs(max_n))
    if disconnected_only:
        graphs = [g for g in graphs if not is_connected(g)]
    items = _parallel_map(partial(_critical_item, d_filter=d_filter, strong=strong), graphs, workers)
    hits = [x for x in items if x is not None]
    hits.sort(key=lambda x: _sort_key(x[0]))
    yield from hits


def search_minimal_asymmetric(max_n: int = 8, workers: int | None = None) -> list[Graph]:
    """All minimal asymmetric graphs of order <= max_n, checked closed under complement."""
    graphs = list(_all_graphs(max_n, min_n=2))
    flags = _parallel_map(is_minimal_asymmetric, graphs, workers)
    found = sorted((g for g, f in zip(graphs, flags) if f), key=_sort_key)
    certs = {certificate(g) for g in found}
    for g in found:
        if certificate(complement(g)) not in certs:
            raise AssertionError(f"complement of minimal asymmetric {write_graph6(g)} missing from output")
    return found


# ---------------------------------------------------------------- suites


@dataclass(frozen=True)
class SuiteFailure:
    graph6: str
    assertion: str
    detail: str = ""


@dataclass
class SuiteResult:
    name: str
    max_n: int
    conjecture: bool
    assertions_run: int = 0
    failures: list[SuiteFailure] = field(default_factory=list)
    found: list[str] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def key(self) -> tuple:
        """Everything except timing, for reproducibility comparisons."""
        return (self.name, self.max_n, self.assertions_run, tuple(self.failures), tuple(self.found))


# A check returns ([(assertion id, ok, detail)], hit)
Check = tuple[list[tuple[str, bool, str]], bool]


def _same(g: Graph, h: Graph) -> bool:
    return g.n == h.n and certificate(g) == certificate(h)


def _d(g: Graph) -> int:
    return distinguishing_number(g, cache=_CACHE).value


def _critical_with_d(g: Graph, d: int) -> bool | None:
    """Criticality of g when D(g) == d, else None."""
    if _d(g) != d:
        return None
    return is_critical(g, cache=_CACHE).is_critical


def _is_symmetric_tree(t: Graph) -> bool:
    """Unique centre, leaves equidistant from it, every non-leaf of maximum degree."""
    ecc = [max(bfs_distances(t, v)) for v in range(t.n)]
    centres = [v for v in range(t.n) if ecc[v] == min(ecc)]
    if len(centres) != 1:
        return False
    dist = bfs_distances(t, centres[0])
    degs = t.degrees()
    leaves = [v for v in range(t.n) if degs[v] == 1]
    inner = [v for v in range(t.n) if degs[v] > 1]
    return len({dist[v] for v in leaves}) == 1 and len({degs[v] for v in inner}) <= 1


def _is_odd_path(t: Graph) -> bool:
    return max(t.degrees()) <= 2 and (t.n - 1) % 2 == 1


THREE_CRITICAL = [cycle_graph(3), cycle_graph(4), cycle_graph(5), empty_graph(3), complement(cycle_graph(4))]
DISCONNECTED_56 = [empty_graph(5), complement(complete_bipartite(4, 4)), empty_graph(6), complement(complete_bipartite(5, 5))]


def _check_no_1_critical(g: Graph) -> Check:
    crit = bool(_critical_with_d(g, 1))
    return [("no-1-critical", not crit, "")], crit


def _check_two_critical(g: Graph) -> Check:
    crit = _critical_with_d(g, 2)
    if crit is None:
        return [], False
    expected = g.n == 2
    return [("two-critical", crit == expected, f"critical={crit}")], crit


def _check_delta_plus_one(g: Graph) -> Check:
    d = _d(g)
    big = max(g.degrees())
    parts = multipartite_parts(g)
    cls = (
        g.size == g.n * (g.n - 1) // 2
        or (parts is not None and len(parts) == 2 and len(parts[0]) == len(parts[1]))
        or (g.n == 5 and all(x == 2 for x in g.degrees()))
    )
    return [
        ("bound", d <= big + 1, f"D={d}, max degree {big}"),
        ("equality-classification", (d == big + 1) == cls, f"D={d}, max degree {big}"),
    ], False


def _check_complement_invariance(g: Graph) -> Check:
    a, b = _d(g), _d(complement(g))
    return [("complement-invariance", a == b, f"D={a}, D(complement)={b}")], False


def _check_three_critical(g: Graph) -> Check:
    crit = _critical_with_d(g, 3)
    if crit is None:
        return [], False
    expected = any(_same(g, h) for h in THREE_CRITICAL)
    return [("three-critical", crit == expected, f"critical={crit}")], crit


def _check_three_critical_maxdeg(g: Graph) -> Check:
    crit = _critical_with_d(g, 3)
    if not crit:
        return [], False
    return [("max-degree-at-most-2", max(g.degrees()) <= 2, "")], True


def _check_disconnected_56(g: Graph) -> Check:
    d = _d(g)
    if d not in (5, 6):
        return [], False
    crit = is_critical(g, cache=_CACHE).is_critical
    expected = any(_same(g, h) for h in DISCONNECTED_56)
    return [(f"disconnected-{d}-critical", crit == expected, f"critical={crit}")], crit


def _check_critical_tree(g: Graph) -> Check:
    crit = is_critical(g, cache=_CACHE).is_critical
    return [("critical-tree", crit == (g.n == 2), f"critical={crit}")], crit


def _check_tree_bound(g: Graph) -> Check:
    d = _d(g)
    big = max(g.degrees())
    eq = d == big
    return [
        ("tree-bound", d <= big, f"D={d}, max degree {big}"),
        ("tree-equality", eq == (_is_symmetric_tree(g) or _is_odd_path(g)), f"D={d}, max degree {big}"),
    ], eq


def _check_multipartite(g: Graph) -> Check:
    parts = multipartite_parts(g)
    formula = multipartite_distinguishing_number([len(p) for p in parts])
    searched = distinguishing_number_by_search(g).value
    return [("multipartite-formula", formula == searched, f"formula {formula}, search {searched}")], False


def _check_disjoint_copies(g: Graph) -> Check:
    comps = connected_components(g)
    h = comps[0][1]
    formula = disjoint_copies_distinguishing_number(h, len(comps))
    searched = distinguishing_number_by_search(g).value
    return [("disjoint-copies-formula", formula == searched, f"formula {formula}, search {searched}")], False


def _critical_report(g: Graph) -> tuple[CriticalityReport, StructuralAudit | None]:
    report = is_critical(g, cache=_CACHE)
    audit = audit_structural_theorems(g, report, cache=_CACHE) if report.is_critical else None
    return report, audit


def _check_regularity(g: Graph) -> Check:
    report, audit = _critical_report(g)
    if audit is None:
        return [], False
    ok = audit.verdict("conjecture-regularity") == "pass"
    return [("conjecture-regularity", ok, f"d={report.d}")], True


def _check_complete_components(g: Graph) -> Check:
    report, audit = _critical_report(g)
    if audit is None or is_connected(g):
        return [], audit is not None
    ok = audit.verdict("conjecture-complete-components") == "pass"
    return [("conjecture-complete-components", ok, f"d={report.d}")], True


def _check_structural_audit(g: Graph) -> Check:
    report, audit = _critical_report(g)
    if audit is None:
        return [], False
    return [(f"audit:{i.id}", i.verdict != "fail", i.detail) for i in audit.items if not i.conjecture], True


def _check_minimal_asymmetric(g: Graph) -> Check:
    if not is_minimal_asymmetric(g):
        return [], False
    strong, _ = is_strong_critical(g, cache=_CACHE)
    report = is_critical(g, cache=_CACHE)
    return [
        ("strong-1-critical", strong and report.d == 1, ""),
        ("not-1-critical", not report.is_critical, ""),
    ], True


def _check_strong_critical(g: Graph) -> Check:
    report = is_critical(g, cache=_CACHE)
    if g.n < 2:
        return [], False
    checks = [("critical-implies-strong", (not report.is_critical) or bool(report.is_strong_critical), "")]
    return checks, bool(report.is_strong_critical)


def _multipartite_graphs(max_n: int) -> Iterator[Graph]:
    def partitions(n: int, largest: int) -> Iterator[list[int]]:
        if n == 0:
            yield []
            return
        for a in range(min(n, largest), 0, -1):
            for rest in partitions(n - a, a):
                yield [a] + rest

    for n in range(1, max_n + 1):
        for parts in partitions(n, n):
            yield complete_multipartite(parts)


def _disjoint_copy_graphs(max_n: int) -> Iterator[Graph]:
    for hn in range(1, min(4, max_n) + 1):
        for h in graphs_of_order(hn, "connected"):
            for c in range(1, 5):
                yield disjoint_union(*[h] * c)


@dataclass(frozen=True)
class Suite:
    name: str
    source: Callable[[int], Iterable[Graph]]
    check: Callable[[Graph], Check]
    conjecture: bool = False
    expected: Callable[[int], list[Graph]] | None = None
    description: str = ""


def _expected_three(max_n: int) -> list[Graph]:
    return [h for h in THREE_CRITICAL if h.n <= max_n]


def _expected_two(max_n: int) -> list[Graph]:
    return [h for h in (complete_graph(2), empty_graph(2)) if h.n <= max_n]


def _expected_56(max_n: int) -> list[Graph]:
    return [h for h in DISCONNECTED_56 if h.n <= max_n]


def _expected_tree(max_n: int) -> list[Graph]:
    return [complete_graph(2)] if max_n >= 2 else []


SUITES: dict[str, Suite] = {
    s.name: s
    for s in [
        Suite("no-1-critical", lambda m: _all_graphs(m, 2), _check_no_1_critical,
              description="no graph of order >= 2 is 1-critical"),
        Suite("two-critical", _all_graphs, _check_two_critical, expected=_expected_two,
              description="the 2-critical graphs are K2 and its complement"),
        Suite("delta-plus-one", lambda m: _all_graphs(m, 1, "connected"), _check_delta_plus_one,
              description="D <= max degree + 1 for connected graphs, equality for K_n, K_{n,n}, C5"),
        Suite("complement-invariance", _all_graphs, _check_complement_invariance,
              description="D(G) = D(complement G)"),
        Suite("three-critical", _all_graphs, _check_three_critical, expected=_expected_three,
              description="exactly five 3-critical graphs"),
        Suite("three-critical-maxdeg", _all_graphs, _check_three_critical_maxdeg,
              description="3-critical graphs have max degree <= 2"),
        Suite("five-six-critical-disconnected",
              lambda m: (g for g in _all_graphs(m) if not is_connected(g)),
              _check_disconnected_56, expected=_expected_56,
              description="disconnected 5- and 6-critical graphs"),
        Suite("critical-tree", lambda m: _all_graphs(m, 2, "tree"), _check_critical_tree,
              expected=_expected_tree, description="the only critical tree is K2"),
        Suite("tree-bound", lambda m: _all_graphs(m, 3, "tree"), _check_tree_bound,
              description="D(T) <= max degree for trees of order >= 3"),
        Suite("multipartite-formula", _multipartite_graphs, _check_multipartite,
              description="closed form for complete multipartite graphs vs search"),
        Suite("disjoint-copies-formula", _disjoint_copy_graphs, _check_disjoint_copies,
              description="D(cH) = min{k : D(H,k) >= c} vs search"),
        Suite("structural-audit", _all_graphs, _check_structural_audit,
              description="every critical graph passes all structural audits"),
        Suite("minimal-asymmetric", lambda m: _all_graphs(m, 2), _check_minimal_asymmetric,
              description="minimal asymmetric graphs are strong 1-critical, not 1-critical"),
        Suite("strong-critical", _all_graphs, _check_strong_critical,
              description="critical implies strong critical; lists strong-critical graphs"),
        Suite("conjecture-regularity", _all_graphs, _check_regularity, conjecture=True,
              description="critical graphs are k-regular with k <= d"),
        Suite("conjecture-complete-components", _all_graphs, _check_complete_components, conjecture=True,
              description="components of disconnected critical graphs are complete"),
    ]
}


def run_verification_suite(name: str, max_n: int, workers: int | None = None) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    suite = SUITES[name]
    start = time.perf_counter()
    graphs = list(suite.source(max_n))
    outcomes = _parallel_map(suite.check, graphs, workers)
    result = SuiteResult(name, max_n, suite.conjecture)
    hits = []
    for g, (checks, hit) in zip(graphs, outcomes):
        g6 = write_graph6(g)
        for aid, ok, detail in checks:
            result.assertions_run += 1
            if not ok:
                result.failures.append(SuiteFailure(g6, aid, detail))
        if hit:
            hits.append(g)
    hits.sort(key=_sort_key)
    result.found = [write_graph6(g) for g in hits]
    if suite.expected is not None:
        got = {certificate(g) for g in hits}
        for h in suite.expected(max_n):
            result.assertions_run += 1
            if certificate(h) not in got:
                result.failures.append(SuiteFailure(write_graph6(h), "expected-graph-missing"))
    if name == "minimal-asymmetric":
        certs = {certificate(g) for g in hits}
        for g in hits:
            result.assertions_run += 1
            if certificate(complement(g)) not in certs:
                result.failures.append(SuiteFailure(write_graph6(g), "complement-closure"))
        if max_n >= 8:
            result.assertions_run += 1
            if len(hits) != 18:
                result.failures.append(SuiteFailure("", "count-18", f"found {len(hits)}"))
    result.wall_time = time.perf_counter() - start
    return result

