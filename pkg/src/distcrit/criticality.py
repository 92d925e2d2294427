"""Distinguishing criticality, strong criticality, minimal asymmetry and audits."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .automorphism import certificate, has_nontrivial_automorphism
from .distinguishing import (
    BudgetExceeded,
    DistCache,
    _distinguishing_partitions,
    count_inequivalent_distinguishing,
    distinguishing_number,
    multipartite_parts,
)
from .graph import (
    Graph,
    classify_a_vertices,
    clique_number,
    complement,
    complete_bipartite,
    component_masks,
    connected_components,
    cycle_graph,
    empty_graph,
    eccentricities,
    has_induced_star,
    independence_number,
    induced_subgraph,
    is_claw_free,
    is_connected,
    is_triangle_free,
)

#: largest order is_critical accepts by default
DEFAULT_CRITICALITY_BUDGET = 10


class CriticalityBudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class CriticalityReport:
    order: int
    d: int
    is_critical: bool
    is_strong_critical: bool | None  # None for K1, where deletion is undefined
    witness_subset: tuple[int, ...] | None
    witness_vertex: int | None
    subgraphs_evaluated: int
    cache_hits: int
    vacuous: bool = False


def _d(g: Graph, cache: DistCache | None) -> int:
    return distinguishing_number(g, cache=cache).value


def is_critical(g: Graph, cache: DistCache | None = None, budget: int = DEFAULT_CRITICALITY_BUDGET) -> CriticalityReport:
    """Decide d-distinguishing criticality of g with d = D(g).

    Every nonempty proper vertex subset is a candidate, singletons included.
    Subsets are visited by descending size, then lexicographically, and the
    first one whose induced subgraph has distinguishing number d is returned
    as a witness.
    """
    n = g.n
    if n < 1:
        raise ValueError("criticality needs at least one vertex")
    if n > budget:
        raise CriticalityBudgetExceeded(f"order {n} above criticality budget {budget}")
    if cache is None:
        cache = DistCache()
    hits0 = cache.hits
    d = _d(g, cache)
    evaluated = 0
    witness = None
    for size in range(n - 1, 0, -1):
        for s in combinations(range(n), size):
            evaluated += 1
            if _d(induced_subgraph(g, s), cache) == d:
                witness = s
                break
        if witness is not None:
            break
    if n == 1:
        strong = None
        witness_vertex = None
    elif witness is not None and len(witness) == n - 1:
        strong = False
        witness_vertex = next(v for v in range(n) if v not in witness)
    else:
        # all (n-1)-subsets were checked before any smaller one
        strong = True
        witness_vertex = None
    return CriticalityReport(
        order=n,
        d=d,
        is_critical=witness is None,
        is_strong_critical=strong,
        witness_subset=witness,
        witness_vertex=witness_vertex,
        subgraphs_evaluated=evaluated,
        cache_hits=cache.hits - hits0,
        vacuous=n == 1,
    )


def is_strong_critical(g: Graph, cache: DistCache | None = None) -> tuple[bool, int | None]:
    """(verdict, deleted vertex witnessing failure or None)."""
    if g.n < 2:
        raise ValueError("strong criticality is not defined for graphs of order 1")
    d = _d(g, cache)
    for v in range(g.n):
        if _d(induced_subgraph(g, [u for u in range(g.n) if u != v]), cache) == d:
            return False, v
    return True, None


_contains_asym: dict[bytes, bool] = {}


def _has_asymmetric_induced(g: Graph) -> bool:
    """True if some induced subgraph on >= 2 vertices (g itself included) is asymmetric."""
    if g.n < 2:
        return False
    key = certificate(g)
    hit = _contains_asym.get(key)
    if hit is None:
        hit = not has_nontrivial_automorphism(g) or (
            g.n > 2
            and any(
                _has_asymmetric_induced(induced_subgraph(g, [u for u in range(g.n) if u != v]))
                for v in range(g.n)
            )
        )
        _contains_asym[key] = hit
    return hit


def is_minimal_asymmetric(g: Graph) -> bool:
    if g.n < 2:
        raise ValueError("minimal asymmetry is defined for order at least 2")
    if has_nontrivial_automorphism(g):
        return False
    return not any(
        _has_asymmetric_induced(induced_subgraph(g, [u for u in range(g.n) if u != v])) for v in range(g.n)
    )


# ---------------------------------------------------------------- audits

PASS, FAIL, NA = "pass", "fail", "n/a"


@dataclass(frozen=True)
class AuditItem:
    id: str
    verdict: str
    conjecture: bool = False
    detail: str = ""


@dataclass
class StructuralAudit:
    items: list[AuditItem] = field(default_factory=list)

    def add(self, id: str, applicable: bool, ok: bool | None = None, detail: str = "", conjecture: bool = False):
        verdict = NA if not applicable else (PASS if ok else FAIL)
        self.items.append(AuditItem(id, verdict, conjecture, detail))

    def verdict(self, id: str) -> str:
        return next(i.verdict for i in self.items if i.id == id)

    @property
    def theorem_failures(self) -> list[AuditItem]:
        return [i for i in self.items if i.verdict == FAIL and not i.conjecture]

    @property
    def conjecture_failures(self) -> list[AuditItem]:
        return [i for i in self.items if i.verdict == FAIL and i.conjecture]

    def as_dict(self) -> dict[str, str]:
        return {i.id: i.verdict for i in self.items}


def _is_complete(g: Graph) -> bool:
    return g.size == g.n * (g.n - 1) // 2


def _is_edgeless(g: Graph) -> bool:
    return g.size == 0


def _is_balanced_bipartite(g: Graph, m: int) -> bool:
    parts = multipartite_parts(g)
    return parts is not None and len(parts) == 2 and all(len(p) == m for p in parts)


def _is_c5(g: Graph) -> bool:
    return g.n == 5 and is_connected(g) and all(x == 2 for x in g.degrees())


def _is_prime(x: int) -> bool:
    return x >= 2 and all(x % p for p in range(2, int(x**0.5) + 1))


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.size == g.n - 1


def _same_graph(g: Graph, h: Graph) -> bool:
    return g.n == h.n and certificate(g) == certificate(h)


def _color_class_degree_sequences_equal(h: Graph, k: int, budget: int) -> bool:
    degs = h.degrees()
    for colors in _distinguishing_partitions(h, k, budget):
        if max(colors.values()) != k:
            continue
        seqs = set()
        for c in range(1, k + 1):
            seqs.add(tuple(sorted(degs[v] for v in colors if colors[v] == c)))
        if len(seqs) > 1:
            return False
    return True


def audit_structural_theorems(
    g: Graph,
    report: CriticalityReport,
    cache: DistCache | None = None,
    labeling_budget: int = 200_000,
) -> StructuralAudit:
    """Evaluate every structural property a critical graph must have."""
    if not report.is_critical:
        raise ValueError("audit requires a critical graph")
    if cache is None:
        cache = DistCache()
    a = StructuralAudit()
    n, d = g.n, report.d
    degs = g.degrees()
    delta, Delta = min(degs), max(degs)
    gc = complement(g)
    connected = is_connected(g)
    co_connected = is_connected(gc)
    complete = _is_complete(g)
    edgeless = _is_edgeless(g)
    c5 = _is_c5(g)
    kdd = _is_balanced_bipartite(g, d - 1)
    omega = clique_number(g)
    alpha = independence_number(g)
    named = (complete and n == d) or kdd or c5

    a.add("no-1-critical", d == 1, n == 1, f"order {n}")
    a.add("two-critical", d == 2, n == 2, f"order {n}")
    if connected:
        equal = d == Delta + 1
        cls = complete or _is_balanced_bipartite(g, n // 2) or c5
        a.add("delta-plus-one", True, d <= Delta + 1 and equal == cls, f"D={d}, max degree {Delta}")
    else:
        a.add("delta-plus-one", False)
    a.add("max-degree-equality", d >= 3 and connected and Delta == d - 1, named)
    a.add("max-degree-lower", d >= 3 and connected and not named, Delta >= d, f"max degree {Delta}")
    a.add("min-degree", d >= 3 and connected and co_connected and not c5, delta <= n - d - 1, f"min degree {delta}")
    a.add("star-free", d >= 3, not has_induced_star(g, d))
    a.add("clique-bound", d >= 3 and not (complete and n == d), omega <= d - 1, f"clique number {omega}")
    a.add("independence-bound", d >= 3 and not (edgeless and n == d), alpha <= d - 1, f"independence number {alpha}")
    a.add(
        "triangle-free",
        d >= 2 and connected and is_triangle_free(g),
        (n == 2 and complete) or kdd or c5,
    )
    a.add("claw-free", d >= 2 and connected and co_connected and is_claw_free(g), c5)
    a.add("three-critical-max-degree", d == 3, Delta <= 2, f"max degree {Delta}")
    three = [cycle_graph(3), cycle_graph(4), cycle_graph(5), complement(cycle_graph(3)), complement(cycle_graph(4))]
    a.add("three-critical-list", d == 3, any(_same_graph(g, h) for h in three))

    co_report = is_critical(gc, cache=cache, budget=max(n, DEFAULT_CRITICALITY_BUDGET))
    a.add("complement-critical", True, co_report.is_critical and co_report.d == d)

    if is_tree(g) and n >= 3:
        a.add("critical-tree", True, False, "critical tree of order >= 3")
    else:
        a.add("critical-tree", is_tree(g), n <= 2)

    # disconnected structure
    disconnected = not connected and n > 1
    no_isolates = delta > 0
    if disconnected and no_isolates:
        tags = classify_a_vertices(g)
        a.add("all-a2-vertices", True, all(t == "a2" for t in tags))
        ok = co_connected and all(e == 2 for e in eccentricities(gc))
        a.add("complement-2-self-centered", True, ok)
    else:
        a.add("all-a2-vertices", False)
        a.add("complement-2-self-centered", False)

    comps = connected_components(g)
    c = len(comps)
    iso = disconnected and len({certificate(h) for _, h in comps}) == 1
    a.add("components-isomorphic", disconnected and d >= 3, iso, f"{c} components")
    uniform = disconnected and d >= 3 and iso
    h = comps[0][1]
    hn = h.n
    dh = _d(h, cache) if uniform else 0

    def dhk(k: int) -> int:
        return count_inequivalent_distinguishing(h, k)

    if uniform:
        multiples_ok = all(
            _d(induced_subgraph(g, sum(component_masks(g)[:m])), cache) < d for m in range(1, c)
        )
        a.add("proper-multiples", True, multiples_ok)
        a.add("component-count", True, c == dhk(d - 1) + 1 and dhk(d) >= c, f"c={c}")
        a.add("component-count-strict", True, c > dhk(dh), f"c={c}, D(H)={dh}")
    else:
        for id in ("proper-multiples", "component-count", "component-count-strict"):
            a.add(id, False)

    def complete_copies_ok() -> bool:
        if not _is_complete(h):
            return False
        s = hn
        return c == comb(d - 1, s) + 1 and comb(d, s) >= c

    a.add("many-components", uniform and 2 * c >= d, complete_copies_ok() if uniform else None)
    a.add(
        "independence-prime",
        uniform and (alpha == c or _is_prime(alpha)),
        complete_copies_ok() if uniform else None,
        f"independence number {alpha}",
    )

    few = uniform and d >= 5 and 2 * c < d
    if few:
        dhh = dhk(dh)
        a.add("few-components", True, d == dh + 1 and dh >= 4 and 2 * dhh < dh - 1)
        a.add("few-components-complete", _is_complete(h), hn == d - 1 and c == 2)
        a.add("divisibility", True, hn % dh == 0, f"D(H)={dh}, |V(H)|={hn}")
        excluded = _is_balanced_bipartite(gc, d - 1) or (_is_complete(gc) and n == d)
        a.add(
            "few-components-bound",
            not excluded,
            3 * c <= d - 1 and 3 * dhh <= dh - 3 and d >= 7 and dh >= 6,
        )
        if not _is_complete(h):
            try:
                ok = _color_class_degree_sequences_equal(h, dh, labeling_budget)
            except BudgetExceeded as exc:
                raise BudgetExceeded(f"color-class audit: {exc}") from None
            a.add("color-class-degrees", True, ok)
            counts: dict[int, int] = {}
            for x in degs:
                counts[x] = counts.get(x, 0) + 1
            a.add("degree-multiplicity", True, min(counts.values()) >= 2 * c * (d - 1))
        else:
            a.add("color-class-degrees", False)
            a.add("degree-multiplicity", False)
    else:
        for id in (
            "few-components",
            "few-components-complete",
            "divisibility",
            "few-components-bound",
            "color-class-degrees",
            "degree-multiplicity",
        ):
            a.add(id, False)

    if d == 5 and disconnected:
        ok = _same_graph(g, empty_graph(5)) or _same_graph(g, complement(complete_bipartite(4, 4)))
        a.add("five-critical-disconnected", True, ok)
    else:
        a.add("five-critical-disconnected", False)
    if d == 6 and disconnected:
        ok = _same_graph(g, empty_graph(6)) or _same_graph(g, complement(complete_bipartite(5, 5)))
        a.add("six-critical-disconnected", True, ok)
    else:
        a.add("six-critical-disconnected", False)

    a.add("conjecture-regularity", True, delta == Delta and Delta <= d, f"degrees {delta}..{Delta}", conjecture=True)
    a.add(
        "conjecture-complete-components",
        disconnected,
        all(_is_complete(x) for _, x in comps),
        conjecture=True,
    )
    return a
