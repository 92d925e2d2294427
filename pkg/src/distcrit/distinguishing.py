"""Distinguishing numbers, distinguishing labelings and the count D(G, k).

Whether a labeling is distinguishing depends only on its colour classes, so
the searches here run over set partitions of V written as restricted-growth
strings: vertex i gets a colour at most one more than the largest colour used
before it.  A branch dies when the partially labelled graph, with every
unlabelled vertex given its own private colour, still has a nontrivial
colour-preserving automorphism; no completion can break that automorphism.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb, perm
from typing import Iterator, Sequence

from .automorphism import automorphism_group, canonical_form, certificate, has_nontrivial_automorphism
from .graph import Graph, NamedGraphSpec, complement, component_masks, induced_subgraph, is_connected

METHODS = ("search", "multipartiteFormula", "disjointCopiesFormula", "asymmetricShortcut")

#: search-tree nodes allowed when counting distinguishing labelings
DEFAULT_COUNT_BUDGET = 2_000_000


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class DistResult:
    value: int
    witness: tuple[int, ...]
    method: str


def _vertex_order(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def _partial_coloring(n: int, colors: dict[int, int]) -> list[tuple[int, int]]:
    return [(0, colors[v]) if v in colors else (1, v) for v in range(n)]


def is_distinguishing(g: Graph, phi: Sequence[int]) -> bool:
    if len(phi) != g.n:
        raise ValueError(f"labeling has length {len(phi)}, graph has {g.n} vertices")
    return not has_nontrivial_automorphism(g, list(phi))


def _distinguishing_partitions(g: Graph, k: int, budget: int | None = None) -> Iterator[dict[int, int]]:
    """Yield distinguishing colourings with at most k classes, one per set partition.

    Colours are numbered 1.. in first-occurrence order along the vertex order.
    """
    order = _vertex_order(g)
    n = g.n
    colors: dict[int, int] = {}
    nodes = 0

    def rec(i: int, used: int) -> Iterator[dict[int, int]]:
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExceeded(f"labeling search exceeded {budget} nodes")
        if i == n:
            yield dict(colors)
            return
        v = order[i]
        for c in range(1, min(used + 1, k) + 1):
            colors[v] = c
            if not has_nontrivial_automorphism(g, _partial_coloring(n, colors)):
                yield from rec(i + 1, max(used, c))
            del colors[v]

    yield from rec(0, 0)


def find_distinguishing_labeling(g: Graph, k: int) -> tuple[int, ...] | None:
    """A distinguishing labeling with at most k colours, or None."""
    for colors in _distinguishing_partitions(g, k):
        return tuple(colors[v] for v in range(g.n))
    return None


def raw_distinguishing_count(g: Graph, k: int, budget: int = DEFAULT_COUNT_BUDGET) -> int:
    """Number of distinguishing maps V -> {1..k}."""
    if k < 1:
        raise ValueError("k must be at least 1")
    total = 0
    for colors in _distinguishing_partitions(g, k, budget):
        total += perm(k, max(colors.values(), default=0))
    return total


def count_inequivalent_distinguishing(g: Graph, k: int, budget: int = DEFAULT_COUNT_BUDGET) -> int:
    """D(G, k): distinguishing k-labelings counted up to Aut(G).

    Aut(G) acts freely on distinguishing labelings, so the orbit count is the
    raw count divided by |Aut(G)|.
    """
    raw = raw_distinguishing_count(g, k, budget)
    order = automorphism_group(g).order
    q, r = divmod(raw, order)
    assert r == 0, f"raw count {raw} not divisible by |Aut| = {order}"
    return q


def inequivalent_distinguishing_labelings(g: Graph, k: int, limit: int | None = None) -> list[tuple[int, ...]]:
    """Pairwise inequivalent distinguishing labelings with colours in 1..k."""
    seen: set[bytes] = set()
    out: list[tuple[int, ...]] = []
    for colors in _distinguishing_partitions(g, k):
        classes = max(colors.values(), default=0)
        base = [colors[v] for v in range(g.n)]
        for chosen in combinations(range(1, k + 1), classes):
            # injective colour maps up to Aut: choose the colour set, then permute
            for assign in permutations(chosen):
                phi = tuple(assign[c - 1] for c in base)
                cert = certificate(g, phi)
                if cert not in seen:
                    seen.add(cert)
                    out.append(phi)
                    if limit is not None and len(out) >= limit:
                        return out
    return out


# ---------------------------------------------------------------- closed forms


def multipartite_parts(g: Graph) -> list[list[int]] | None:
    """Parts of g if it is complete multipartite (non-adjacency is an equivalence), else None."""
    if g.n == 0:
        return None
    comp = complement(g)
    parts = []
    for m in component_masks(comp):
        h = induced_subgraph(comp, m)
        if h.size != h.n * (h.n - 1) // 2:
            return None
        parts.append([v for v in range(g.n) if m >> v & 1])
    return parts


def multipartite_distinguishing_number(spec: NamedGraphSpec | Sequence[int]) -> int:
    """Smallest p with C(p, a) >= (number of parts of size a) for every size a."""
    if isinstance(spec, NamedGraphSpec):
        if spec.family == "completeMultipartite":
            pairs = list(spec.params)
        elif spec.family == "completeBipartite":
            pairs = list(NamedGraphSpec.multipartite(spec.params).params)
        elif spec.family == "complete":
            pairs = [(1, spec.params[0])]
        elif spec.family == "emptyComplement":
            pairs = [(spec.params[0], 1)]
        else:
            raise ValueError(f"{spec.family} is not a complete multipartite family")
    else:
        pairs = list(NamedGraphSpec.multipartite(spec).params)
    p = 1
    while any(comb(p, a) < j for a, j in pairs):
        p += 1
    return p


def _multipartite_witness(parts: list[list[int]], n: int, p: int) -> tuple[int, ...]:
    phi = [0] * n
    by_size: dict[int, list[list[int]]] = {}
    for part in parts:
        by_size.setdefault(len(part), []).append(part)
    for a, group in by_size.items():
        for part, colours in zip(group, combinations(range(1, p + 1), a)):
            for v, c in zip(part, colours):
                phi[v] = c
    return tuple(phi)


def disjoint_copies_distinguishing_number(h: Graph, c: int) -> int:
    """D of c disjoint copies of the connected graph h: least k with D(h, k) >= c."""
    if not is_connected(h):
        raise ValueError("the repeated component must be connected")
    if c < 1:
        raise ValueError("copy count must be at least 1")
    k = distinguishing_number(h).value
    while count_inequivalent_distinguishing(h, k) < c:
        k += 1
    return k


# ---------------------------------------------------------------- D(G)


class DistCache:
    """D(G) results keyed by canonical certificate; lock-guarded inserts."""

    def __init__(self):
        self._data: dict[bytes, DistResult] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key: bytes) -> DistResult | None:
        r = self._data.get(key)
        if r is None:
            self.misses += 1
        else:
            self.hits += 1
        return r

    def put(self, key: bytes, value: DistResult) -> None:
        with self._lock:
            self._data.setdefault(key, value)

    def __len__(self) -> int:
        return len(self._data)

    def clear(self) -> None:
        with self._lock:
            self._data.clear()
        self.hits = self.misses = 0


def distinguishing_number_by_search(g: Graph) -> DistResult:
    """D(G) by labeling search alone, no closed forms."""
    if g.n < 1:
        raise ValueError("distinguishing number needs at least one vertex")
    limit = max(g.degrees()) + 1 if is_connected(g) else g.n
    for k in range(1, g.n + 1):
        phi = find_distinguishing_labeling(g, k)
        if phi is not None:
            assert k <= limit, "labeling search exceeded the max-degree-plus-one bound"
            return DistResult(k, phi, "search")
    raise AssertionError("no distinguishing labeling with n colours")


def _compute(g: Graph, cache: DistCache | None) -> DistResult:
    if not has_nontrivial_automorphism(g):
        return DistResult(1, (1,) * g.n, "asymmetricShortcut")

    masks = component_masks(g)
    if len(masks) > 1:
        classes: dict[bytes, list[int]] = {}
        for m in masks:
            classes.setdefault(certificate(induced_subgraph(g, m)), []).append(m)
        phi = [0] * g.n
        best = 0
        for group in classes.values():
            h = induced_subgraph(g, group[0])
            if len(group) == 1:
                sub = distinguishing_number(h, cache=cache)
                k, labelings = sub.value, [sub.witness]
            else:
                try:
                    k = disjoint_copies_distinguishing_number(h, len(group))
                    labelings = inequivalent_distinguishing_labelings(h, k, limit=len(group))
                except BudgetExceeded:
                    return distinguishing_number_by_search(g)
            best = max(best, k)
            hcf = canonical_form(h)
            for m, lab in zip(group, labelings):
                # map the labeling of h onto this copy through canonical positions
                comp = induced_subgraph(g, m)
                ccf = canonical_form(comp)
                verts = [v for v in range(g.n) if m >> v & 1]
                inv_h = {p: v for v, p in enumerate(hcf.labeling)}
                for i, v in enumerate(verts):
                    phi[v] = lab[inv_h[ccf.labeling[i]]]
        result = DistResult(best, tuple(phi), "disjointCopiesFormula")
        assert is_distinguishing(g, result.witness)
        return result

    parts = multipartite_parts(g)
    if parts is not None and len(parts) > 1:
        p = multipartite_distinguishing_number([len(x) for x in parts])
        result = DistResult(p, _multipartite_witness(parts, g.n, p), "multipartiteFormula")
        assert is_distinguishing(g, result.witness)
        return result

    return distinguishing_number_by_search(g)


def distinguishing_number(g: Graph, cache: DistCache | None = None) -> DistResult:
    if g.n < 1:
        raise ValueError("distinguishing number needs at least one vertex")
    if cache is None:
        return _compute(g, None)
    cf = canonical_form(g)
    hit = cache.get(cf.certificate)
    if hit is None:
        # store the result for the canonical relabelling of g
        res = _compute(g, cache)
        canon_witness = [0] * g.n
        for v, p in enumerate(cf.labeling):
            canon_witness[p] = res.witness[v]
        hit = DistResult(res.value, tuple(canon_witness), res.method)
        cache.put(cf.certificate, hit)
    return DistResult(hit.value, tuple(hit.witness[p] for p in cf.labeling), hit.method)
