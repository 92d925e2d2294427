"""Isomorph-free generation of small graphs by canonical augmentation.

A graph of order n is produced from a parent of order n-1 by adding a vertex
joined to a subset S of the parent; one S is tried per Aut(parent)-orbit of
subsets.  The child is kept only if the added vertex lies in the same
automorphism orbit as the child's canonical deletion vertex, so every class
is emitted exactly once without a global seen-set.

Three families are closed under their deletion rule: all graphs (delete any
vertex), connected graphs (delete a non-cut vertex) and trees (delete a leaf).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .automorphism import analyze, automorphism_group
from .graph import Graph, _bits, is_connected
from .graph6 import stream_graph6

FAMILIES = ("all", "connected", "tree")

#: largest order the internal generator will produce
HARD_STOP = 10


class EnumerationError(ValueError):
    pass


@dataclass(frozen=True)
class EnumerationConfig:
    max_order: int
    min_order: int = 1
    connected_only: bool = False
    tree_only: bool = False
    predicate: Callable[[Graph], bool] | None = None
    chunk_size: int = 256
    source: str = "internalGenerator"  # or "graph6Stream"
    stream: Iterable | None = None
    hard_stop: int = HARD_STOP

    def __post_init__(self):
        if self.source not in ("internalGenerator", "graph6Stream"):
            raise EnumerationError(f"unknown source {self.source!r}")
        if self.source == "internalGenerator" and self.max_order > self.hard_stop:
            raise EnumerationError(
                f"order {self.max_order} above internal generator limit {self.hard_stop}; "
                "supply a graph6 stream instead"
            )
        if self.source == "graph6Stream" and self.stream is None:
            raise EnumerationError("graph6Stream source needs a stream")

    @property
    def family(self) -> str:
        if self.tree_only:
            return "tree"
        return "connected" if self.connected_only else "all"

    def accepts(self, g: Graph) -> bool:
        if not self.min_order <= g.n <= self.max_order:
            return False
        if self.tree_only and not (is_connected(g) and g.size == g.n - 1):
            return False
        if self.connected_only and not is_connected(g):
            return False
        return self.predicate is None or self.predicate(g)


def _noncut_vertices(g: Graph) -> int:
    full = g.vertex_mask
    out = 0
    for v in range(g.n):
        rest = full & ~(1 << v)
        if not rest:
            out |= 1 << v
            continue
        start = rest & -rest
        comp = frontier = start
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.rows[u]
            frontier = nxt & rest & ~comp
            comp |= frontier
        if comp == rest:
            out |= 1 << v
    return out


def _deletable(g: Graph, family: str) -> int:
    if family == "all":
        return g.vertex_mask
    if family == "connected":
        return _noncut_vertices(g)
    if g.n <= 2:
        return g.vertex_mask
    return sum(1 << v for v in range(g.n) if g.degree(v) == 1)


def _subset_orbit_reps(parent: Graph, family: str) -> list[int]:
    n = parent.n
    if family == "tree":
        cands = [1 << v for v in range(n)]
    else:
        cands = list(range(0 if family == "all" else 1, 1 << n))
    gens = automorphism_group(parent).generators
    if not gens:
        return cands
    images = []
    for gen in gens:
        images.append([1 << gen[v] for v in range(n)])
    reps = []
    seen: set[int] = set()
    for s in cands:
        if s in seen:
            continue
        reps.append(s)
        # orbit closure of s under the generators
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            for img in images:
                y = 0
                for v in _bits(x):
                    y |= img[v]
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return reps


def _invariant(g: Graph, v: int, degs: list[int]) -> tuple:
    return (degs[v], tuple(sorted(degs[u] for u in _bits(g.rows[v]))))


def _accept(child: Graph, family: str) -> bool:
    new = child.n - 1
    deletable = _deletable(child, family)
    if not deletable >> new & 1:
        return False
    degs = child.degrees()
    keys = {v: _invariant(child, v, degs) for v in _bits(deletable)}
    top = max(keys.values())
    if keys[new] != top:
        return False
    cands = [v for v, k in keys.items() if k == top]
    if len(cands) == 1:
        return True
    group, cf = analyze(child)
    chosen = max(cands, key=lambda v: cf.labeling[v])
    for orbit in group.orbits:
        if chosen in orbit:
            return new in orbit
    raise AssertionError("vertex missing from orbit partition")


def _children(parent: Graph, family: str) -> Iterator[Graph]:
    n = parent.n
    for s in _subset_orbit_reps(parent, family):
        rows = list(parent.rows)
        for v in _bits(s):
            rows[v] |= 1 << n
        rows.append(s)
        child = Graph(n + 1, tuple(rows))
        if _accept(child, family):
            yield child


def graphs_of_order(n: int, family: str = "all") -> Iterator[Graph]:
    """One representative per isomorphism class of order n within the family."""
    if family not in FAMILIES:
        raise EnumerationError(f"unknown family {family!r}")
    if n < 1:
        return
    level = [Graph(1, (0,))]
    for _ in range(1, n):
        level = [c for p in level for c in _children(p, family)]
    yield from level


def enumerate_graphs(config: EnumerationConfig) -> Iterator[Graph]:
    """Stream graphs of orders min_order..max_order, ascending, filtered by config."""
    if config.source == "graph6Stream":
        for g in stream_graph6(config.stream):
            if config.accepts(g):
                yield g
        return
    level: list[Graph] = []
    for n in range(1, config.max_order + 1):
        level = [Graph(1, (0,))] if n == 1 else [c for p in level for c in _children(p, config.family)]
        if n >= config.min_order:
            for g in level:
                if config.predicate is None or config.predicate(g):
                    yield g
