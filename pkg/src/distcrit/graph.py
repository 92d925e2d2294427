"""Immutable simple graphs on at most 64 vertices, stored as bitset rows."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

MAX_ORDER = 64

#: eccentricity / diameter of a disconnected graph
INFINITE = math.inf


class GraphError(ValueError):
    pass


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``rows[v]`` is the neighbourhood bitmask of v."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} exceeds capacity {MAX_ORDER}")
        if len(self.rows) != self.n:
            raise GraphError("row count does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {v} has bits beyond order {self.n}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in _bits(row):
                if not self.rows[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u] >> (u + 1) << (u + 1))]

    @property
    def size(self) -> int:
        return sum(self.degrees()) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n > MAX_ORDER or n < 0:
        raise GraphError(f"order {n} exceeds capacity {MAX_ORDER}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"endpoint out of range in edge ({u}, {v}) for order {n}")
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows)))


def induced_subgraph(g: Graph, s: Iterable[int] | int) -> Graph:
    """Subgraph induced on ``s`` (iterable or bitmask), relabelled in ascending order."""
    if isinstance(s, int):
        verts = list(_bits(s))
    else:
        verts = sorted(set(s))
    if not verts:
        raise GraphError("induced subgraph on the empty vertex set")
    if verts[-1] >= g.n or verts[0] < 0:
        raise GraphError("subset contains vertices outside the graph")
    rows = []
    for v in verts:
        row = g.rows[v]
        new = 0
        for i, u in enumerate(verts):
            if row >> u & 1:
                new |= 1 << i
        rows.append(new)
    return Graph(len(verts), tuple(rows))


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for h in graphs:
        rows.extend(r << offset for r in h.rows)
        offset += h.n
    return Graph(offset, tuple(rows))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex v renamed perm[v]."""
    rows = [0] * g.n
    for v in range(g.n):
        new = 0
        for u in _bits(g.rows[v]):
            new |= 1 << perm[u]
        rows[perm[v]] = new
    return Graph(g.n, tuple(rows))


# ---------------------------------------------------------------- named graphs

FAMILIES = (
    "complete",
    "emptyComplement",
    "path",
    "cycle",
    "star",
    "completeBipartite",
    "completeMultipartite",
    "disjointCopies",
)


@dataclass(frozen=True)
class NamedGraphSpec:
    """A named family plus its parameters.

    ``params`` is ``(n,)`` for complete/emptyComplement/path/cycle/star (star
    has n leaves), ``(m, n)`` for completeBipartite, and a tuple of
    ``(part_size, multiplicity)`` pairs with strictly decreasing sizes for
    completeMultipartite.  disjointCopies uses ``params=(c,)`` and ``inner``.
    """

    family: str
    params: tuple = ()
    inner: NamedGraphSpec | None = field(default=None)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise GraphError(f"unknown graph family {self.family!r}")
        if self.family == "completeMultipartite":
            sizes = [a for a, _ in self.params]
            if any(a < 1 or j < 1 for a, j in self.params) or not sizes:
                raise GraphError("multipartite part sizes and multiplicities must be >= 1")
            if any(x <= y for x, y in zip(sizes, sizes[1:])):
                raise GraphError("multipartite part sizes must be strictly decreasing")
        else:
            if not self.params or any(int(p) < 1 for p in self.params):
                raise GraphError(f"{self.family} needs positive integer parameters")
        if self.family == "disjointCopies" and self.inner is None:
            raise GraphError("disjointCopies needs an inner spec")
        if self.family == "cycle" and self.params[0] < 3:
            raise GraphError("cycle needs at least 3 vertices")

    @classmethod
    def multipartite(cls, part_sizes: Iterable[int]) -> NamedGraphSpec:
        """Spec from an unordered list of part sizes, e.g. [2, 2, 2]."""
        counts: dict[int, int] = {}
        for a in part_sizes:
            counts[a] = counts.get(a, 0) + 1
        return cls("completeMultipartite", tuple(sorted(counts.items(), reverse=True)))

    def part_sizes(self) -> list[int]:
        return [a for a, j in self.params for _ in range(j)]


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves}; the centre is vertex 0."""
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_multipartite(part_sizes: Sequence[int]) -> Graph:
    """Parts are contiguous in the given order."""
    part_of: list[int] = []
    for i, a in enumerate(part_sizes):
        part_of.extend([i] * a)
    n = len(part_of)
    return build_graph(n, [(u, v) for u, v in combinations(range(n), 2) if part_of[u] != part_of[v]])


def complete_bipartite(m: int, n: int) -> Graph:
    return complete_multipartite([m, n])


def make_named(spec: NamedGraphSpec) -> Graph:
    fam, p = spec.family, spec.params
    if fam == "complete":
        return complete_graph(p[0])
    if fam == "emptyComplement":
        return empty_graph(p[0])
    if fam == "path":
        return path_graph(p[0])
    if fam == "cycle":
        return cycle_graph(p[0])
    if fam == "star":
        return star_graph(p[0])
    if fam == "completeBipartite":
        return complete_bipartite(*p)
    if fam == "completeMultipartite":
        return complete_multipartite(spec.part_sizes())
    inner = make_named(spec.inner)
    return disjoint_union(*[inner] * p[0])


# ---------------------------------------------------------------- metrics


def bfs_distances(g: Graph, source: int) -> list[float]:
    dist: list[float] = [INFINITE] * g.n
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.rows[v]
        nxt &= ~seen
        seen |= nxt
        for v in _bits(nxt):
            dist[v] = d
        frontier = nxt
    return dist


def eccentricities(g: Graph) -> list[float]:
    return [max(bfs_distances(g, v)) for v in range(g.n)]


def component_masks(g: Graph) -> list[int]:
    """Components as bitmasks, ordered by their minimum vertex."""
    remaining = g.vertex_mask
    comps = []
    while remaining:
        start = remaining & -remaining
        comp = frontier = start
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.rows[v]
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def connected_components(g: Graph) -> list[tuple[list[int], Graph]]:
    return [(list(_bits(m)), induced_subgraph(g, m)) for m in component_masks(g)]


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(component_masks(g)) == 1


def _max_clique(rows: Sequence[int], candidates: int) -> int:
    """Exact clique number of the subgraph on ``candidates``; greedy colouring bound."""
    best = 0

    def colour_bound(cand: int) -> list[tuple[int, int]]:
        # greedy sequential colouring; returns (vertex, colour) in colour order
        order = []
        colour = 0
        uncol = cand
        while uncol:
            colour += 1
            avail = uncol
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~rows[v] & ~(1 << v)
                uncol &= ~(1 << v)
                order.append((v, colour))
        return order

    def expand(size: int, cand: int) -> None:
        nonlocal best
        order = colour_bound(cand)
        for v, c in reversed(order):
            if size + c <= best:
                return
            expand_to = cand & rows[v]
            if expand_to:
                expand(size + 1, expand_to)
            elif size + 1 > best:
                best = size + 1
            cand &= ~(1 << v)

    if candidates:
        expand(0, candidates)
    return best


def clique_number(g: Graph) -> int:
    return _max_clique(g.rows, g.vertex_mask)


def independence_number(g: Graph) -> int:
    return clique_number(complement(g))


def is_triangle_free(g: Graph) -> bool:
    return all(not (g.rows[u] & g.rows[v]) for u, v in g.edges())


def has_induced_star(g: Graph, leaves: int) -> bool:
    """True iff some vertex has ``leaves`` pairwise non-adjacent neighbours."""
    comp_rows = complement(g).rows
    return any(_max_clique(comp_rows, g.rows[v]) >= leaves for v in range(g.n))


def is_claw_free(g: Graph) -> bool:
    return not has_induced_star(g, 3)


@dataclass(frozen=True)
class GraphMetrics:
    degree_sequence: tuple[int, ...]
    degrees: tuple[int, ...]
    min_degree: int
    max_degree: int
    is_regular: bool
    regular_degree: int | None
    component_count: int
    eccentricities: tuple[float, ...]
    diameter: float
    radius: float
    clique_number: int
    independence_number: int
    triangle_free: bool
    claw_free: bool


def metrics(g: Graph) -> GraphMetrics:
    degs = g.degrees()
    ecc = eccentricities(g)
    lo = min(degs, default=0)
    hi = max(degs, default=0)
    return GraphMetrics(
        degree_sequence=tuple(sorted(degs, reverse=True)),
        degrees=tuple(degs),
        min_degree=lo,
        max_degree=hi,
        is_regular=lo == hi,
        regular_degree=hi if lo == hi else None,
        component_count=len(component_masks(g)),
        eccentricities=tuple(ecc),
        diameter=max(ecc, default=0),
        radius=min(ecc, default=0),
        clique_number=clique_number(g),
        independence_number=independence_number(g),
        triangle_free=is_triangle_free(g),
        claw_free=is_claw_free(g),
    )


def classify_a_vertices(g: Graph) -> list[str]:
    """Tag each vertex 'a1' or 'a2'.

    v is an a1-vertex when it is dominating or has a neighbour u with
    N(u) | N(v) covering every vertex.
    """
    full = g.vertex_mask
    tags = []
    for v in range(g.n):
        a1 = g.degree(v) == g.n - 1 or any(
            (g.rows[u] | g.rows[v]) == full for u in _bits(g.rows[v])
        )
        tags.append("a1" if a1 else "a2")
    return tags


def is_k_self_centered(g: Graph, k: int) -> bool:
    if not is_connected(g):
        raise GraphError("self-centredness is defined for connected graphs only")
    return all(e == k for e in eccentricities(g))
