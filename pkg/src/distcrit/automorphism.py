"""Automorphism groups and canonical forms by individualization-refinement.

One backtracking search serves both purposes.  Leaves of the search tree are
discrete ordered partitions; the canonical labelling is the leaf whose
relabelled adjacency rows are lexicographically largest, and two leaves with
equal rows differ by an automorphism.  Children of a node are skipped when
they lie in the same orbit as an explored sibling under the automorphisms
found so far that fix the node's individualized prefix.

The group order is exact: along the first path v_1, v_2, ... the search
explores every non-pruned child, so the orbit of v_i under the pointwise
stabilizer of v_1..v_{i-1} is known when that node finishes, and the order is
the product of those orbit sizes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, relabel
from .graph6 import write_graph6

Permutation = tuple[int, ...]


@dataclass(frozen=True)
class AutGroup:
    generators: tuple[Permutation, ...]
    order: int
    orbits: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return sum(len(o) for o in self.orbits)

    def is_trivial(self) -> bool:
        return self.order == 1

    def elements(self, limit: int | None = None) -> list[Permutation]:
        """All group elements by closure under the generators."""
        if limit is not None and self.order > limit:
            raise ValueError(f"group of order {self.order} exceeds element limit {limit}")
        identity = tuple(range(self.n))
        seen = {identity}
        queue = deque([identity])
        while queue:
            p = queue.popleft()
            for gen in self.generators:
                q = tuple(gen[x] for x in p)
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        assert len(seen) == self.order, "closure disagrees with search order"
        return sorted(seen)


@dataclass(frozen=True)
class CanonicalForm:
    certificate: bytes
    labeling: Permutation  # vertex v goes to position labeling[v]


def is_automorphism(g: Graph, perm: Sequence[int], coloring: Sequence | None = None) -> bool:
    if sorted(perm) != list(range(g.n)):
        return False
    if coloring is not None and any(coloring[perm[v]] != coloring[v] for v in range(g.n)):
        return False
    for v in range(g.n):
        image = 0
        row = g.rows[v]
        while row:
            low = row & -row
            image |= 1 << perm[low.bit_length() - 1]
            row ^= low
        if image != g.rows[perm[v]]:
            return False
    return True


def cycle_notation(perm: Sequence[int]) -> str:
    seen = set()
    out = []
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = perm[i]
        while j != i:
            seen.add(j)
            cyc.append(j)
            j = perm[j]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


# ---------------------------------------------------------------- refinement


def _initial_cells(n: int, coloring: Sequence | None) -> list[list[int]]:
    if coloring is None:
        return [list(range(n))] if n else []
    if len(coloring) != n:
        raise ValueError(f"coloring has length {len(coloring)}, graph has {n} vertices")
    classes: dict = {}
    for v, c in enumerate(coloring):
        classes.setdefault(c, []).append(v)
    return [classes[c] for c in sorted(classes)]


def _refine(rows: Sequence[int], cells: list[list[int]], splitters: list[int]) -> list[list[int]]:
    queue = deque(splitters)
    while queue:
        w = queue.popleft()
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault((rows[v] & w).bit_count(), []).append(v)
            if len(groups) == 1:
                out.append(cell)
                continue
            for k in sorted(groups):
                part = groups[k]
                out.append(part)
                mask = 0
                for v in part:
                    mask |= 1 << v
                queue.append(mask)
        cells = out
    return cells


def _mask(cell: Sequence[int]) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def equitable_refinement(g: Graph, coloring: Sequence | None = None) -> list[list[int]]:
    """Coarsest equitable ordered partition refining the colour classes."""
    cells = _initial_cells(g.n, coloring)
    return [sorted(c) for c in _refine(g.rows, cells, [_mask(c) for c in cells])]


# ---------------------------------------------------------------- search


class _FoundAutomorphism(Exception):
    pass


def _orbit_reps(n: int, gens: Sequence[Permutation]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in gens:
        for x in range(n):
            a, b = find(x), find(gen[x])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(x) for x in range(n)]


class _Search:
    def __init__(self, g: Graph, coloring: Sequence | None, stop_on_automorphism: bool = False):
        self.n = g.n
        self.rows = g.rows
        self.coloring = coloring
        self.stop = stop_on_automorphism
        self.gens: list[Permutation] = []
        self.first: tuple[list[int], tuple[int, ...]] | None = None
        self.best: tuple[list[int], tuple[int, ...]] | None = None
        self.order = 1
        self.nodes = 0

    def run(self) -> None:
        cells = _initial_cells(self.n, self.coloring)
        cells = _refine(self.rows, cells, [_mask(c) for c in cells])
        if self.n:
            self._dfs(cells, (), True)

    def _leaf_cert(self, lab: list[int]) -> tuple[int, ...]:
        pos = [0] * self.n
        for i, v in enumerate(lab):
            pos[v] = i
        cert = []
        for v in lab:
            row = self.rows[v]
            r = 0
            while row:
                low = row & -row
                r |= 1 << pos[low.bit_length() - 1]
                row ^= low
            cert.append(r)
        return tuple(cert)

    def _add_generator(self, src: list[int], dst: list[int]) -> None:
        perm = [0] * self.n
        for a, b in zip(src, dst):
            perm[a] = b
        p = tuple(perm)
        if any(i != x for i, x in enumerate(p)):
            self.gens.append(p)
            if self.stop:
                raise _FoundAutomorphism

    def _dfs(self, cells: list[list[int]], prefix: tuple[int, ...], first_path: bool) -> bool:
        self.nodes += 1
        target = None
        for cell in cells:
            if len(cell) > 1 and (target is None or len(cell) < len(target)):
                target = cell
                if len(cell) == 2:
                    break
        if target is None:
            lab = [c[0] for c in cells]
            cert = self._leaf_cert(lab)
            if self.first is None:
                self.first = self.best = (lab, cert)
                return False
            if cert == self.first[1]:
                self._add_generator(self.first[0], lab)
                return True
            if cert == self.best[1]:
                self._add_generator(self.best[0], lab)
            elif cert > self.best[1]:
                self.best = (lab, cert)
            return False

        explored: list[int] = []
        ngens = -1
        reps: list[int] = []
        first_child = None
        for v in sorted(target):
            if len(self.gens) != ngens:
                ngens = len(self.gens)
                fixing = [p for p in self.gens if all(p[x] == x for x in prefix)]
                reps = _orbit_reps(self.n, fixing)
            if any(reps[v] == reps[w] for w in explored):
                continue
            if first_child is None:
                first_child = v
            child = []
            for cell in cells:
                if cell is target:
                    child.append([v])
                    child.append([x for x in cell if x != v])
                else:
                    child.append(cell)
            child = _refine(self.rows, child, [1 << v])
            found = self._dfs(child, prefix + (v,), first_path and v == first_child)
            explored.append(v)
            if found and not first_path:
                return True
        if first_path:
            fixing = [p for p in self.gens if all(p[x] == x for x in prefix)]
            reps = _orbit_reps(self.n, fixing)
            self.order *= sum(1 for x in target if reps[x] == reps[first_child])
        return False


def _group(n: int, s: _Search) -> AutGroup:
    reps = _orbit_reps(n, s.gens)
    orbits: dict[int, list[int]] = {}
    for v in range(n):
        orbits.setdefault(reps[v], []).append(v)
    return AutGroup(tuple(s.gens), s.order, tuple(tuple(o) for o in orbits.values()))


def _canon(g: Graph, coloring: Sequence | None, s: _Search) -> CanonicalForm:
    lab = s.best[0] if s.best else []
    pos = [0] * g.n
    for i, v in enumerate(lab):
        pos[v] = i
    cert = write_graph6(relabel(g, pos)).encode()
    if coloring is not None:
        cert += b"|" + repr(tuple(coloring[v] for v in lab)).encode()
    return CanonicalForm(cert, tuple(pos))


def analyze(g: Graph, coloring: Sequence | None = None) -> tuple[AutGroup, CanonicalForm]:
    """Automorphism group and canonical form from a single search."""
    s = _Search(g, coloring)
    s.run()
    return _group(g.n, s), _canon(g, coloring, s)


def automorphism_group(g: Graph, coloring: Sequence | None = None) -> AutGroup:
    """Automorphisms of g preserving ``coloring`` (a colour value per vertex)."""
    s = _Search(g, coloring)
    s.run()
    return _group(g.n, s)


def has_nontrivial_automorphism(g: Graph, coloring: Sequence | None = None) -> bool:
    """Early-exit test for a nontrivial colour-preserving automorphism."""
    s = _Search(g, coloring, stop_on_automorphism=True)
    try:
        s.run()
    except _FoundAutomorphism:
        return True
    return False


def canonical_form(g: Graph, coloring: Sequence | None = None) -> CanonicalForm:
    s = _Search(g, coloring)
    s.run()
    return _canon(g, coloring, s)


def certificate(g: Graph, coloring: Sequence | None = None) -> bytes:
    return canonical_form(g, coloring).certificate


def canonical_graph(g: Graph) -> Graph:
    return relabel(g, canonical_form(g).labeling)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.size != h.size or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return certificate(g) == certificate(h)

