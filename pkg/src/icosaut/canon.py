"""Equitable refinement, individualization-refinement search, canonical forms.

The search is a plain nauty-style tree walk:

* nodes are equitable ordered partitions; children individualize one vertex of
  the first smallest non-singleton cell;
* leaves are compared by the upper-triangle adjacency bit string of the
  relabelled graph (row-major); the smallest one is canonical;
* two leaves with equal strings give an automorphism, and automorphisms prune
  siblings in the same orbit of the pointwise stabilizer of the current prefix.

All of this is tuned for graphs with a few dozen vertices at most.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph
from .graph6 import encode as g6_encode
from .perm import PermGroup, Permutation


class NotAutomorphism(ValueError):
    pass


@dataclass(frozen=True)
class OrderedPartition:
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(tuple(c) for c in self.cells))
        if any(not c for c in self.cells):
            raise ValueError("empty cell")
        flat = [v for c in self.cells for v in c]
        if sorted(flat) != list(range(len(flat))):
            raise ValueError("cells do not partition 0..n-1")

    @classmethod
    def unit(cls, n: int) -> OrderedPartition:
        return cls((tuple(range(n)),) if n else ())

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.cells)

    def is_discrete(self) -> bool:
        return all(len(c) == 1 for c in self.cells)

    def sizes(self) -> list[int]:
        return [len(c) for c in self.cells]

    def as_sets(self) -> list[frozenset]:
        return [frozenset(c) for c in self.cells]

    def is_equitable(self, G: Graph) -> bool:
        masks = [_mask(c) for c in self.cells]
        for c in self.cells:
            for m in masks:
                if len({(G.adj[v] & m).bit_count() for v in c}) > 1:
                    return False
        return True


def _mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _refine(adj: Sequence[int], cells: list[list[int]], splitters: list[int]) -> list[list[int]]:
    """Split cells in place until equitable; ``splitters`` are cell masks to start from.

    Fragments are ordered by ascending neighbour count, so the result depends
    only on the ordered partition and the graph, not on vertex names.
    """
    n = sum(len(c) for c in cells)
    pending = set(splitters)
    queue = deque(splitters)
    while queue and len(cells) < n:
        s = queue.popleft()
        if s not in pending:
            continue
        pending.discard(s)
        i = 0
        while i < len(cells):
            cell = cells[i]
            if len(cell) == 1:
                i += 1
                continue
            buckets: dict[int, list[int]] = {}
            for v in cell:
                buckets.setdefault((adj[v] & s).bit_count(), []).append(v)
            if len(buckets) == 1:
                i += 1
                continue
            frags = [buckets[k] for k in sorted(buckets)]
            cells[i:i + 1] = frags
            cm = _mask(cell)
            fmasks = [_mask(f) for f in frags]
            if cm in pending:
                pending.discard(cm)
                skip = -1
            else:
                sizes = [len(f) for f in frags]
                skip = sizes.index(max(sizes))
            for k, fm in enumerate(fmasks):
                if k != skip:
                    pending.add(fm)
                    queue.append(fm)
            i += len(frags)
    return cells


def refine(G: Graph, p: OrderedPartition | None = None) -> OrderedPartition:
    """Coarsest equitable partition refining ``p`` (the unit partition by default)."""
    if p is None:
        p = OrderedPartition.unit(G.n)
    if p.n != G.n:
        raise ValueError("partition and graph sizes differ")
    cells = [list(c) for c in p.cells]
    return OrderedPartition(tuple(tuple(c) for c in _refine(G.adj, cells, [_mask(c) for c in cells])))


def _leaf_code(adj: Sequence[int], lab: Sequence[int]) -> int:
    code = 0
    n = len(lab)
    for i in range(n):
        row = adj[lab[i]]
        for j in range(i + 1, n):
            code = (code << 1) | (row >> lab[j] & 1)
    return code


def _orbit_roots(n: int, gens: list[tuple[int, ...]]) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x in range(n):
            a, b = find(x), find(g[x])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(x) for x in range(n)]


@dataclass
class SearchResult:
    labeling: tuple[int, ...]          # canonical position -> vertex
    code: int                          # adjacency bits of the canonical relabelling
    generators: list[tuple[int, ...]]  # automorphisms found, each verified
    nodes: int = 0
    leaves: int = 0

    @property
    def inverse_labeling(self) -> tuple[int, ...]:
        inv = [0] * len(self.labeling)
        for pos, v in enumerate(self.labeling):
            inv[v] = pos
        return tuple(inv)


class _Search:
    def __init__(self, G: Graph, cells: list[list[int]]):
        self.G = G
        self.adj = G.adj
        self.n = G.n
        self.cell_of = [0] * G.n
        for i, c in enumerate(cells):
            for v in c:
                self.cell_of[v] = i
        self.cells = cells
        self.autos: list[tuple[int, ...]] = []
        self.first = None   # (lab, code, path)
        self.best = None
        self.nodes = 0
        self.leaves = 0

    def run(self) -> SearchResult:
        root = _refine(self.adj, [list(c) for c in self.cells], [_mask(c) for c in self.cells])
        self._visit(root, [])
        lab, code, _ = self.best
        return SearchResult(tuple(lab), code, self.autos, self.nodes, self.leaves)

    def _visit(self, cells: list[list[int]], path: list[int]) -> int | None:
        self.nodes += 1
        depth = len(path)
        if len(cells) == self.n:
            return self._leaf([c[0] for c in cells], path)
        size = min(len(c) for c in cells if len(c) > 1)
        t = next(i for i, c in enumerate(cells) if len(c) == size)
        explored: list[int] = []
        for w in list(cells[t]):
            if explored and self._pruned(w, explored, path):
                continue
            explored.append(w)
            rest = [v for v in cells[t] if v != w]
            child = cells[:t] + [[w], rest] + [list(c) for c in cells[t + 1:]]
            child = _refine(self.adj, child, [1 << w])
            sig = self._visit(child, path + [w])
            if sig is not None and sig < depth:
                return sig
        return None

    def _pruned(self, w: int, explored: list[int], path: list[int]) -> bool:
        gens = [g for g in self.autos if all(g[v] == v for v in path)]
        if not gens:
            return False
        roots = _orbit_roots(self.n, gens)
        return roots[w] in {roots[u] for u in explored}

    def _leaf(self, lab: list[int], path: list[int]) -> int | None:
        self.leaves += 1
        code = _leaf_code(self.adj, lab)
        if self.first is None:
            self.first = self.best = (lab, code, path)
            return None
        for ref in (self.first, self.best):
            if code == ref[1]:
                self._record(ref[0], lab)
                return _common_prefix(path, ref[2])
        if code < self.best[1]:
            self.best = (lab, code, path)
        return None

    def _record(self, lab_a: list[int], lab_b: list[int]):
        gamma = [0] * self.n
        for a, b in zip(lab_a, lab_b):
            gamma[a] = b
        gamma = tuple(gamma)
        if all(i == x for i, x in enumerate(gamma)):
            return
        if not self.G.is_automorphism(gamma):
            raise AssertionError(f"search produced a non-automorphism {gamma}")
        if any(self.cell_of[v] != self.cell_of[gamma[v]] for v in range(self.n)):
            raise AssertionError(f"search produced a colour-breaking map {gamma}")
        self.autos.append(gamma)


def _common_prefix(a: list[int], b: list[int]) -> int:
    k = 0
    for x, y in zip(a, b):
        if x != y:
            break
        k += 1
    return k


def search(G: Graph, initial: OrderedPartition | None = None) -> SearchResult:
    if initial is None:
        initial = OrderedPartition.unit(G.n)
    if initial.n != G.n:
        raise ValueError("partition and graph sizes differ")
    if G.n <= 1:
        return SearchResult(tuple(range(G.n)), 0, [])
    return _Search(G, [list(c) for c in initial.cells]).run()


def automorphism_group(G: Graph, initial: OrderedPartition | None = None) -> PermGroup:
    """Automorphisms of G that map every cell of ``initial`` to itself."""
    res = search(G, initial)
    return PermGroup([Permutation(g) for g in res.generators], G.n)


@dataclass(frozen=True)
class CanonicalForm:
    n: int
    bits: int
    labeling: tuple[int, ...] = field(compare=False, default=())

    @property
    def graph6(self) -> bytes:
        return g6_encode(self.graph())

    def graph(self) -> Graph:
        """The canonically relabelled graph."""
        adj = [0] * self.n
        k = self.n * (self.n - 1) // 2
        for i in range(self.n):
            for j in range(i + 1, self.n):
                k -= 1
                if self.bits >> k & 1:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        return Graph(self.n, tuple(adj))

    def __str__(self):
        return self.graph6.decode()


def canonical_form(G: Graph, initial: OrderedPartition | None = None) -> CanonicalForm:
    res = search(G, initial)
    return CanonicalForm(G.n, res.code, res.labeling)


def are_isomorphic(G: Graph, H: Graph) -> tuple[bool, tuple[int, ...] | None]:
    """Isomorphism test through canonical forms; on success also returns a verified map G -> H."""
    if G.n != H.n or G.m != H.m or sorted(G.degrees()) != sorted(H.degrees()):
        return False, None
    cg, ch = canonical_form(G), canonical_form(H)
    if cg != ch:
        return False, None
    iso = [0] * G.n
    for a, b in zip(cg.labeling, ch.labeling):
        iso[a] = b
    iso = tuple(iso)
    for u, v in G.edges():
        if not H.has_edge(iso[u], iso[v]):
            raise AssertionError("canonical labelings did not yield an isomorphism")
    return True, iso


def edge_orbits(G: Graph, A: PermGroup) -> list[list[tuple[int, int]]]:
    """Orbits of A on the edge set; each orbit sorted, orbits ordered by first edge."""
    for g in A.generators:
        if not G.is_automorphism(g.images):
            raise NotAutomorphism(f"{g} does not preserve the edge set")
    edges = G.edges()
    index = {e: i for i, e in enumerate(edges)}
    parent = list(range(len(edges)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in A.generators:
        for i, (u, v) in enumerate(edges):
            a, b = g[u], g[v]
            j = index[(a, b) if a < b else (b, a)]
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    orbits: dict[int, list] = {}
    for i, e in enumerate(edges):
        orbits.setdefault(find(i), []).append(e)
    return [orbits[k] for k in sorted(orbits)]
