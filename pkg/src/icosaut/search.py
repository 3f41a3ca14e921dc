"""Smallest graphs with a prescribed automorphism group, by exhaustive generation.

Graphs are generated one per isomorphism class with McKay's canonical
augmentation: a child (parent + one vertex joined to a set S) is kept only if
the new vertex lies in the orbit of the canonically last vertex, and only one
S per orbit of Aut(parent) on subsets is tried.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .canon import SearchResult, _orbit_roots, search
from .graph import Graph
from .graph6 import encode as g6_encode
from .groups import GroupName, identify_group
from .perm import PermGroup, Permutation

log = logging.getLogger(__name__)

GUARANTEED_MAX_N = 8
STRETCH_MAX_N = 9


class TargetNotIdentifiable(ValueError):
    pass


@dataclass
class SearchReport:
    target: str
    n_examined: int
    n: int | None = None
    certificate: str | None = None
    generators: list[list[int]] = field(default_factory=list)
    classes_per_n: dict[int, int] = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.n is not None

    def describe(self) -> str:
        if self.found:
            return f"mu({self.target}) = {self.n}, certificate {self.certificate}"
        return f"{self.target}: NotFoundUpTo({self.n_examined})"

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "target": self.target,
            "n_examined": self.n_examined,
            "result": ({"n": self.n, "graph6": self.certificate, "generators": self.generators}
                       if self.found else {"not_found_up_to": self.n_examined}),
            "classes_per_n": {str(k): v for k, v in self.classes_per_n.items()},
        }


def _subset_orbit_reps(k: int, gens: list[tuple[int, ...]]) -> list[int]:
    """Smallest mask of each orbit of the group on subsets of {0..k-1}."""
    total = 1 << k
    if not gens:
        return list(range(total))
    moved = []
    for g in gens:
        img = [0] * total
        for m in range(total):
            out = 0
            x = m
            while x:
                low = x & -x
                out |= 1 << g[low.bit_length() - 1]
                x ^= low
            img[m] = out
        moved.append(img)
    parent = list(range(total))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for img in moved:
        for m in range(total):
            a, b = find(m), find(img[m])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [m for m in range(total) if find(m) == m]


def _augment(parent: Graph, mask: int) -> Graph:
    n = parent.n
    adj = list(parent.adj) + [mask]
    for u in range(n):
        if mask >> u & 1:
            adj[u] |= 1 << n
    return Graph(n + 1, tuple(adj))


def generate(n_max: int) -> Iterator[tuple[Graph, SearchResult]]:
    """Yield one graph per isomorphism class for n = 1..n_max, with its search result.

    Classes of a given order come out after all classes of smaller order.
    """
    if n_max < 1:
        return
    level = [(Graph.empty(1), search(Graph.empty(1)))]
    yield level[0]
    for n in range(2, n_max + 1):
        nxt = []
        for parent, pres in level:
            for mask in _subset_orbit_reps(parent.n, pres.generators):
                child = _augment(parent, mask)
                res = search(child)
                roots = _orbit_roots(child.n, res.generators)
                if roots[child.n - 1] == roots[res.labeling[-1]]:
                    nxt.append((child, res))
        for item in nxt:
            yield item
        level = nxt


def count_classes(n_max: int) -> dict[int, int]:
    counts: dict[int, int] = {}
    for g, _ in generate(n_max):
        counts[g.n] = counts.get(g.n, 0) + 1
    return counts


def mu_search(target: GroupName, n_max: int, stretch: bool = False,
              progress: Callable[[int, int], None] | None = None) -> SearchReport:
    """Smallest n <= n_max with a graph whose automorphism group is ``target`` (abstractly)."""
    if target.tag == "Unknown" or target.order is None:
        raise TargetNotIdentifiable(f"cannot search for {target}")
    limit = STRETCH_MAX_N if stretch else GUARANTEED_MAX_N
    if n_max > limit:
        raise ValueError(f"n_max {n_max} exceeds the {'stretch' if stretch else 'guaranteed'} tier ({limit})")
    want = target.order
    report = SearchReport(str(target), n_max)
    hits: list[tuple[bytes, list[list[int]]]] = []
    current = None
    for G, res in generate(n_max):
        if G.n != current:
            if hits:
                break
            if current is not None and progress:
                progress(current, report.classes_per_n[current])
            current = G.n
            log.debug("enumerating graphs on %d vertices", current)
        report.classes_per_n[G.n] = report.classes_per_n.get(G.n, 0) + 1
        A = PermGroup([Permutation(g) for g in res.generators], G.n)
        if A.order() != want:
            continue
        if identify_group(A) == target:
            inv = res.inverse_labeling
            canon = G.relabel(inv)
            # generators rewritten in canonical coordinates
            gens = [[inv[g[v]] for v in res.labeling] for g in res.generators]
            hits.append((g6_encode(canon), gens))
    if progress and current is not None:
        progress(current, report.classes_per_n[current])
    if hits:
        cert, gens = min(hits)
        report.n = current
        report.certificate = cert.decode()
        report.generators = gens
    return report
