"""Simple undirected graphs and the vertex-face constructions built on polyhedra."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from .polyhedra import AntipodalPairing, Polyhedron, antipodal_pairing


class Side(str, Enum):
    VERTEX = "V"
    FACE = "F"


class NoWheel(ValueError):
    pass


class EdgeExists(ValueError):
    pass


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Adjacency is stored as one bitmask per vertex.

    Equality looks at the edge relation only; ``sides`` (bipartite provenance)
    and ``marked`` (edges added on top of a base construction) ride along for
    reporting and drawing.
    """

    n: int
    adj: tuple[int, ...]
    sides: tuple[Side, ...] | None = field(default=None, compare=False)
    marked: frozenset = field(default=frozenset(), compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour out of range")
            w = row
            while w:
                low = w & -w
                u = low.bit_length() - 1
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at {v}-{u}")
                w ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], sides=None, marked=()) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), None if sides is None else tuple(sides),
                   frozenset(_edge(*e) for e in marked))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        row = self.adj[v]
        return [u for u in range(self.n) if row >> u & 1]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if self.adj[u] >> v & 1]

    @property
    def m(self) -> int:
        return sum(self.degrees()) // 2

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex v renamed to perm[v]."""
        adj = [0] * self.n
        for u, v in self.edges():
            a, b = perm[u], perm[v]
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        sides = None
        if self.sides is not None:
            s = [None] * self.n
            for v in range(self.n):
                s[perm[v]] = self.sides[v]
            sides = tuple(s)
        marked = frozenset(_edge(perm[u], perm[v]) for u, v in self.marked)
        return Graph(self.n, tuple(adj), sides, marked)

    def with_edges(self, added: Iterable[tuple[int, int]], mark: bool = True) -> Graph:
        added = [_edge(*e) for e in added]
        adj = list(self.adj)
        for u, v in added:
            if adj[u] >> v & 1:
                raise EdgeExists(f"edge {u}-{v} already present")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        marked = self.marked | frozenset(added) if mark else self.marked
        return Graph(self.n, tuple(adj), self.sides, marked)

    def without_edge(self, u: int, v: int) -> Graph:
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj), self.sides, self.marked - {_edge(u, v)})

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            w = frontier
            while w:
                low = w & -w
                nxt |= self.adj[low.bit_length() - 1]
                w ^= low
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    def two_coloring(self) -> list[int] | None:
        """A proper 2-colouring, or None when the graph has an odd cycle."""
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] >= 0:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self.neighbors(u):
                    if color[w] < 0:
                        color[w] = 1 - color[u]
                        stack.append(w)
                    elif color[w] == color[u]:
                        return None
        return color

    def is_bipartite(self) -> bool:
        return self.two_coloring() is not None

    def is_automorphism(self, perm: Sequence[int]) -> bool:
        if sorted(perm) != list(range(self.n)):
            return False
        for u, v in self.edges():
            if not self.adj[perm[u]] >> perm[v] & 1:
                return False
        return True

    def side_partition(self) -> list[list[int]]:
        """Vertex-side ids then face-side ids; a single cell if there are no side labels."""
        if self.sides is None:
            return [list(range(self.n))]
        cells = [[v for v in range(self.n) if self.sides[v] is s] for s in (Side.VERTEX, Side.FACE)]
        return [c for c in cells if c]


def one_skeleton(P: Polyhedron) -> Graph:
    return Graph.from_edges(len(P.vertices), P.edge_list)


def vertex_face_graph(P: Polyhedron) -> Graph:
    """Bipartite incidence graph: polyhedron vertices 0..V-1, faces V..V+F-1."""
    nv = len(P.vertices)
    edges = [(v, nv + i) for i, f in enumerate(P.faces) for v in f]
    sides = [Side.VERTEX] * nv + [Side.FACE] * len(P.faces)
    return Graph.from_edges(nv + len(P.faces), edges, sides)


def projective_vertex_face_graph(P: Polyhedron) -> tuple[Graph, AntipodalPairing]:
    """Incidence graph on antipodal classes.

    A vertex class and a face class are adjacent when some member vertex is a
    corner of some member face.  Vertex classes get ids 0..k-1, face classes
    follow.
    """
    pairing = antipodal_pairing(P)
    k = pairing.n_vertex_classes
    edges = set()
    for i, f in enumerate(P.faces):
        for v in f:
            edges.add((pairing.vertex_class[v], k + pairing.face_class[i]))
    sides = [Side.VERTEX] * k + [Side.FACE] * pairing.n_face_classes
    return Graph.from_edges(k + pairing.n_face_classes, sorted(edges), sides), pairing


@dataclass(frozen=True)
class WheelLabeling:
    """Hub O and rim (A, B, C, D, E) of a 5-wheel in the icosahedron skeleton."""

    O: int
    rim: tuple[int, int, int, int, int]

    @property
    def A(self):
        return self.rim[0]

    @property
    def B(self):
        return self.rim[1]

    @property
    def C(self):
        return self.rim[2]

    @property
    def D(self):
        return self.rim[3]

    @property
    def E(self):
        return self.rim[4]

    def as_dict(self) -> dict:
        return dict(zip("OABCDE", (self.O,) + self.rim))


def find_wheel(skeleton: Graph, pairing: AntipodalPairing | None, hub: int) -> WheelLabeling:
    if not 0 <= hub < skeleton.n:
        raise NoWheel(f"hub {hub} is not a vertex")
    nbrs = skeleton.neighbors(hub)
    if len(nbrs) != 5:
        raise NoWheel(f"hub {hub} has degree {len(nbrs)}, not 5")
    mask = skeleton.adj[hub]
    inner = {v: [u for u in skeleton.neighbors(v) if mask >> u & 1] for v in nbrs}
    if any(len(x) != 2 for x in inner.values()):
        raise NoWheel(f"neighbourhood of {hub} is not a 5-cycle")
    start = min(nbrs)
    rim = [start, min(inner[start])]
    while len(rim) < 5:
        a, b = inner[rim[-1]]
        nxt = b if a == rim[-2] else a
        if nxt in rim:
            raise NoWheel(f"neighbourhood of {hub} is not a single 5-cycle")
        rim.append(nxt)
    if start not in inner[rim[-1]]:
        raise NoWheel(f"neighbourhood of {hub} is not a single 5-cycle")
    w = WheelLabeling(hub, tuple(rim))
    if pairing is not None:
        classes = {pairing.vertex_class[v] for v in (w.O,) + w.rim}
        if len(classes) != 6:
            raise NoWheel("wheel vertices do not lie in six distinct antipodal classes")
    return w


def extra_edges(pairing: AntipodalPairing, w: WheelLabeling) -> tuple[tuple[int, int], ...]:
    """The three class edges [A][C], [B][O], [D][E]."""
    c = pairing.vertex_class
    return tuple(_edge(c[x], c[y]) for x, y in ((w.A, w.C), (w.B, w.O), (w.D, w.E)))


def build_xi(pi_graph: Graph, pairing: AntipodalPairing, w: WheelLabeling,
             j: Sequence[tuple[int, int]] | None = None) -> Graph:
    """Projective vertex-face graph plus the three wheel chords (or an explicit replacement set)."""
    if j is None:
        j = extra_edges(pairing, w)
    return pi_graph.with_edges(j)


def dot_export(G: Graph, labels: Sequence[str] | None = None, name: str = "G") -> str:
    if labels is None:
        if G.sides is not None:
            counts = {Side.VERTEX: 0, Side.FACE: 0}
            labels = []
            for s in G.sides:
                labels.append(f"{s.value.lower()}{counts[s]}")
                counts[s] += 1
        else:
            labels = [str(v) for v in range(G.n)]
    lines = [f"graph {name} {{"]
    for v in range(G.n):
        shape = ""
        if G.sides is not None:
            shape = ", shape=circle" if G.sides[v] is Side.VERTEX else ", shape=box"
        lines.append(f'  {v} [label="{labels[v]}"{shape}];')
    for u, v in G.edges():
        style = " [style=bold, color=red]" if (u, v) in G.marked else ""
        lines.append(f"  {u} -- {v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
