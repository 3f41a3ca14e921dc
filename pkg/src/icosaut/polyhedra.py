"""Centrally symmetric polyhedra with exact coordinates, and their antipodal classes."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .golden import PHI, GVec3, triple


class NotCentrallySymmetric(ValueError):
    pass


class InvalidPolyhedron(ValueError):
    pass


@dataclass(frozen=True)
class Polyhedron:
    """Vertex coordinates plus oriented face cycles; edges are derived from the faces."""

    vertices: tuple[GVec3, ...]
    faces: tuple[tuple[int, ...], ...]
    name: str = ""
    edges: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "faces", tuple(tuple(f) for f in self.faces))
        edges = set()
        for f in self.faces:
            for i in range(len(f)):
                edges.add(frozenset((f[i], f[(i + 1) % len(f)])))
        object.__setattr__(self, "edges", frozenset(edges))
        self.validate()

    def validate(self):
        n = len(self.vertices)
        count: dict[frozenset, int] = {}
        for f in self.faces:
            if len(f) < 3 or len(set(f)) != len(f):
                raise InvalidPolyhedron(f"face {f} is not a simple cycle")
            if any(not 0 <= v < n for v in f):
                raise InvalidPolyhedron(f"face {f} references a missing vertex")
            for i in range(len(f)):
                e = frozenset((f[i], f[(i + 1) % len(f)]))
                count[e] = count.get(e, 0) + 1
        bad = [tuple(sorted(e)) for e, c in count.items() if c != 2]
        if bad:
            raise InvalidPolyhedron(f"edges not in exactly two faces: {bad[:5]}")
        if n - len(self.edges) + len(self.faces) != 2:
            raise InvalidPolyhedron("Euler characteristic is not 2")

    @property
    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(e)) for e in self.edges)

    def face_sets(self) -> list[frozenset]:
        return [frozenset(f) for f in self.faces]

    def faces_of_vertex(self, v: int) -> list[int]:
        return [i for i, f in enumerate(self.faces) if v in f]

    def is_outward_oriented(self) -> bool:
        """Every face cycle runs counterclockwise seen from outside (exact test)."""
        for f in self.faces:
            a, b, c = (self.vertices[i] for i in f[:3])
            if triple(a, b - a, c - a).sign() <= 0:
                return False
        return True

    def to_json(self) -> dict:
        return {
            "vertices": [v.to_json() for v in self.vertices],
            "faces": [list(f) for f in self.faces],
        }

    @classmethod
    def from_json(cls, data: dict, name: str = "") -> Polyhedron:
        from .golden import GoldenRational

        verts = [GVec3(*(GoldenRational.from_json(c) for c in v)) for v in data["vertices"]]
        return cls(verts, data["faces"], name)


def _signed_shifts(a, b):
    """The 12 points (0, ±a, ±b), (±a, ±b, 0), (±b, 0, ±a) in a fixed order."""
    out = []
    for s1 in (1, -1):
        for s2 in (1, -1):
            out.append(GVec3.of(0, a * s1, b * s2))
    for s1 in (1, -1):
        for s2 in (1, -1):
            out.append(GVec3.of(a * s1, b * s2, 0))
    for s1 in (1, -1):
        for s2 in (1, -1):
            out.append(GVec3.of(b * s1, 0, a * s2))
    return out


# counterclockwise from outside; checked by Polyhedron.is_outward_oriented in tests
_ICOSAHEDRON_FACES = (
    (0, 2, 8), (0, 10, 2), (0, 4, 6), (0, 8, 4), (0, 6, 10),
    (1, 9, 3), (1, 3, 11), (1, 6, 4), (1, 4, 9), (1, 11, 6),
    (2, 7, 5), (2, 5, 8), (2, 10, 7), (3, 5, 7), (3, 9, 5),
    (3, 7, 11), (4, 8, 9), (5, 9, 8), (6, 11, 10), (7, 10, 11),
)

_DODECAHEDRON_FACES = (
    (0, 8, 10, 2, 16), (0, 12, 14, 4, 8), (0, 16, 17, 1, 12),
    (1, 9, 5, 14, 12), (1, 17, 3, 11, 9), (2, 10, 6, 15, 13),
    (2, 13, 3, 17, 16), (3, 13, 15, 7, 11), (4, 14, 5, 19, 18),
    (4, 18, 6, 10, 8), (5, 9, 11, 7, 19), (6, 18, 19, 7, 15),
)


def build_icosahedron() -> Polyhedron:
    """Regular icosahedron on the cyclic shifts of (0, ±1, ±phi), centered at the origin."""
    return Polyhedron(_signed_shifts(1, PHI), _ICOSAHEDRON_FACES, "icosahedron")


def build_dodecahedron() -> Polyhedron:
    """Regular dodecahedron: (±1, ±1, ±1) and cyclic shifts of (0, ±1/phi, ±phi).

    1/phi is written as phi - 1 so every coordinate stays in Q(phi).
    """
    cube = [GVec3.of(a, b, c) for a in (1, -1) for b in (1, -1) for c in (1, -1)]
    return Polyhedron(cube + _signed_shifts(PHI - 1, PHI), _DODECAHEDRON_FACES, "dodecahedron")


def _oriented(vertices, faces):
    out = []
    for f in faces:
        a, b, c = (vertices[i] for i in f[:3])
        if triple(a, b - a, c - a).sign() < 0:
            f = (f[0],) + tuple(reversed(f[1:]))
        out.append(tuple(f))
    return out


def build_cube() -> Polyhedron:
    """Cube on (±1, ±1, ±1); vertex index = 4*[x<0] + 2*[y<0] + [z<0]."""
    verts = [GVec3.of(a, b, c) for a in (1, -1) for b in (1, -1) for c in (1, -1)]
    faces = [(0, 1, 3, 2), (4, 5, 7, 6), (0, 1, 5, 4), (2, 3, 7, 6), (0, 2, 6, 4), (1, 3, 7, 5)]
    return Polyhedron(verts, _oriented(verts, faces), "cube")


def build_tetrahedron() -> Polyhedron:
    verts = [GVec3.of(1, 1, 1), GVec3.of(1, -1, -1), GVec3.of(-1, 1, -1), GVec3.of(-1, -1, 1)]
    return Polyhedron(verts, _oriented(verts, list(combinations(range(4), 3))), "tetrahedron")


SOLIDS = {
    "icosahedron": build_icosahedron,
    "dodecahedron": build_dodecahedron,
}


@dataclass(frozen=True)
class AntipodalPairing:
    """Projective classes of vertices and faces.

    Class ids are assigned in order of the smallest member index, so class 0
    contains vertex 0, and so on.
    """

    vertex_class: tuple[int, ...]
    face_class: tuple[int, ...]
    vertex_partner: tuple[int, ...]
    face_partner: tuple[int, ...]

    @property
    def n_vertex_classes(self) -> int:
        return len(self.vertex_class) // 2

    @property
    def n_face_classes(self) -> int:
        return len(self.face_class) // 2

    def vertex_members(self, c: int) -> list[int]:
        return [v for v, k in enumerate(self.vertex_class) if k == c]

    def face_members(self, c: int) -> list[int]:
        return [f for f, k in enumerate(self.face_class) if k == c]


def _classes(partner):
    cls = [-1] * len(partner)
    nxt = 0
    for i, j in enumerate(partner):
        if cls[i] < 0:
            cls[i] = cls[j] = nxt
            nxt += 1
    return tuple(cls)


def antipodal_pairing(P: Polyhedron) -> AntipodalPairing:
    index = {v: i for i, v in enumerate(P.vertices)}
    vpartner = []
    for i, v in enumerate(P.vertices):
        j = index.get(-v)
        if j is None or j == i:
            raise NotCentrallySymmetric(f"vertex {i} has no antipodal partner")
        vpartner.append(j)
    fidx = {frozenset(f): i for i, f in enumerate(P.faces)}
    fpartner = []
    for i, f in enumerate(P.faces):
        j = fidx.get(frozenset(vpartner[v] for v in f))
        if j is None or j == i:
            raise NotCentrallySymmetric(f"face {i} has no antipodal partner")
        fpartner.append(j)
    return AntipodalPairing(_classes(vpartner), _classes(fpartner), tuple(vpartner), tuple(fpartner))


def is_proper_rotation(perm, P: Polyhedron) -> bool:
    """Whether a skeleton automorphism (as an image sequence on vertices) is orientation preserving.

    Any linear symmetry is fixed by the images of three independent vertices,
    so comparing the sign of one exact triple product before and after suffices.
    """
    V = P.vertices
    n = len(V)
    for a, b, c in combinations(range(n), 3):
        t = triple(V[a], V[b], V[c])
        if t:
            return triple(V[perm[a]], V[perm[b]], V[perm[c]]).sign() == t.sign()
    raise InvalidPolyhedron("vertices are coplanar")
