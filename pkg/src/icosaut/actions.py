"""Actions of skeleton symmetries on vertex-face incidences and on antipodal classes."""

from __future__ import annotations

from typing import Sequence

from .perm import Permutation
from .polyhedra import AntipodalPairing, Polyhedron


class NotASkeletonAutomorphism(ValueError):
    pass


class FaceNotPreserved(ValueError):
    pass


class PairingNotRespected(ValueError):
    pass


def induced_vertex_face_action(rho: Permutation | Sequence[int], P: Polyhedron) -> Permutation:
    """Extend a vertex permutation to V ⊔ F (faces numbered after the vertices)."""
    rho = tuple(rho)
    nv = len(P.vertices)
    if len(rho) != nv:
        raise NotASkeletonAutomorphism(f"expected {nv} points, got {len(rho)}")
    for e in P.edges:
        if frozenset(rho[v] for v in e) not in P.edges:
            raise NotASkeletonAutomorphism(f"edge {sorted(e)} is not mapped to an edge")
    face_index = {frozenset(f): i for i, f in enumerate(P.faces)}
    images = list(rho)
    for f in P.faces:
        j = face_index.get(frozenset(rho[v] for v in f))
        if j is None:
            raise FaceNotPreserved(f"image of face {f} is not a face")
        images.append(nv + j)
    return Permutation(images)


def class_map(pairing: AntipodalPairing) -> list[int]:
    """Class id of every point of V ⊔ F, with face classes numbered after vertex classes."""
    k = pairing.n_vertex_classes
    return list(pairing.vertex_class) + [k + c for c in pairing.face_class]


def projectivize_action(phi: Permutation | Sequence[int], pairing: AntipodalPairing) -> Permutation:
    """The permutation [x] -> [phi(x)] on antipodal classes."""
    phi = tuple(phi)
    cls = class_map(pairing)
    if len(phi) != len(cls):
        raise PairingNotRespected(f"expected {len(cls)} points, got {len(phi)}")
    nv = len(pairing.vertex_class)
    k = pairing.n_vertex_classes
    out: list[int | None] = [None] * (k + pairing.n_face_classes)
    for x, y in enumerate(phi):
        if (x < nv) != (y < nv):
            raise PairingNotRespected(f"point {x} changes side")
        c, d = cls[x], cls[y]
        if out[c] is None:
            out[c] = d
        elif out[c] != d:
            raise PairingNotRespected(f"class {c} is sent to both {out[c]} and {d}")
    return Permutation(out)
