"""Machine checks of the icosahedron constructions, packaged as JSON-able reports."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence

from .actions import induced_vertex_face_action, projectivize_action
from .canon import automorphism_group, canonical_form, are_isomorphic, edge_orbits
from .graph import (Graph, Side, WheelLabeling, build_xi, extra_edges, find_wheel, one_skeleton,
                    projective_vertex_face_graph, vertex_face_graph)
from .graph6 import encode as g6_encode
from .groups import derived_subgroup, identify_group
from .perm import PermGroup, Permutation
from .polyhedra import Polyhedron, build_dodecahedron, build_icosahedron, is_proper_rotation

SCHEMA = 1


@dataclass
class Check:
    index: int
    name: str
    passed: bool
    evidence: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"index": self.index, "name": self.name, "passed": self.passed, "evidence": self.evidence}


@dataclass
class VerificationReport:
    claim: str
    checks: list[Check] = field(default_factory=list)
    evidence: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    elapsed_s: float = 0.0

    @property
    def status(self) -> str:
        return "verified" if self.checks and all(c.passed for c in self.checks) else "failed"

    @property
    def verified(self) -> bool:
        return self.status == "verified"

    @property
    def first_failure(self) -> int | None:
        return next((c.index for c in self.checks if not c.passed), None)

    def failed_indices(self) -> list[int]:
        return [c.index for c in self.checks if not c.passed]

    def run(self, name: str, fn: Callable[[], tuple[bool, dict]]) -> Check:
        """Evaluate one sub-check; an exception counts as a failure with the message as evidence."""
        try:
            passed, evidence = fn()
        except Exception as exc:  # noqa: BLE001 - a crashing sub-check is a failed sub-check
            passed, evidence = False, {"error": f"{type(exc).__name__}: {exc}"}
        check = Check(len(self.checks) + 1, name, bool(passed), evidence)
        self.checks.append(check)
        return check

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "claim": self.claim,
            "status": self.status,
            "first_failure": self.first_failure,
            "checks": [c.to_dict() for c in self.checks],
            "evidence": self.evidence,
            "notes": self.notes,
            "elapsed_s": round(self.elapsed_s, 6),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def summary(self) -> str:
        lines = [f"{self.claim}: {self.status}"]
        for c in self.checks:
            lines.append(f"  [{'ok' if c.passed else 'FAIL'}] {c.index}. {c.name}")
        return "\n".join(lines)


def _perm_json(g) -> list[int]:
    return list(g.images if isinstance(g, Permutation) else g)


def _hist_json(h: dict) -> dict:
    return {str(k): v for k, v in sorted(h.items())}


# -- shared constructions -----------------------------------------------------

def _solid(name: str) -> Polyhedron:
    return {"icosahedron": _icosahedron, "dodecahedron": _dodecahedron}[name]()


@lru_cache(maxsize=None)
def _icosahedron() -> Polyhedron:
    return build_icosahedron()


@lru_cache(maxsize=None)
def _dodecahedron() -> Polyhedron:
    return build_dodecahedron()


def rotation_group(P: Polyhedron) -> PermGroup:
    """Rotations of P as vertex permutations: the derived subgroup of the skeleton's automorphisms."""
    full = automorphism_group(one_skeleton(P))
    rot = derived_subgroup(full)
    if rot.order() != 60 or identify_group(rot).tag != "A5":
        raise ValueError(f"rotation subgroup of order {rot.order()} is not A5")
    return rot


@lru_cache(maxsize=None)
def _rotations(solid: str = "icosahedron") -> tuple[Permutation, ...]:
    return tuple(rotation_group(_solid(solid)).elements())


def embed_rotation(rho: Permutation, P: Polyhedron, pairing) -> Permutation:
    """Rotation on V -> its action on antipodal classes of V ⊔ F (f2 after f1)."""
    return projectivize_action(induced_vertex_face_action(rho, P), pairing)


def select_h1(rotations: Sequence[Permutation], w: WheelLabeling) -> Permutation:
    """The order-3 rotation turning face {O, C, D} with O -> C."""
    face = {w.O, w.C, w.D}
    hits = [g for g in rotations if g.order() == 3 and {g[v] for v in face} == face and g[w.O] == w.C]
    if len(hits) != 1:
        raise ValueError(f"expected one face rotation, found {len(hits)}")
    return hits[0]


def select_h2(rotations: Sequence[Permutation], w: WheelLabeling) -> Permutation:
    """The half turn about the midpoint of edge {O, B}."""
    edge = {w.O, w.B}
    hits = [g for g in rotations if not g.is_identity() and {g[v] for v in edge} == edge]
    if len(hits) != 1:
        raise ValueError(f"expected one edge rotation, found {len(hits)}")
    return hits[0]


def _edge_image(g: Permutation, e: tuple[int, int]) -> tuple[int, int]:
    a, b = g[e[0]], g[e[1]]
    return (a, b) if a < b else (b, a)


# -- Aut(Pi) = A5 --------------------------------------------------------------

def verify_prop1(pi: Graph | None = None, rotations: Sequence[Permutation] | None = None) -> VerificationReport:
    """Aut of the projective vertex-face graph of the icosahedron is A5, realised by the rotations.

    ``pi`` and ``rotations`` exist only to feed in mutated fixtures.
    """
    t0 = time.perf_counter()
    rep = VerificationReport("prop1")
    I = _icosahedron()
    pi0, pairing = projective_vertex_face_graph(I)
    if pi is None:
        pi = pi0
    if rotations is None:
        rotations = _rotations()
    gamma = vertex_face_graph(I)
    state: dict = {}

    def structure():
        vs = [v for v in range(pi.n) if pi0.sides[v] is Side.VERTEX]
        fs = [v for v in range(pi.n) if pi0.sides[v] is Side.FACE]
        deg = pi.degrees()
        crossing = all((u in vs) != (v in vs) for u, v in pi.edges())
        ok = (pi.n == 16 and len(vs) == 6 and len(fs) == 10 and crossing
              and all(deg[v] == 5 for v in vs) and all(deg[v] == 3 for v in fs))
        return ok, {"vertices": pi.n, "edges": pi.m, "vertex_side": len(vs), "face_side": len(fs),
                    "vertex_side_degrees": sorted({deg[v] for v in vs}),
                    "face_side_degrees": sorted({deg[v] for v in fs}),
                    "edges_cross_sides": crossing, "graph6": g6_encode(pi).decode()}

    def embedding():
        images = []
        bad_f1 = bad_f2 = 0
        for rho in rotations:
            f1 = induced_vertex_face_action(rho, I)
            if not gamma.is_automorphism(f1.images):
                bad_f1 += 1
            f = projectivize_action(f1, pairing)
            if not pi.is_automorphism(f.images):
                bad_f2 += 1
            images.append(f)
        distinct = len(set(images))
        state["image"] = set(images)
        ok = bad_f1 == 0 and bad_f2 == 0 and distinct == len(images) == 60
        return ok, {"rotations": len(rotations), "distinct_images": distinct,
                    "f1_not_automorphism": bad_f1, "image_not_automorphism": bad_f2}

    def aut_order():
        A = automorphism_group(pi)
        state["aut"] = A
        return A.order() == 60, {"order": A.order(), "generators": [_perm_json(g) for g in A.generators]}

    def counting():
        A = state["aut"]
        orbits = A.orbits()
        vclass = [v for v in range(pi.n) if pi0.sides[v] is Side.VERTEX]
        orb = A.orbit(vclass[0])
        stab = A.order() // len(orb)
        sizes = sorted(len(o) for o in orbits)
        ok = sizes == [6, 10] and len(orb) == 6 and stab == 10 and len(orb) * stab == 60 == A.order()
        return ok, {"orbit_sizes": sizes, "vertex_class_orbit": len(orb), "vertex_class_stabilizer": stab,
                    "bound": len(orb) * stab}

    def identify():
        name = identify_group(state["aut"])
        return name.tag == "A5", {"name": str(name), "element_orders": _hist_json(name.evidence["element_orders"]),
                                  "simple": name.evidence.get("simple")}

    def image_is_aut():
        A = state["aut"]
        elems = set(A.elements())
        return state["image"] == elems, {"image_size": len(state["image"]), "aut_size": len(elems)}

    rep.run("projective vertex-face graph: 16 vertices, degrees 5 and 3", structure)
    rep.run("rotations embed injectively into Aut via f1 then f2", embedding)
    rep.run("automorphism group has order 60", aut_order)
    rep.run("orbit 6 x stabilizer 10 = 60 on vertex classes", counting)
    rep.run("automorphism group identified as A5", identify)
    rep.run("image of the rotation group is the whole automorphism group", image_is_aut)
    rep.elapsed_s = time.perf_counter() - t0
    return rep


# -- Xi and the subgroup H -----------------------------------------------------

def verify_prop2(hub: int = 0, j: Sequence[tuple[int, int]] | None = None,
                 h2: Permutation | None = None) -> VerificationReport:
    """Three chords on the wheel classes cut the automorphism group down to A4.

    ``j`` replaces the chord set and ``h2`` the half turn, for negative controls.
    """
    t0 = time.perf_counter()
    rep = VerificationReport("prop2")
    I = _icosahedron()
    skel = one_skeleton(I)
    pi, pairing = projective_vertex_face_graph(I)
    rotations = _rotations()
    state: dict = {}

    def wheel():
        w = find_wheel(skel, pairing, hub)
        state["w"] = w
        ring = (w.O,) + w.rim
        induced = [(a, b) for i, a in enumerate(ring) for b in ring[i + 1:] if skel.has_edge(a, b)]
        rim_cycle = all(skel.has_edge(w.rim[i], w.rim[(i + 1) % 5]) for i in range(5))
        classes = sorted(pairing.vertex_class[v] for v in ring)
        ok = len(induced) == 10 and rim_cycle and all(skel.has_edge(w.O, r) for r in w.rim) and len(set(classes)) == 6
        return ok, {"wheel": w.as_dict(), "induced_edges": len(induced), "classes": classes}

    def xi_graph():
        chords = tuple(j) if j is not None else extra_edges(pairing, state["w"])
        state["J"] = [tuple(sorted(e)) for e in chords]
        xi = build_xi(pi, pairing, state["w"], chords)
        state["xi"] = xi
        vside = all(pi.sides[a] is Side.VERTEX and pi.sides[b] is Side.VERTEX for a, b in state["J"])
        ok = xi.m == 33 and vside and not xi.is_bipartite() and xi.is_connected()
        return ok, {"edges": xi.m, "J": [list(e) for e in state["J"]], "J_on_vertex_side": vside,
                    "bipartite": xi.is_bipartite(), "graph6": g6_encode(xi).decode()}

    def subgroup():
        w = state["w"]
        g1 = select_h1(rotations, w)
        g2 = h2 if h2 is not None else select_h2(rotations, w)
        state["h1"], state["h2"] = g1, g2
        H = PermGroup([g1, g2], 12)
        state["H"] = H
        name = identify_group(H) if H.order() <= 20_000 else None
        ok = H.order() == 12 and name is not None and name.tag == "A4"
        return ok, {"h1": _perm_json(g1), "h2": _perm_json(g2), "h1_direction": "O->C->D",
                    "order": H.order(), "name": str(name) if name else None,
                    "element_orders": _hist_json(name.evidence["element_orders"]) if name else None}

    def chord_action():
        J = state["J"]
        p1 = embed_rotation(state["h1"], I, pairing)
        p2 = embed_rotation(state["h2"], I, pairing)
        img1 = [_edge_image(p1, e) for e in J]
        img2 = [_edge_image(p2, e) for e in J]
        three_cycle = sorted(img1) == sorted(J) and all(a != b for a, b in zip(img1, J))
        fixes_each = img2 == J
        return three_cycle and fixes_each, {"h1_images": [list(e) for e in img1],
                                            "h2_images": [list(e) for e in img2],
                                            "h1_three_cycle": three_cycle, "h2_fixes_each": fixes_each}

    def h_in_aut():
        xi = state["xi"]
        proj = [embed_rotation(g, I, pairing) for g in state["H"].elements()]
        state["fH"] = set(proj)
        bad = sum(not xi.is_automorphism(p.images) for p in proj)
        return bad == 0, {"elements": len(proj), "not_automorphisms": bad}

    def aut_xi():
        A = automorphism_group(state["xi"])
        name = identify_group(A) if A.order() <= 20_000 else None
        same = A.order() <= 20_000 and set(A.elements()) == state.get("fH")
        ok = A.order() == 12 and name is not None and name.tag == "A4" and same
        return ok, {"order": A.order(), "name": str(name) if name else None,
                    "generators": [_perm_json(g) for g in A.generators], "equals_image_of_H": same}

    def others_break_j():
        J = set(state["J"])
        H = state["H"]
        outside = [g for g in rotations if not H.contains(g)]
        preserving = []
        for g in outside:
            p = embed_rotation(g, I, pairing)
            if {_edge_image(p, e) for e in J} == J:
                preserving.append(g)
        return len(outside) == 48 and not preserving, {"outside_H": len(outside),
                                                       "preserving_J": [_perm_json(g) for g in preserving]}

    rep.run("wheel W is a 5-wheel on six distinct antipodal classes", wheel)
    rep.run("Xi = Pi + J has 33 edges and is not bipartite", xi_graph)
    rep.run("H = <h1, h2> has order 12 and is A4", subgroup)
    rep.run("h1 cycles the three chords, h2 fixes each", chord_action)
    rep.run("projectivised H acts by automorphisms of Xi", h_in_aut)
    rep.run("Aut(Xi) has order 12, is A4, and equals the image of H", aut_xi)
    rep.run("every rotation outside H moves the chord set", others_break_j)
    rep.elapsed_s = time.perf_counter() - t0
    return rep


# -- Remarks ------------------------------------------------------------------

def verify_remarks() -> VerificationReport:
    t0 = time.perf_counter()
    rep = VerificationReport("remarks")
    rep.notes.append(
        "The dodecahedron remark equates a graph with a group; both readings are checked: "
        "the two projective graphs are isomorphic, and the automorphism group of the dodecahedral one is A5."
    )
    pi_i, _ = projective_vertex_face_graph(_icosahedron())
    pi_d, _ = projective_vertex_face_graph(_dodecahedron())

    def edge_transitive():
        A = automorphism_group(pi_i)
        orbits = edge_orbits(pi_i, A)
        ok = pi_i.is_connected() and pi_i.is_bipartite() and len(orbits) == 1 and len(orbits[0]) == 30
        return ok, {"connected": pi_i.is_connected(), "bipartite": pi_i.is_bipartite(),
                    "edge_orbit_sizes": [len(o) for o in orbits]}

    def dodecahedral_iso():
        ci, cd = canonical_form(pi_i), canonical_form(pi_d)
        iso_ok, witness = are_isomorphic(pi_d, pi_i)
        verified = witness is not None and all(pi_i.has_edge(witness[u], witness[v]) for u, v in pi_d.edges())
        return ci == cd and iso_ok and verified, {
            "canonical_icosahedral": ci.graph6.decode(), "canonical_dodecahedral": cd.graph6.decode(),
            "witness_dodecahedral_to_icosahedral": list(witness) if witness else None}

    def dodecahedral_group():
        A = automorphism_group(pi_d)
        name = identify_group(A)
        return name.tag == "A5", {"order": A.order(), "name": str(name)}

    rep.run("Pi_I is connected, bipartite and edge-transitive", edge_transitive)
    rep.run("Pi_D and Pi_I have equal canonical forms, with a verified isomorphism", dodecahedral_iso)
    rep.run("Aut(Pi_D) is A5", dodecahedral_group)
    rep.elapsed_s = time.perf_counter() - t0
    return rep


def verify_skeleton() -> VerificationReport:
    """Skeleton context: Aut(I1) is A5 x C2 and its derived subgroup is the rotation group."""
    t0 = time.perf_counter()
    rep = VerificationReport("skeleton")
    I = _icosahedron()
    state: dict = {}

    def full():
        S = automorphism_group(one_skeleton(I))
        state["S"] = S
        name = identify_group(S)
        return S.order() == 120 and name.tag == "A5xC2", {"order": S.order(), "name": str(name),
                                                          "center_order": name.evidence.get("center_order")}

    def derived():
        D = derived_subgroup(state["S"])
        state["D"] = D
        name = identify_group(D)
        return D.order() == 60 and name.tag == "A5", {"order": D.order(), "name": str(name)}

    def geometric():
        D = state["D"]
        proper = [is_proper_rotation(g, I) for g in state["S"].elements()]
        in_d = [D.contains(g) for g in state["S"].elements()]
        return proper == in_d, {"proper_rotations": sum(proper)}

    rep.run("Aut(I1) has order 120 and is A5 x C2", full)
    rep.run("derived subgroup has order 60 and is A5", derived)
    rep.run("derived subgroup is exactly the orientation-preserving symmetries", geometric)
    rep.elapsed_s = time.perf_counter() - t0
    return rep


VERIFIERS = {
    "prop1": verify_prop1,
    "prop2": verify_prop2,
    "remarks": verify_remarks,
    "skeleton": verify_skeleton,
}


ALL = ("prop1", "prop2", "remarks")


def verify_all() -> list[VerificationReport]:
    return [VERIFIERS[k]() for k in ALL]
