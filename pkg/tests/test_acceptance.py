"""Exit criteria for the package, one test per criterion, each with its time budget.

Every criterion records a PASS/FAIL line that is printed in the terminal summary.
"""

from __future__ import annotations

import json
import random
import subprocess
import sys
import time
from contextlib import contextmanager
from pathlib import Path

from groupfixtures import library, random_two_generator_groups
from icosaut.actions import induced_vertex_face_action, projectivize_action
from icosaut.canon import are_isomorphic, automorphism_group, canonical_form, edge_orbits
from icosaut.cli import build_graph, main as cli_main
from icosaut.graph import Side, build_xi, extra_edges, find_wheel, one_skeleton, projective_vertex_face_graph
from icosaut.graph6 import decode, encode
from icosaut.groups import derived_subgroup, identify_group, parse_group_name
from icosaut.perm import PermGroup, Permutation, orbit_and_stabilizer
from icosaut.polyhedra import build_dodecahedron, build_icosahedron
from icosaut.search import mu_search
from icosaut.verify import rotation_group, select_h1, select_h2
from oracles import (all_automorphisms, automorphisms_by_filtering, brute_isomorphic, closure,
                     isomorphism_class_reps, random_graph)

ROOT = Path(__file__).resolve().parent.parent
RESULTS: list[tuple[int, str]] = []


@contextmanager
def criterion(number: int, title: str, budget_s: float | None):
    t0 = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - t0
        if budget_s is not None and elapsed >= budget_s:
            raise AssertionError(f"criterion {number} took {elapsed:.2f}s, budget {budget_s}s")
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - t0
        limit = f" (budget {budget_s:g}s)" if budget_s is not None else ""
        line = f"[{status}] {number:2d}. {title}: {elapsed:.2f}s{limit}"
        RESULTS.append((number, line))
        print(line)


def _pi():
    return projective_vertex_face_graph(build_icosahedron())


def test_1_pi_structure():
    with criterion(1, "Pi_I has 16 vertices, 30 edges, sides 6+10, degrees 5 and 3", 1.0):
        pi, _ = _pi()
        vs = [v for v in range(pi.n) if pi.sides[v] is Side.VERTEX]
        fs = [v for v in range(pi.n) if pi.sides[v] is Side.FACE]
        assert (pi.n, pi.m, len(vs), len(fs)) == (16, 30, 6, 10)
        assert all((u in vs) != (v in vs) for u, v in pi.edges())
        assert {pi.degree(v) for v in vs} == {5}
        assert {pi.degree(v) for v in fs} == {3}


def test_2_pi_group_is_a5():
    with criterion(2, "Aut(Pi_I) = 60 = A5 (simple), equal to the injective image of Rot(I)", 5.0):
        I = build_icosahedron()
        pi, pairing = projective_vertex_face_graph(I)
        A = automorphism_group(pi)
        assert A.order() == 60
        name = identify_group(A)
        assert name.tag == "A5" and name.evidence["simple"] is True
        rot = rotation_group(I)
        images = [projectivize_action(induced_vertex_face_action(g, I), pairing) for g in rot.elements()]
        assert len(images) == len(set(images)) == 60
        assert all(pi.is_automorphism(p.images) for p in images)
        assert set(images) == set(A.elements())


def test_3_counting_argument():
    with criterion(3, "vertex-class orbit 6 x stabilizer 10 = 60", 1.0):
        pi, _ = _pi()
        A = automorphism_group(pi)
        for v in range(6):
            orbit, stab = orbit_and_stabilizer(A, v)
            assert len(orbit) == 6 and stab == 10
            assert len(orbit) * stab == 60 == A.order()


def test_4_xi_and_h():
    with criterion(4, "H = A4 of order 12, chord action, Aut(Xi_I) = 12 = A4, 48 rotations break J", 5.0):
        I = build_icosahedron()
        pi, pairing = projective_vertex_face_graph(I)
        w = find_wheel(one_skeleton(I), pairing, 0)
        xi = build_xi(pi, pairing, w)
        rot = rotation_group(I).elements()
        h1, h2 = select_h1(rot, w), select_h2(rot, w)
        H = PermGroup([h1, h2])
        assert H.order() == 12 and identify_group(H).tag == "A4"

        def proj(g):
            return projectivize_action(induced_vertex_face_action(g, I), pairing)

        def image(p, e):
            return tuple(sorted((p[e[0]], p[e[1]])))

        J = list(extra_edges(pairing, w))
        im1 = [image(proj(h1), e) for e in J]
        assert sorted(im1) == sorted(J) and all(a != b for a, b in zip(im1, J))
        assert [image(proj(h2), e) for e in J] == J
        X = automorphism_group(xi)
        assert X.order() == 12 and identify_group(X).tag == "A4"
        outside = [g for g in rot if not H.contains(g)]
        assert len(outside) == 48
        assert all({image(proj(g), e) for e in J} != set(J) for g in outside)


def test_5_skeleton_context():
    with criterion(5, "Aut(I_1) = 120 = A5 x C2, derived subgroup 60 = A5", 2.0):
        S = automorphism_group(one_skeleton(build_icosahedron()))
        assert S.order() == 120 and identify_group(S).tag == "A5xC2"
        D = derived_subgroup(S)
        assert D.order() == 60 and identify_group(D).tag == "A5"


def test_6_remarks():
    with criterion(6, "Pi_D ~ Pi_I with witness, Pi_I edge-transitive, Aut(Pi_D) = A5", 2.0):
        pi, _ = _pi()
        pd, _ = projective_vertex_face_graph(build_dodecahedron())
        assert canonical_form(pd) == canonical_form(pi)
        ok, iso = are_isomorphic(pd, pi)
        assert ok and all(pi.has_edge(iso[u], iso[v]) for u, v in pd.edges())
        assert [len(o) for o in edge_orbits(pi, automorphism_group(pi))] == [30]
        assert identify_group(automorphism_group(pd)).tag == "A5"


def test_7_aut_engine_oracles():
    with criterion(7, "aut engine = brute force on all classes n<=6, 500 random n=7..10, 50-graph iso pool", 30.0):
        disagreements = 0
        for n in range(1, 7):
            for G in isomorphism_class_reps(n):
                brute = automorphisms_by_filtering(G)
                A = automorphism_group(G)
                if A.order() != len(brute) or not all(A.contains(Permutation(p)) for p in brute):
                    disagreements += 1
        rng = random.Random(2024)
        for _ in range(500):
            G = random_graph(rng, rng.randint(7, 10))
            brute = all_automorphisms(G)
            A = automorphism_group(G)
            if A.order() != len(brute) or not all(A.contains(Permutation(p)) for p in brute):
                disagreements += 1
        pool = [random_graph(rng, rng.randint(5, 7), rng.choice([0.3, 0.5])) for _ in range(35)]
        pool += [G.relabel(rng.sample(range(G.n), G.n)) for G in pool[:15]]
        assert len(pool) == 50
        forms = [canonical_form(G) for G in pool]
        for i in range(50):
            for j in range(i, 50):
                if (forms[i] == forms[j]) != brute_isomorphic(pool[i], pool[j]):
                    disagreements += 1
        assert disagreements == 0


def test_8_perm_group_oracles():
    with criterion(8, "chain order = enumeration on fixture groups and 50 random 2-generator groups", 10.0):
        disagreements = 0
        for _, G in library():
            elems = closure([g.images for g in G.generators], G.degree)
            if G.order() != len(elems):
                disagreements += 1
        for gens, d, elems in random_two_generator_groups(seed=8, count=50):
            if PermGroup(gens, d).order() != len(elems):
                disagreements += 1
        assert disagreements == 0


def test_9_mu_search(tmp_path, capsys):
    with criterion(9, "mu(Trivial)=1, mu(C2)=2, mu(S3)=3, no C3 up to 7; certificates re-verify", 10.0):
        expected = {"Trivial": 1, "C2": 2, "S3": 3}
        for name, n in expected.items():
            target = parse_group_name(name)
            rep = mu_search(target, 7)
            assert rep.n == n
            f = tmp_path / f"{name}.g6"
            f.write_text(rep.certificate + "\n")
            capsys.readouterr()
            assert cli_main(["aut", str(f)]) == 0
            first = capsys.readouterr().out.splitlines()[0]
            order = target.order
            assert first == f"order {order}, {target}"
        assert not mu_search(parse_group_name("C3"), 7).found


def _strip_timing(obj):
    if isinstance(obj, dict):
        return {k: _strip_timing(v) for k, v in obj.items() if k != "elapsed_s"}
    if isinstance(obj, list):
        return [_strip_timing(x) for x in obj]
    return obj


def _graph6_values(obj, out):
    if isinstance(obj, dict):
        for k, v in obj.items():
            if k.startswith("graph6") or k.startswith("canonical_"):
                out.append(v)
            _graph6_values(v, out)
    elif isinstance(obj, list):
        for x in obj:
            _graph6_values(x, out)
    return out


def test_10_determinism():
    with criterion(10, "verify all --json twice: identical up to timing; certificates byte-identical", None):
        runs = []
        for _ in range(2):
            res = subprocess.run([sys.executable, "-m", "icosaut", "verify", "all", "--json"],
                                 capture_output=True, check=True)
            runs.append(json.loads(res.stdout))
        assert _strip_timing(runs[0]) == _strip_timing(runs[1])
        g6a, g6b = _graph6_values(runs[0], []), _graph6_values(runs[1], [])
        assert g6a == g6b and len(g6a) >= 4
        certs = ROOT / "certificates"
        for name, kind, solid in [("pi_icosahedron", "pi", "icosahedron"),
                                  ("pi_dodecahedron", "pi", "dodecahedron"),
                                  ("xi_icosahedron", "xi", "icosahedron")]:
            G = build_graph(kind, solid)
            assert (certs / f"{name}.g6").read_bytes() == encode(G) + b"\n"
            assert (certs / f"canonical_{name}.g6").read_bytes() == canonical_form(G).graph6 + b"\n"
            assert decode((certs / f"{name}.g6").read_bytes()) == G
