from collections import deque

import pytest

from icosaut.canon import canonical_form
from icosaut.graph import (EdgeExists, Graph, NoWheel, Side, build_xi, dot_export, extra_edges,
                           find_wheel, one_skeleton, projective_vertex_face_graph,
                           vertex_face_graph)
from icosaut.polyhedra import NotCentrallySymmetric, build_tetrahedron


def test_graph_rejects_loops_and_asymmetry():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))


def test_graph_equality_ignores_provenance(pi):
    plain = Graph(pi.n, pi.adj)
    assert plain == pi and plain.sides is None


def test_one_skeleton(ico, dodeca):
    s = one_skeleton(ico)
    assert s.n == 12 and set(s.degrees()) == {5} and s.is_connected()
    d = one_skeleton(dodeca)
    assert d.n == 20 and set(d.degrees()) == {3}


@pytest.mark.parametrize("name,n,m", [("ico", 32, 60), ("cube", 14, 24), ("dodeca", 32, 60)])
def test_vertex_face_graph_counts(name, n, m, request):
    P = request.getfixturevalue(name)
    G = vertex_face_graph(P)
    assert (G.n, G.m) == (n, m)
    assert G.is_bipartite()
    nv = len(P.vertices)
    deg = G.degrees()
    for v in range(nv):
        assert G.sides[v] is Side.VERTEX
        assert deg[v] == len(P.faces_of_vertex(v))
    for i, f in enumerate(P.faces):
        assert G.sides[nv + i] is Side.FACE
        assert deg[nv + i] == len(f)
    assert sum(deg[:nv]) == sum(deg[nv:])


def test_icosahedral_degrees(gamma):
    assert set(gamma.degrees()[:12]) == {5}
    assert set(gamma.degrees()[12:]) == {3}


def test_projective_graph_of_icosahedron(pi, pairing):
    assert (pi.n, pi.m) == (16, 30)
    assert pi.sides == (Side.VERTEX,) * 6 + (Side.FACE,) * 10
    assert set(pi.degrees()[:6]) == {5}
    assert set(pi.degrees()[6:]) == {3}
    assert pi.is_connected() and pi.is_bipartite()


def test_each_class_edge_has_two_witnesses(ico, pi, pairing):
    witnesses = {e: 0 for e in pi.edges()}
    for i, f in enumerate(ico.faces):
        for v in f:
            witnesses[(pairing.vertex_class[v], 6 + pairing.face_class[i])] += 1
    assert set(witnesses.values()) == {2}


def test_projective_graph_of_dodecahedron(pi_dodeca):
    assert (pi_dodeca.n, pi_dodeca.m) == (16, 30)
    assert sorted(pi_dodeca.degrees()) == [3] * 10 + [5] * 6


def test_cube_projective_graph_matches_definition(cube):
    # Definition applied directly to coordinates: classes {x, -x}, adjacency if any pair is incident
    V = cube.vertices
    vclasses = []
    for i, v in enumerate(V):
        pair = frozenset((i, V.index(-v)))
        if pair not in vclasses:
            vclasses.append(pair)
    fclasses = []
    for i, f in enumerate(cube.faces):
        neg = {V.index(-V[v]) for v in f}
        j = next(k for k, g in enumerate(cube.faces) if set(g) == neg)
        pair = frozenset((i, j))
        if pair not in fclasses:
            fclasses.append(pair)
    expected = {(a, len(vclasses) + b)
                for a, vc in enumerate(vclasses) for b, fc in enumerate(fclasses)
                if any(v in cube.faces[f] for v in vc for f in fc)}
    G, p = projective_vertex_face_graph(cube)
    assert (len(vclasses), len(fclasses)) == (4, 3)
    assert set(G.edges()) == expected
    assert G.m == 12 == 4 * 3   # complete bipartite


def test_projective_graph_needs_central_symmetry():
    with pytest.raises(NotCentrallySymmetric):
        projective_vertex_face_graph(build_tetrahedron())


@pytest.mark.parametrize("hub", range(12))
def test_find_wheel_every_hub(skeleton, pairing, hub):
    w = find_wheel(skeleton, pairing, hub)
    ring = (w.O,) + w.rim
    assert all(skeleton.has_edge(w.O, r) for r in w.rim)
    assert all(skeleton.has_edge(w.rim[i], w.rim[(i + 1) % 5]) for i in range(5))
    induced = [(a, b) for i, a in enumerate(ring) for b in ring[i + 1:] if skeleton.has_edge(a, b)]
    assert len(induced) == 10
    assert len({pairing.vertex_class[v] for v in ring}) == 6
    # orientation rule: start at the smallest rim id, then the smaller neighbour
    assert w.rim[0] == min(w.rim) and w.rim[1] < w.rim[4]


def test_find_wheel_rejects_cube(cube):
    s = one_skeleton(cube)
    for hub in range(8):
        with pytest.raises(NoWheel):
            find_wheel(s, None, hub)


def test_extra_edges_on_vertex_classes(pairing, wheel):
    J = extra_edges(pairing, wheel)
    c = pairing.vertex_class
    assert J == tuple(tuple(sorted((c[x], c[y]))) for x, y in
                      ((wheel.A, wheel.C), (wheel.B, wheel.O), (wheel.D, wheel.E)))
    assert all(a < 6 and b < 6 for a, b in J)


def _distance(G, s, t):
    dist = {s: 0}
    q = deque([s])
    while q:
        u = q.popleft()
        for w in G.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist[t]


def test_xi(pi, pairing, wheel, xi):
    assert (xi.n, xi.m) == (16, 33) == (16, pi.m + 3)
    assert xi.marked == frozenset(extra_edges(pairing, wheel))
    assert xi.is_connected() and not xi.is_bipartite()
    # odd closed walk: each chord plus an even path in the bipartite base graph
    for a, b in xi.marked:
        assert _distance(pi, a, b) % 2 == 0


def test_xi_refuses_existing_edges(pi, pairing, wheel):
    with pytest.raises(EdgeExists):
        build_xi(pi, pairing, wheel, [pi.edges()[0]])


def test_xi_hub_independent(skeleton, pi, pairing):
    forms = {canonical_form(build_xi(pi, pairing, find_wheel(skeleton, pairing, h))) for h in range(12)}
    assert len(forms) == 1


def test_dot_export(pi, xi):
    text = dot_export(pi)
    lines = text.splitlines()
    assert lines[0].startswith("graph ") and lines[-1] == "}"
    assert sum("[label=" in l for l in lines) == 16
    assert sum(" -- " in l for l in lines) == 30
    xtext = dot_export(xi).splitlines()
    assert sum(" -- " in l for l in xtext) == 33
    assert sum(" -- " in l and "color=red" in l for l in xtext) == 3
    assert dot_export(pi) == text


def test_dot_export_empty():
    assert dot_export(Graph.empty(0)).splitlines() == ["graph G {", "}"]
