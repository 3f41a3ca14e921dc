from __future__ import annotations

import pytest
from hypothesis import settings

from icosaut.graph import (Graph, build_xi, find_wheel, one_skeleton,
                           projective_vertex_face_graph, vertex_face_graph)
from icosaut.polyhedra import build_cube, build_dodecahedron, build_icosahedron

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


@pytest.fixture(scope="session")
def ico():
    return build_icosahedron()


@pytest.fixture(scope="session")
def dodeca():
    return build_dodecahedron()


@pytest.fixture(scope="session")
def cube():
    return build_cube()


@pytest.fixture(scope="session")
def skeleton(ico):
    return one_skeleton(ico)


@pytest.fixture(scope="session")
def gamma(ico):
    return vertex_face_graph(ico)


@pytest.fixture(scope="session")
def pi_pair(ico):
    return projective_vertex_face_graph(ico)


@pytest.fixture(scope="session")
def pi(pi_pair):
    return pi_pair[0]


@pytest.fixture(scope="session")
def pairing(pi_pair):
    return pi_pair[1]


@pytest.fixture(scope="session")
def wheel(skeleton, pairing):
    return find_wheel(skeleton, pairing, 0)


@pytest.fixture(scope="session")
def xi(pi, pairing, wheel):
    return build_xi(pi, pairing, wheel)


@pytest.fixture(scope="session")
def pi_dodeca(dodeca):
    return projective_vertex_face_graph(dodeca)[0]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(RESULTS):
        terminalreporter.write_line(line[1])
