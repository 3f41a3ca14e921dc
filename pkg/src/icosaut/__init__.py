"""Automorphism groups of the projective vertex-face graphs of the icosahedron."""

from .canon import (CanonicalForm, OrderedPartition, are_isomorphic, automorphism_group,
                    canonical_form, edge_orbits, refine)
from .golden import GVec3, GoldenRational
from .graph import (Graph, Side, WheelLabeling, build_xi, dot_export, extra_edges, find_wheel,
                    one_skeleton, projective_vertex_face_graph, vertex_face_graph)
from .groups import GroupName, derived_subgroup, element_order_histogram, identify_group
from .perm import PermGroup, Permutation, orbit_and_stabilizer, schreier_sims
from .polyhedra import (AntipodalPairing, Polyhedron, antipodal_pairing, build_dodecahedron,
                        build_icosahedron)

__version__ = "0.1.0"
