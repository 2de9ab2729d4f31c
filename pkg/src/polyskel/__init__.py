"""Skeletons, clique complexes and simplicial faces of order polytopes and
stable set polytopes, with an exact LP face oracle."""

from .complex import (
    SimplicialComplex,
    SkeletonGraph,
    VerificationReport,
    all_cliques,
    clique_complex,
    complexes_equal,
    verify_instance,
)
from .errors import NotPerfectError, ParseError
from .geometry import Hyperplane, indicator, vertices_on_system
from .graphs import (
    SimpleGraph,
    enumerate_stable_sets,
    induced_subgraph,
    is_connected_bipartite,
    is_perfect,
    maximal_cliques,
    symmetric_difference,
)
from .lp import LPProblem, fourier_motzkin_feasible, lp_feasible
from .oracle import (
    affinely_independent,
    brute_force_skeleton,
    face_witness,
    is_face,
    simplicial_faces,
)
from .order import (
    is_order_clique,
    is_order_edge,
    order_clique_face_system,
    order_polytope_h_description,
    order_polytope_vertices,
    order_skeleton,
    verify_order_polytope,
)
from .posets import (
    Poset,
    antichains,
    comparability_graph,
    enumerate_ideals,
    hasse_edges,
    is_connected_in_poset,
    is_ideal,
)
from .stable import (
    chain_polytope_vertices,
    is_stab_clique,
    is_stab_edge,
    stab_clique_face_system,
    stab_h_description,
    stab_skeleton,
    stab_vertices,
    verify_stable_polytope,
)

__version__ = "0.1.0"
