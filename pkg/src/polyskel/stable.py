"""Stable set polytopes of perfect graphs, and chain polytopes of posets.

The predicates here rest on the clique-inequality description of the
stable set polytope, which holds for perfect graphs only.  They refuse other
graphs unless called with ``checked=False``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .complex import SkeletonGraph, VerificationReport, verify_instance
from .errors import NotPerfectError
from .geometry import GE, LE, Hyperplane, LatticePoint, indicator
from .graphs import (
    SimpleGraph,
    enumerate_stable_sets,
    induced_subgraph,
    is_connected_bipartite,
    is_perfect,
    is_stable,
    maximal_cliques,
    symmetric_difference,
)
from .posets import Poset, antichains, comparability_graph


__all__ = [
    "stab_vertices",
    "stab_h_description",
    "is_stab_edge",
    "stab_skeleton",
    "is_stab_clique",
    "clique_family",
    "stab_clique_face_system",
    "chain_polytope_vertices",
    "antichain_indicators",
    "verify_stable_polytope",
]


def _guard(G: SimpleGraph, checked: bool) -> None:
    if checked and not is_perfect(G):
        raise NotPerfectError("graph is not perfect")


def _as_stable(G: SimpleGraph, W: Iterable[int]) -> frozenset[int]:
    W = frozenset(W)
    if not is_stable(G, W):
        raise ValueError(f"{sorted(W)} is not a stable set")
    return W


def stab_vertices(G: SimpleGraph) -> list[LatticePoint]:
    return [indicator(W, G.n) for W in enumerate_stable_sets(G)]


def stab_h_description(G: SimpleGraph, *, checked: bool = True) -> list[Hyperplane]:
    """Non-negativity plus one clique inequality per maximal clique."""
    _guard(G, checked)
    n = G.n
    system = [Hyperplane.sparse(n, {i: 1}, 0, GE) for i in range(n)]
    system += [
        Hyperplane.sparse(n, dict.fromkeys(C, 1), 1, LE)
        for C in maximal_cliques(G)
    ]
    return system


def is_stab_edge(G: SimpleGraph, W: Iterable[int], W2: Iterable[int], *,
                 checked: bool = True) -> bool:
    """Whether the symmetric difference induces a connected bipartite graph."""
    _guard(G, checked)
    W, W2 = _as_stable(G, W), _as_stable(G, W2)
    if W == W2:
        raise ValueError("an edge needs two distinct stable sets")
    H, _ = induced_subgraph(G, symmetric_difference(W, W2))
    return is_connected_bipartite(H)


def stab_skeleton(G: SimpleGraph, *, checked: bool = True) -> SkeletonGraph:
    _guard(G, checked)
    sets = enumerate_stable_sets(G)
    edges = frozenset(
        (a, b)
        for a, b in combinations(range(len(sets)), 2)
        if is_stab_edge(G, sets[a], sets[b], checked=False)
    )
    return SkeletonGraph(len(sets), edges, tuple(sets))


def is_stab_clique(G: SimpleGraph, sets: Sequence[Iterable[int]], *,
                   checked: bool = True) -> bool:
    _guard(G, checked)
    sets = [_as_stable(G, W) for W in sets]
    if len(set(sets)) != len(sets):
        raise ValueError("duplicate stable sets")
    return all(is_stab_edge(G, a, b, checked=False) for a, b in combinations(sets, 2))


def clique_family(G: SimpleGraph, sets: Sequence[Iterable[int]]) -> list[frozenset[int]]:
    """Maximal cliques of ``G`` meeting every set in ``sets``, canonically ordered."""
    sets = [frozenset(W) for W in sets]
    return [C for C in maximal_cliques(G) if all(C & W for W in sets)]


def stab_clique_face_system(G: SimpleGraph, sets: Sequence[Iterable[int]], *,
                            checked: bool = True) -> list[Hyperplane]:
    """Equalities cutting the hull of a skeleton clique out of the polytope.

    One clique equality ``sum_{i in K} x_i = 1`` for each maximal clique
    ``K`` meeting every member, and ``x_i = 0`` outside their union.
    """
    sets = [_as_stable(G, W) for W in sets]
    if not sets:
        raise ValueError("empty clique")
    if not is_stab_clique(G, sets, checked=checked):
        raise ValueError("sets do not form a clique of the skeleton")
    n = G.n
    union = frozenset().union(*sets)
    system = [Hyperplane.sparse(n, dict.fromkeys(K, 1), 1) for K in clique_family(G, sets)]
    system += [Hyperplane.sparse(n, {i: 1}, 0) for i in range(n) if i not in union]
    return system


def chain_polytope_vertices(P: Poset) -> list[LatticePoint]:
    return stab_vertices(comparability_graph(P))


def antichain_indicators(P: Poset) -> list[LatticePoint]:
    return [indicator(A, P.d) for A in antichains(P)]


def verify_stable_polytope(G: SimpleGraph, *, oracle: bool = True,
                           checked: bool = True,
                           instance: dict | None = None) -> VerificationReport:
    perfect = is_perfect(G)
    _guard(G, checked)
    sets = enumerate_stable_sets(G)
    skel = stab_skeleton(G, checked=False)

    def face_system(clique: Sequence[int]) -> list[Hyperplane]:
        return stab_clique_face_system(G, [sets[k] for k in clique], checked=False)

    header = instance if instance is not None else {
        "graph": [[u + 1, v + 1] for u, v in G.sorted_edges()],
        "n": G.n,
    }
    return verify_instance(
        stab_vertices(G),
        skel.edges,
        face_system,
        instance={**header, "perfect": perfect},
        labels=sets,
        oracle=oracle,
    )
