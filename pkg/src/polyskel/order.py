"""Order polytopes: vertices, inequalities, skeleton, and faces of skeleton cliques.

The vertices of the order polytope of ``P`` are the indicator vectors of
the ideals (down-sets) of ``P``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .complex import SkeletonGraph, VerificationReport, verify_instance
from .geometry import GE, LE, Hyperplane, LatticePoint, indicator, vertices_on_system
from .posets import Poset, enumerate_ideals, is_connected_in_poset, is_ideal

__all__ = [
    "order_polytope_vertices",
    "order_polytope_h_description",
    "is_order_edge",
    "order_skeleton",
    "is_order_clique",
    "order_clique_face_system",
    "vertices_on_system",
    "verify_order_polytope",
]


def order_polytope_vertices(P: Poset) -> list[LatticePoint]:
    return [indicator(I, P.d) for I in enumerate_ideals(P)]


def order_polytope_h_description(P: Poset) -> list[Hyperplane]:
    """Facet inequalities matching the down-set vertex convention.

    ``x_i <= 1`` for minimal ``p_i``, ``x_i >= 0`` for maximal ``p_i``, and
    ``x_j >= x_i`` for every cover ``p_j < p_i``.
    """
    d = P.d
    system = [Hyperplane.sparse(d, {i: 1}, 1, LE) for i in P.minimal()]
    system += [Hyperplane.sparse(d, {i: 1}, 0, GE) for i in P.maximal()]
    system += [Hyperplane.sparse(d, {j: 1, i: -1}, 0, GE) for j, i in P.covers()]
    return system


def _as_ideal(P: Poset, I: Iterable[int]) -> frozenset[int]:
    I = frozenset(I)
    if not is_ideal(P, I):
        raise ValueError(f"{sorted(I)} is not an ideal")
    return I


def is_order_edge(P: Poset, I: Iterable[int], I2: Iterable[int]) -> bool:
    """Nested ideals whose difference is connected in the Hasse diagram."""
    I, I2 = _as_ideal(P, I), _as_ideal(P, I2)
    if I == I2:
        raise ValueError("an edge needs two distinct ideals")
    if I > I2:
        I, I2 = I2, I
    return I < I2 and is_connected_in_poset(P, I2 - I)


def order_skeleton(P: Poset) -> SkeletonGraph:
    ideals = enumerate_ideals(P)
    edges = frozenset(
        (a, b)
        for a, b in combinations(range(len(ideals)), 2)
        if is_order_edge(P, ideals[a], ideals[b])
    )
    return SkeletonGraph(len(ideals), edges, tuple(ideals))


def is_order_clique(P: Poset,
                    ideals: Sequence[Iterable[int]]) -> list[frozenset[int]] | None:
    """The ideals as an inclusion chain if they form a skeleton clique, else ``None``."""
    chain = [_as_ideal(P, I) for I in ideals]
    if len(set(chain)) != len(chain):
        raise ValueError("duplicate ideals")
    chain.sort(key=len)
    for a, b in combinations(chain, 2):
        if not is_order_edge(P, a, b):
            return None
    return chain


def order_clique_face_system(P: Poset, chain: Sequence[Iterable[int]]) -> list[Hyperplane]:
    """Equalities whose common solutions in the polytope are the hull of ``chain``.

    ``x_i = 1`` on the smallest ideal, ``x_i = 0`` off the largest, and
    ``x_i = x_j`` for each pair inside a difference of consecutive ideals.
    """
    chain = [_as_ideal(P, I) for I in chain]
    if not chain:
        raise ValueError("empty chain")
    if is_order_clique(P, chain) != chain:
        raise ValueError("not a clique chain in increasing order")
    d = P.d
    system = [Hyperplane.sparse(d, {i: 1}, 1) for i in sorted(chain[0])]
    for lo, hi in zip(chain, chain[1:]):
        block = sorted(hi - lo)
        system += [Hyperplane.sparse(d, {i: 1, j: -1}, 0) for i, j in combinations(block, 2)]
    system += [Hyperplane.sparse(d, {i: 1}, 0) for i in range(d) if i not in chain[-1]]
    return system


def verify_order_polytope(P: Poset, *, oracle: bool = True) -> VerificationReport:
    ideals = enumerate_ideals(P)
    skel = order_skeleton(P)

    def face_system(clique: Sequence[int]) -> list[Hyperplane]:
        chain = is_order_clique(P, [ideals[k] for k in clique])
        if chain is None:
            raise AssertionError(f"skeleton clique {clique} is not an inclusion chain with connected differences")
        return order_clique_face_system(P, chain)

    return verify_instance(
        order_polytope_vertices(P),
        skel.edges,
        face_system,
        instance={"poset": [[i + 1, j + 1] for i, j in P.covers()], "d": P.d},
        labels=ideals,
        oracle=oracle,
    )
