import itertools
import random

import pytest

from polyskel.errors import NotPerfectError
from polyskel.geometry import Hyperplane, vertices_on_system, zero_one_points
from polyskel.graphs import SimpleGraph, all_graphs, enumerate_stable_sets, is_perfect
from polyskel.oracle import brute_force_skeleton
from polyskel.posets import Poset, all_posets, antichains, comparability_graph
from polyskel.stable import (
    chain_polytope_vertices,
    is_stab_clique,
    is_stab_edge,
    stab_clique_face_system,
    stab_h_description,
    stab_skeleton,
    stab_vertices,
    verify_stable_polytope,
)
from polyskel.sweep import sample_comparability_graphs

EDGE = SimpleGraph(2, frozenset({(0, 1)}))


def brute_stable_indicators(G):
    return {x for x in zero_one_points(G.n)
            if not any(x[u] and x[v] for u, v in G.edges)}


def test_vertices_examples(path3):
    assert stab_vertices(EDGE) == [(0, 0), (1, 0), (0, 1)]
    assert set(stab_vertices(SimpleGraph(2))) == {(0, 0), (1, 0), (0, 1), (1, 1)}
    V = stab_vertices(path3)
    assert len(V) == 5 and (1, 0, 1) in V


def test_h_description_examples(path3):
    assert set(stab_h_description(EDGE)) == {
        Hyperplane((1, 0), 0, ">="), Hyperplane((0, 1), 0, ">="), Hyperplane((1, 1), 1, "<="),
    }
    tri = stab_h_description(SimpleGraph.complete(3))
    assert Hyperplane((1, 1, 1), 1, "<=") in tri and len(tri) == 4
    assert set(stab_h_description(path3)) == {
        Hyperplane((1, 0, 0), 0, ">="), Hyperplane((0, 1, 0), 0, ">="), Hyperplane((0, 0, 1), 0, ">="),
        Hyperplane((1, 1, 0), 1, "<="), Hyperplane((0, 1, 1), 1, "<="),
    }


@pytest.mark.parametrize("n", range(1, 6))
def test_h_description_zero_one_exact(n):
    # the 0/1 statement holds for every graph, so the guard is bypassed
    for G in all_graphs(n):
        system = stab_h_description(G, checked=False)
        sols = {x for x in zero_one_points(n) if all(h.satisfied_by(x) for h in system)}
        assert sols == brute_stable_indicators(G) == set(stab_vertices(G))


def test_edge_examples(path3):
    assert is_stab_edge(path3, set(), {1})
    assert not is_stab_edge(path3, {0}, {2})
    assert is_stab_edge(path3, {1}, {0, 2})
    with pytest.raises(ValueError):
        is_stab_edge(path3, {0}, {0})
    with pytest.raises(ValueError):
        is_stab_edge(path3, {0, 1}, {2})


def test_skeleton_examples(path3):
    assert stab_skeleton(EDGE).edges == {(0, 1), (0, 2), (1, 2)}
    assert len(stab_skeleton(SimpleGraph(2)).edges) == 4
    skel = stab_skeleton(path3)
    sets = enumerate_stable_sets(path3)
    missing = {(sets[a], sets[b]) for a, b in itertools.combinations(range(5), 2)
               if (a, b) not in skel.edges}
    assert missing == {(frozenset({0}), frozenset({2})), (frozenset(), frozenset({0, 2}))}
    assert skel.edges == brute_force_skeleton(stab_vertices(path3)).edges


def test_clique_examples(path3):
    assert is_stab_clique(path3, [set(), {1}])
    assert not is_stab_clique(path3, [set(), {1}, {0, 2}])
    assert not is_stab_clique(path3, [set(), {0}, {0, 2}])
    with pytest.raises(ValueError):
        is_stab_clique(path3, [{0}, {0}])


def test_face_system_examples(path3):
    V = stab_vertices(EDGE)
    system = stab_clique_face_system(EDGE, [{0}, {1}])
    assert system == [Hyperplane((1, 1), 1)]
    assert vertices_on_system(V, system) == [1, 2]

    system = stab_clique_face_system(path3, [set(), {1}])
    assert system == [Hyperplane((1, 0, 0), 0), Hyperplane((0, 0, 1), 0)]
    V = stab_vertices(path3)
    assert [V[k] for k in vertices_on_system(V, system)] == [(0, 0, 0), (0, 1, 0)]

    with pytest.raises(ValueError):
        stab_clique_face_system(path3, [{0}, {2}])


@pytest.mark.parametrize("n", range(1, 5))
def test_single_stable_set_is_isolated(n):
    for G in all_graphs(n):
        if not is_perfect(G):
            continue
        V = stab_vertices(G)
        for k, W in enumerate(enumerate_stable_sets(G)):
            assert vertices_on_system(V, stab_clique_face_system(G, [W])) == [k]


def test_guard_rejects_imperfect_graphs():
    C5 = SimpleGraph.cycle(5)
    with pytest.raises(NotPerfectError):
        stab_h_description(C5)
    with pytest.raises(NotPerfectError):
        is_stab_edge(C5, set(), {0})
    with pytest.raises(NotPerfectError):
        stab_skeleton(C5)
    with pytest.raises(NotPerfectError):
        verify_stable_polytope(C5)


def test_c5_experiment_is_reported():
    report = verify_stable_polytope(SimpleGraph.cycle(5), checked=False)
    assert report.instance["perfect"] is False
    # whatever happens is recorded; the pipeline itself must complete
    assert report.skeleton_agrees is not None and report.complex_equal is not None
    print("C5:", {k: v for k, v in report.to_dict().items()
                  if k in ("skeleton_agrees", "constructions_agree", "cliques_are_faces",
                           "complex_equal", "counterexample")})


@pytest.mark.parametrize("n", range(1, 5))
def test_perfect_graphs_verified(n):
    for G in all_graphs(n):
        if is_perfect(G):
            report = verify_stable_polytope(G)
            assert report.all_faces, report.counterexample


def test_random_comparability_graphs():
    rng = random.Random(17)
    for n in (6, 7):
        for G in sample_comparability_graphs(n, 10, rng):
            assert verify_stable_polytope(G).all_faces


@pytest.mark.parametrize("d", range(0, 6))
def test_chain_polytope_is_antichain_hull(d):
    for P in all_posets(d):
        V = chain_polytope_vertices(P)
        assert V == [tuple(int(i in A) for i in range(d)) for A in antichains(P)]
        assert is_perfect(comparability_graph(P))


def test_chain_polytope_examples(vposet):
    assert chain_polytope_vertices(Poset.chain(2)) == [(0, 0), (1, 0), (0, 1)]
    assert set(chain_polytope_vertices(Poset.antichain(2))) == {(0, 0), (1, 0), (0, 1), (1, 1)}
    assert len(chain_polytope_vertices(vposet)) == 5
