import itertools
import random

import pytest

from polyskel.errors import ParseError
from polyskel.graphs import enumerate_stable_sets, is_perfect
from polyskel.posets import (
    Poset,
    all_posets,
    antichains,
    comparability_graph,
    enumerate_ideals,
    format_poset,
    hasse_edges,
    is_connected_in_poset,
    is_ideal,
    parse_poset,
    random_poset,
)

from conftest import brute_force_ideals, brute_force_posets


def test_ideals_of_chain():
    assert enumerate_ideals(Poset.chain(3)) == [
        frozenset(), frozenset({0}), frozenset({0, 1}), frozenset({0, 1, 2})
    ]


def test_ideals_of_antichain():
    ideals = enumerate_ideals(Poset.antichain(3))
    assert len(ideals) == 8
    assert set(ideals) == {frozenset(s) for k in range(4) for s in itertools.combinations(range(3), k)}


def test_ideals_of_vposet(vposet):
    expected = brute_force_ideals(vposet)
    assert sorted(expected, key=lambda s: (len(s), sorted(s))) == enumerate_ideals(vposet)
    assert enumerate_ideals(vposet) == [
        frozenset(), frozenset({0}), frozenset({1}), frozenset({0, 1}), frozenset({0, 1, 2})
    ]


def test_is_ideal(vposet):
    assert not is_ideal(Poset.chain(3), {1})
    assert is_ideal(Poset.chain(3), set())
    assert is_ideal(vposet, {0, 1})
    assert not is_ideal(vposet, {2})
    with pytest.raises(IndexError):
        is_ideal(vposet, {3})


def test_hasse_edges(vposet, diamond):
    assert hasse_edges(Poset.chain(3)) == [(0, 1), (1, 2)]
    assert hasse_edges(Poset.antichain(3)) == []
    assert hasse_edges(diamond) == [(0, 1), (0, 2), (1, 3), (2, 3)]
    assert (0, 3) in diamond.relations and (0, 3) not in hasse_edges(diamond)


def test_connected_in_poset(vposet):
    assert not is_connected_in_poset(vposet, {0, 1})
    assert is_connected_in_poset(vposet, {0, 1, 2})
    assert is_connected_in_poset(vposet, {1})
    with pytest.raises(ValueError):
        is_connected_in_poset(vposet, set())


def test_comparability_graph(vposet):
    assert comparability_graph(Poset.antichain(3)).edges == frozenset()
    assert comparability_graph(Poset.chain(4)).edges == frozenset(itertools.combinations(range(4), 2))
    assert comparability_graph(vposet).edges == {(0, 2), (1, 2)}


def test_antichains(vposet):
    assert antichains(Poset.chain(3)) == [frozenset(), frozenset({0}), frozenset({1}), frozenset({2})]
    assert len(antichains(Poset.antichain(4))) == 16
    assert antichains(vposet) == [
        frozenset(), frozenset({0}), frozenset({1}), frozenset({2}), frozenset({0, 1})
    ]


def test_constructor_rejects_cycles_and_loops():
    with pytest.raises(ValueError):
        Poset(3, frozenset({(0, 1), (1, 2), (2, 0)}))
    with pytest.raises(ValueError):
        Poset(2, frozenset({(1, 1)}))
    with pytest.raises(ValueError):
        Poset(2, frozenset({(0, 2)}))


def test_closure_and_covers_round_trip(diamond):
    assert diamond.relations == {(0, 1), (0, 2), (1, 3), (2, 3), (0, 3)}
    assert Poset(4, frozenset(diamond.covers())) == diamond


@pytest.mark.parametrize("d", range(6))
def test_all_posets_matches_brute_force(d):
    generated = [P.relations for P in all_posets(d)]
    assert len(generated) == len(set(generated))
    assert set(generated) == set(brute_force_posets(d))


def test_labeled_poset_counts():
    # brute-force counts for d = 0..5 come from test_all_posets_matches_brute_force
    assert [sum(1 for _ in all_posets(d)) for d in range(6)] == [1, 1, 3, 19, 219, 4231]


@pytest.mark.parametrize("d", range(1, 6))
def test_ideal_lattice_properties(d):
    for P in all_posets(d):
        ideals = enumerate_ideals(P)
        assert set(ideals) == set(brute_force_ideals(P))
        assert ideals[0] == frozenset() and ideals[-1] == frozenset(range(d))
        family = set(ideals)
        for a, b in itertools.combinations(ideals, 2):
            assert a | b in family and a & b in family
        # differences of nested ideals are convex
        for lo, hi in itertools.combinations(ideals, 2):
            if lo < hi:
                diff = hi - lo
                for x, z in itertools.permutations(diff, 2):
                    for y in range(d):
                        if P.less(x, y) and P.less(y, z):
                            assert y in diff


@pytest.mark.parametrize("d", range(1, 6))
def test_antichains_are_stable_sets_of_comparability_graph(d):
    for P in all_posets(d):
        assert antichains(P) == enumerate_stable_sets(comparability_graph(P))


def test_comparability_graphs_are_perfect():
    rng = random.Random(2024)
    for _ in range(1000):
        P = random_poset(rng.randint(1, 6), rng, rng.uniform(0.1, 0.9))
        assert is_perfect(comparability_graph(P))


def test_parse_format_round_trip(diamond):
    text = format_poset(diamond)
    assert text == "poset 4\n1 2\n1 3\n2 4\n3 4\n"
    assert parse_poset(text) == diamond


def test_parse_comments_and_blank_lines():
    P = parse_poset("# V poset\nposet 3\n\n1 3  # a < c\n2 3\n")
    assert P.covers() == [(0, 2), (1, 2)]


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("poset 3\n1 2\n2 3\n3 1\n", 4),
        ("poset 2\n1 2\n1 2\n", 3),
        ("poset 2\n1 1\n", 2),
        ("poset 2\n1 3\n", 2),
        ("graph 2\n", 1),
        ("poset 2\n1 x\n", 2),
        ("poset 2\n1 2 3\n", 2),
        ("", 1),
    ],
)
def test_parse_errors_carry_line_numbers(text, lineno):
    with pytest.raises(ParseError) as info:
        parse_poset(text)
    assert info.value.lineno == lineno


def test_random_poset_is_deterministic():
    a = random_poset(6, random.Random(7))
    b = random_poset(6, random.Random(7))
    assert a == b
