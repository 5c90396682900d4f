import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from recoloring import (
    BudgetExceededError,
    Graph,
    InputError,
    RecolorSequence,
    is_frozen,
    transform_linear,
    verify_sequence,
)
from recoloring.generators import random_degenerate, random_proper_coloring
from recoloring.oracle import (
    ReconfigurationSpace,
    find_frozen,
    reconf_stats,
    shortest_transformation,
)

from .conftest import (
    brute_force_colorings,
    brute_force_distance,
    coloring,
    complete_graph,
    graphs,
    path_graph,
)

EDGE = path_graph(2)


def test_edge_with_two_colors():
    stats = reconf_stats(EDGE, 2)
    assert (stats.num_colorings, stats.num_components, stats.num_frozen) == (2, 2, 2)
    assert math.isinf(stats.diameter)
    assert shortest_transformation(EDGE, 2, coloring(2, 1, 2), coloring(2, 2, 1)) == math.inf


def test_triangle_all_frozen():
    stats = reconf_stats(complete_graph(3), 3)
    assert (stats.num_colorings, stats.num_components, stats.num_frozen) == (6, 6, 6)
    assert len(find_frozen(complete_graph(3), 3)) == 6


def test_edge_distance_three():
    assert shortest_transformation(EDGE, 3, coloring(3, 1, 2), coloring(3, 2, 1)) == 3
    assert shortest_transformation(EDGE, 3, coloring(3, 1, 2), coloring(3, 1, 2)) == 0


def test_single_coloring_has_diameter_zero():
    stats = reconf_stats(Graph.empty(1), 1)
    assert stats.num_colorings == 1
    assert stats.diameter == 0


def test_frozen_examples():
    assert find_frozen(path_graph(3), 3) == []
    frozen = find_frozen(complete_graph(4), 4)
    assert len(frozen) == 24
    assert frozen == sorted(frozen, key=lambda c: c.colors)


def test_budget_is_loud():
    with pytest.raises(BudgetExceededError):
        reconf_stats(Graph.empty(8), 4, limit=1000)


def test_exact_diameter_flag():
    path = path_graph(5)
    exact = reconf_stats(path, 3)
    assert exact.num_components == 1 and exact.diameter_exact
    sampled = reconf_stats(path, 3, exact_limit=10)
    assert not sampled.diameter_exact
    assert sampled.diameter <= exact.diameter


def test_threads_match_sequential():
    g = random_degenerate(7, 3, seed=5)
    assert reconf_stats(g, 4, threads=4) == reconf_stats(g, 4, threads=1)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6), st.integers(1, 4))
def test_enumeration_matches_brute_force(g, k):
    space = ReconfigurationSpace(g, k)
    expected = brute_force_colorings(g, k)
    assert [tuple(map(int, row)) for row in space.colorings] == expected
    stats = reconf_stats(g, k)
    assert stats.num_colorings == len(expected)
    # two independent frozen checks agree
    assert stats.num_frozen == sum(is_frozen(g, coloring(k, *c)) for c in expected)
    assert stats.num_frozen <= stats.num_colorings
    if stats.num_colorings:
        assert math.isfinite(stats.diameter) == (stats.num_components == 1)
        assert (stats.diameter == 0) == (stats.num_colorings == 1)


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=5), st.integers(2, 4), st.data())
def test_distance_matches_brute_force_and_is_symmetric(g, k, data):
    cols = brute_force_colorings(g, k)
    if not cols:
        return
    a = data.draw(st.sampled_from(cols))
    b = data.draw(st.sampled_from(cols))
    d = shortest_transformation(g, k, coloring(k, *a), coloring(k, *b))
    expected = brute_force_distance(g, k, a, b)
    assert d == (math.inf if expected is None else expected)
    assert d == shortest_transformation(g, k, coloring(k, *b), coloring(k, *a))


def test_linear_output_is_walk():
    g = random_degenerate(6, 2, seed=3)
    a = random_proper_coloring(g, 4, 1)
    b = random_proper_coloring(g, 4, 2)
    seq = transform_linear(g, a, b)
    space = ReconfigurationSpace(g, 4)
    assert space.is_walk(a, seq)
    assert verify_sequence(g, a, seq) == b
    assert len(seq) >= shortest_transformation(g, 4, a, b)


def test_is_walk_rejects_improper_visit():
    space = ReconfigurationSpace(EDGE, 3)
    assert not space.is_walk(coloring(3, 1, 2), RecolorSequence.of([(0, 1, 2)]))


def test_distance_requires_proper():
    with pytest.raises(InputError):
        shortest_transformation(EDGE, 3, coloring(3, 1, 1), coloring(3, 1, 2))


def test_all_k3_colorings_of_k3_are_permutations():
    rows = {tuple(map(int, r)) for r in ReconfigurationSpace(complete_graph(3), 3).colorings}
    assert rows == set(itertools.permutations((1, 2, 3)))
