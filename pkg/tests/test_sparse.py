import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from recoloring import (
    Graph,
    InputError,
    LevelPartition,
    PreconditionError,
    RecolorSequence,
    build_partition,
    canonicalize,
    eliminate_color,
    is_proper,
    mad,
    recolor_vertex,
    transform_sparse,
    verify_sequence,
)
from recoloring.generators import random_degenerate, random_leveled_graph, random_proper_coloring
from recoloring.sparse import elimination_bound, lex_precedes, sparse_length_bound

from .conftest import brute_force_distance, coloring, path_graph

EDGE = Graph.from_edges(2, [(0, 1)])


def test_isolated_vertex_single_step():
    seq, out = recolor_vertex(Graph.empty(1), LevelPartition((1,), 1), coloring(3, 1), 0)
    assert seq == RecolorSequence.of([(0, 1, 2)])
    assert out == coloring(3, 2)


def test_star_trace():
    # center 0 at level 2; leaves 1 and 2 at level 1, visited in decreasing id
    g = Graph.from_edges(3, [(0, 1), (0, 2)])
    trace = []
    seq, out = recolor_vertex(g, LevelPartition((2, 1, 1), 1), coloring(3, 1, 2, 2), 0, trace)
    assert seq == RecolorSequence.of([(2, 2, 3), (1, 2, 3), (0, 1, 2)])
    assert out == coloring(3, 2, 3, 3)
    assert [f.path for f in trace] == [(0,), (0, 2), (0, 1)]
    assert [f.target_color for f in trace] == [2, 3, 3]


def test_no_conflict_single_step():
    g = path_graph(2)
    seq, _ = recolor_vertex(g, LevelPartition((2, 1), 1), coloring(3, 1, 3), 0)
    assert len(seq) == 1


def test_recolor_vertex_needs_l_plus_2_colors():
    g = path_graph(3)
    with pytest.raises(PreconditionError):
        recolor_vertex(g, LevelPartition((1, 1, 1), 2), coloring(3, 1, 2, 1), 1)


def _leveled_instance(n, t, ell, seed, extra=0):
    g, p = random_leveled_graph(n, t, ell, seed)
    gamma = random_proper_coloring(g, ell + 2 + extra, seed)
    return g, p, gamma


def _count_level_decreasing_paths(g, levels, v, w):
    if v == w:
        return 1
    if levels[w] >= levels[v]:
        return 0
    return sum(
        _count_level_decreasing_paths(g, levels, v, x)
        for x in g.neighbors(w)
        if levels[w] < levels[x] <= levels[v]
    )


@settings(max_examples=80, deadline=None)
@given(
    st.integers(1, 40),
    st.integers(1, 5),
    st.integers(1, 3),
    st.integers(0, 2),
    st.integers(0, 2**32),
    st.data(),
)
def test_recolor_vertex_invariants(n, t, ell, extra, seed, data):
    t = min(t, n)
    g, p, gamma = _leveled_instance(n, t, ell, seed, extra)
    v = data.draw(st.integers(0, n - 1))
    trace = []
    seq, out = recolor_vertex(g, p, gamma, v, trace)
    assert verify_sequence(g, gamma, seq) == out
    assert out[v] != gamma[v]
    lv = p.levels[v]
    for w in range(n):
        if w != v and p.levels[w] >= lv:
            assert out[w] == gamma[w]
    counts = seq.recolor_counts(n)
    for w, c in enumerate(counts):
        if c:
            assert c <= ell ** (lv - p.levels[w])
            # tighter path count: at most l^(i-1) level-decreasing paths from v
            if w != v:
                assert c <= _count_level_decreasing_paths(g, p.levels, v, w)
                assert c <= ell ** (lv - p.levels[w] - 1)
    # frames start on strictly lexicographically decreasing, level-decreasing paths
    for a, b in zip(trace, trace[1:]):
        assert lex_precedes(b.path, a.path, p.levels)
    for f in trace:
        assert f.path[0] == v
        for x, y in zip(f.path, f.path[1:]):
            assert g.has_edge(x, y)
            assert p.levels[x] > p.levels[y]
    assert len(trace) == len(seq)


def test_lex_order():
    levels = (1, 1, 2, 3)
    assert lex_precedes((3, 2), (3,), levels)
    assert not lex_precedes((3,), (3, 2), levels)
    assert lex_precedes((2,), (3,), levels)
    assert lex_precedes((3, 0), (3, 1), levels)
    assert lex_precedes((3,), (), levels)
    assert not lex_precedes((3, 1), (3, 1), levels)


def test_eliminate_absent_color_is_empty():
    g = path_graph(3)
    seq, out = eliminate_color(g, LevelPartition((1, 1, 1), 2), coloring(4, 1, 2, 1), 4)
    assert len(seq) == 0
    assert out == coloring(4, 1, 2, 1)


def test_eliminate_single_vertex():
    seq, out = eliminate_color(Graph.empty(1), LevelPartition((1,), 1), coloring(3, 3), 3)
    assert seq == RecolorSequence.of([(0, 3, 1)])


def test_eliminate_on_two_level_path():
    # path 0-1-2 with the middle on level 2; dead color 3 sits on the middle
    g = path_graph(3)
    p = LevelPartition((1, 2, 1), 1)
    gamma = coloring(3, 1, 3, 2)
    seq, out = eliminate_color(g, p, gamma, 3)
    assert 3 not in out.colors
    assert verify_sequence(g, gamma, seq) == out


def test_eliminate_requires_top_color():
    with pytest.raises(InputError):
        eliminate_color(Graph.empty(1), LevelPartition((1,), 1), coloring(3, 2), 2)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 40), st.integers(1, 5), st.integers(1, 3), st.integers(0, 2**32))
def test_eliminate_color_properties(n, t, ell, seed):
    t = min(t, n)
    g, p, gamma = _leveled_instance(n, t, ell, seed)
    dead = gamma.k
    seq, out = eliminate_color(g, p, gamma, dead)
    assert dead not in out.colors
    assert len(seq) <= elimination_bound(p)
    # once a level is cleaned, nothing at or above it takes the dead color again
    states = seq.replay(gamma)
    cleaned_from = p.t + 1
    for step, state in zip(seq, states[1:]):
        if gamma[step.vertex] == dead:
            cleaned_from = min(cleaned_from, p.levels[step.vertex] + 1)
        for w in range(n):
            if p.levels[w] >= cleaned_from:
                assert state[w] != dead


def test_canonical_edgeless():
    seq, gamma = canonicalize(Graph.empty(3), 1, coloring(2, 2, 1, 2))
    assert gamma == coloring(2, 1, 1, 1)
    assert len(seq) == 2


def test_canonical_p4():
    g = path_graph(4)
    seq, gamma = canonicalize(g, 2, coloring(3, 1, 2, 1, 2))
    # level 2 = {1, 2}; greedy S_2 = {1}, S_1 = {3}; S gets color 3, the rest color 1
    assert gamma == coloring(3, 1, 3, 1, 3)
    assert verify_sequence(g, coloring(3, 1, 2, 1, 2), seq) == gamma


def test_canonical_independent_of_start():
    g = random_degenerate(30, 3, seed=11)
    first = None
    for seed in range(10):
        a = random_proper_coloring(g, 5, seed)
        _, gamma = canonicalize(g, 4, a)
        first = first or gamma
        assert gamma == first


def test_canonical_precondition_carries_witness():
    g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    with pytest.raises(PreconditionError) as info:
        canonicalize(g, 3, coloring(4, 1, 2, 3, 4))
    assert info.value.witness.vertices == (0, 1, 2, 3)


def test_transform_sparse_identity_and_swap():
    a = coloring(3, 1, 2, 1, 2)
    seq = transform_sparse(path_graph(4), 2, a, a)
    assert verify_sequence(path_graph(4), a, seq) == a
    seq = transform_sparse(EDGE, 2, coloring(3, 1, 2), coloring(3, 2, 1))
    assert verify_sequence(EDGE, coloring(3, 1, 2), seq) == coloring(3, 2, 1)
    assert brute_force_distance(EDGE, 3, (1, 2), (2, 1)) is not None


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 30), st.sampled_from([2, 3]), st.integers(0, 1), st.integers(0, 2**32))
def test_transform_sparse_midpoint_and_bound(n, gen_d, extra, seed):
    g = random_degenerate(n, gen_d, seed)
    value = mad(g)
    d = int(value) + 1
    part = build_partition(g, d)
    if not part:
        return
    k = d + 1 + extra
    a = random_proper_coloring(g, k, seed)
    b = random_proper_coloring(g, k, seed + 3)
    seq = transform_sparse(g, d, a, b)
    assert verify_sequence(g, a, seq) == b
    there, gamma = canonicalize(g, d, a)
    assert seq.replay(a)[len(there)] == gamma
    assert is_proper(g, gamma)
    if value > 0:
        assert len(seq) <= sparse_length_bound(n, d, d - value)
