import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from recoloring import (
    Graph,
    PreconditionError,
    RecolorSequence,
    RecolorStep,
    degeneracy_order,
    transform_linear,
    verify_sequence,
)
from recoloring.generators import random_degenerate, random_proper_coloring
from recoloring.linear import insert_vertex, neighbor_events

from .conftest import brute_force_distance, coloring

EDGE = Graph.from_edges(2, [(0, 1)])


def test_single_vertex():
    seq = transform_linear(Graph.empty(1), coloring(2, 1), coloring(2, 2))
    assert seq == RecolorSequence.of([(0, 1, 2)])


def test_identity_is_empty():
    g = random_degenerate(12, 3, seed=4)
    a = random_proper_coloring(g, 6, seed=1)
    assert len(transform_linear(g, a, a)) == 0


def test_edge_swap_trace():
    seq = transform_linear(EDGE, coloring(4, 1, 2), coloring(4, 2, 1))
    assert seq == RecolorSequence.of([(0, 1, 3), (1, 2, 1), (0, 3, 2)])
    # length 3 is optimal
    assert brute_force_distance(EDGE, 4, (1, 2), (2, 1)) == 3


def test_insert_vertex_without_events():
    base = RecolorSequence.of([(5, 1, 2)])
    assert insert_vertex(0, base, 1, 1, [], 4, 2, {}) == base
    out = insert_vertex(0, base, 1, 3, [], 4, 2, {})
    assert out == base + RecolorSequence.of([(0, 1, 3)])


def test_insert_vertex_edge_trace():
    base = RecolorSequence.of([(1, 2, 1)])
    events = neighbor_events(base, [1])
    forced = []
    out = insert_vertex(0, base, 1, 2, events, 4, 2, {1: 2}, forced=forced)
    # avoid {2} (neighbor) and {1} (next event target): smallest free is 3
    assert out[0] == RecolorStep(0, 1, 3)
    assert forced == [0]


def test_rejects_too_few_colors():
    g = random_degenerate(10, 3, seed=0)  # 2-degenerate, so d = 3 and 2d = 6
    assert degeneracy_order(g).degeneracy == 2
    a = random_proper_coloring(g, 5, seed=1)
    b = random_proper_coloring(g, 5, seed=2)
    with pytest.raises(PreconditionError, match="k >= 6"):
        transform_linear(g, a, b)


@settings(max_examples=60, deadline=None)
@given(
    st.integers(1, 30),
    st.sampled_from([2, 3, 4]),
    st.integers(0, 3),
    st.integers(0, 2**32),
)
def test_recolor_counts_and_validity(n, d, extra, seed):
    g = random_degenerate(n, d, seed)
    d_eff = degeneracy_order(g).degeneracy + 1
    k = 2 * d_eff + extra
    a = random_proper_coloring(g, k, seed)
    b = random_proper_coloring(g, k, seed + 1)
    seq = transform_linear(g, a, b)
    assert verify_sequence(g, a, seq) == b
    assert max(seq.recolor_counts(n), default=0) <= d_eff
    assert len(seq) <= d_eff * n


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 25), st.sampled_from([2, 3, 4]), st.integers(0, 2**32))
def test_forced_insertions_are_spaced_by_d(n, d, seed):
    """Replays the insertion loop and checks consecutive forced moves are >= d events apart."""
    g = random_degenerate(n, d, seed)
    cert = degeneracy_order(g)
    d_eff = cert.degeneracy + 1
    k = 2 * d_eff
    a = random_proper_coloring(g, k, seed)
    b = random_proper_coloring(g, k, seed + 7)
    seq = RecolorSequence()
    present = set()
    for u in reversed(cert.order):
        nbrs = [w for w in g.neighbors(u) if w in present]
        forced = []
        seq = insert_vertex(
            u, seq, a[u], b[u], neighbor_events(seq, nbrs), k, d_eff, {w: a[w] for w in nbrs}, forced
        )
        assert all(j - i >= d_eff for i, j in zip(forced, forced[1:]))
        assert len(forced) <= d_eff - 1
        present.add(u)
    assert seq == transform_linear(g, a, b)
