"""Recoloring (d-1)-degenerate graphs with at least 2d colors.

Vertices are added back one at a time in reverse degeneracy order. Each new
vertex ``u`` has at most ``d - 1`` neighbors already present, so whenever a
neighbor is about to take ``u``'s color we can move ``u`` to a color that
avoids its neighbors and the next ``d`` colors its neighbors will take.
That keeps every vertex to at most ``d`` recolorings.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from .errors import BoundViolationError, InputError, PreconditionError
from .graph import (
    Coloring,
    Graph,
    RecolorSequence,
    RecolorStep,
    degeneracy_order,
    is_proper,
    verify_sequence,
)

__all__ = ["InsertionEvent", "insert_vertex", "neighbor_events", "transform_linear"]


@dataclass(frozen=True)
class InsertionEvent:
    """A neighbor of the vertex being inserted changes color at ``time_index``."""

    time_index: int
    vertex: int
    target_color: int


def neighbor_events(seq: RecolorSequence, neighbors) -> list[InsertionEvent]:
    neighbors = set(neighbors)
    return [
        InsertionEvent(t, s.vertex, s.to_color)
        for t, s in enumerate(seq)
        if s.vertex in neighbors
    ]


def insert_vertex(
    u: int,
    base_seq: RecolorSequence,
    alpha_u: int,
    beta_u: int,
    events: Sequence[InsertionEvent],
    k: int,
    d: int,
    neighbor_colors: Mapping[int, int],
    forced: list[int] | None = None,
) -> RecolorSequence:
    """Extend ``base_seq`` with recolorings of ``u`` so every step stays proper.

    ``neighbor_colors`` gives the starting colors of ``u``'s neighbors (at most
    ``d - 1`` of them). When a neighbor is about to take ``u``'s current color,
    ``u`` first moves to the smallest color avoiding the current neighbor
    colors and the targets of the next ``d`` events. Event indices of those
    forced moves are appended to ``forced`` when given.
    """
    if len(neighbor_colors) > d - 1:
        raise PreconditionError(f"vertex {u} has {len(neighbor_colors)} neighbors, at most {d - 1} allowed")
    if len(events) > d * (d - 1):
        raise BoundViolationError(
            f"neighbors of {u} change color {len(events)} times, more than d(d-1) = {d * (d - 1)}"
        )
    at_time = {e.time_index: i for i, e in enumerate(events)}
    current = dict(neighbor_colors)
    color = alpha_u
    out: list[RecolorStep] = []
    moves = 0
    for t, step in enumerate(base_seq):
        i = at_time.get(t)
        if i is not None:
            if color == step.to_color:
                blocked = set(current.values())
                blocked.update(e.target_color for e in events[i : i + d])
                choice = next((a for a in range(1, k + 1) if a not in blocked), None)
                if choice is None:
                    raise BoundViolationError(f"no free color for vertex {u} at time {t}")
                out.append(RecolorStep(u, color, choice))
                color = choice
                moves += 1
                if forced is not None:
                    forced.append(i)
            current[step.vertex] = step.to_color
        out.append(step)
    if color != beta_u:
        out.append(RecolorStep(u, color, beta_u))
        moves += 1
    if moves > d:
        raise BoundViolationError(f"vertex {u} recolored {moves} times, more than d = {d}")
    return RecolorSequence(tuple(out))


def transform_linear(
    g: Graph, alpha: Coloring, beta: Coloring, k: int | None = None
) -> RecolorSequence:
    """Transform ``alpha`` into ``beta`` recoloring every vertex at most ``d`` times.

    Here ``d - 1`` is the degeneracy of ``g`` and at least ``2d`` colors are
    needed. The result has length at most ``d * n``.
    """
    k = alpha.k if k is None else k
    if alpha.k != k or beta.k != k:
        raise InputError(f"colorings must both be {k}-colorings (got {alpha.k} and {beta.k})")
    if not is_proper(g, alpha) or not is_proper(g, beta):
        raise InputError("both colorings must be proper")
    cert = degeneracy_order(g)
    d = cert.degeneracy + 1
    if k < 2 * d:
        raise PreconditionError(f"graph is {d - 1}-degenerate: need k >= {2 * d}, got k = {k}")
    seq = RecolorSequence()
    present: set[int] = set()
    for u in reversed(cert.order):
        nbrs = [w for w in g.neighbors(u) if w in present]
        seq = insert_vertex(
            u,
            seq,
            alpha[u],
            beta[u],
            neighbor_events(seq, nbrs),
            k,
            d,
            {w: alpha[w] for w in nbrs},
        )
        present.add(u)
    if verify_sequence(g, alpha, seq) != beta:
        raise BoundViolationError("linear transformation does not end at beta")
    return seq
