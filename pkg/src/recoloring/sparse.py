"""Recoloring graphs that admit a level partition of small degree.

``recolor_vertex`` changes the color of one vertex by first clearing its
target color off lower-level neighbors, recursively. ``eliminate_color``
applies it level by level to get rid of the top color, and
``canonicalize`` alternates elimination with stable-set extraction until
it reaches a coloring that depends only on the graph. Any two colorings
are then joined through that canonical coloring.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import BoundViolationError, InputError, PreconditionError
from .graph import Coloring, Graph, RecolorSequence, RecolorStep, is_proper, verify_sequence
from .partition import (
    LevelPartition,
    PartitionFailure,
    PartitionSpec,
    build_partition,
    extract_stable_set,
    validate_partition,
)

__all__ = [
    "ProcedureFrame",
    "RecolorBudget",
    "recolor_vertex",
    "eliminate_color",
    "canonicalize",
    "transform_sparse",
    "lex_precedes",
    "sparse_length_bound",
]


@dataclass(frozen=True)
class ProcedureFrame:
    """One activation of the recursive procedure: ``path`` ends at ``current``."""

    path: tuple[int, ...]
    target_color: int

    @property
    def current(self) -> int:
        return self.path[-1]


class RecolorBudget:
    """Per-vertex recoloring counters for one :func:`recolor_vertex` run.

    Vertex ``w`` may be recolored at most ``l ** (L(v) - L(w))`` times, where
    ``v`` is the vertex the run was started on.
    """

    def __init__(self, levels, ell: int, origin: int):
        self.levels = levels
        self.ell = ell
        self.level_of_origin = levels[origin]
        self.per_vertex_counts: dict[int, int] = {}

    def limit(self, w: int) -> int:
        return self.ell ** (self.level_of_origin - self.levels[w])

    def charge(self, w: int) -> None:
        count = self.per_vertex_counts.get(w, 0) + 1
        if count > self.limit(w):
            raise BoundViolationError(
                f"vertex {w} recolored {count} times, budget is {self.limit(w)}"
            )
        self.per_vertex_counts[w] = count


def lex_precedes(p1, p2, levels) -> bool:
    """Strict lexicographic path order: first vertices compared by ``(level, id)``,
    and a path precedes each of its proper prefixes."""
    for a, b in zip(p1, p2):
        ka, kb = (levels[a], a), (levels[b], b)
        if ka != kb:
            return ka < kb
    return len(p1) > len(p2)


def _target_color(g, levels, colors, u, k):
    used = {colors[u]}
    used.update(colors[w] for w in g.neighbors(u) if levels[w] >= levels[u])
    for a in range(1, k + 1):
        if a not in used:
            return a
    raise BoundViolationError(f"no target color for vertex {u}")


def _lower_neighbors(g, levels, u):
    # visited from the largest (level, id) down
    lower = [w for w in g.neighbors(u) if levels[w] < levels[u]]
    lower.sort(key=lambda w: (levels[w], w), reverse=True)
    return lower


def _recolor_in_place(g, levels, ell, colors, k, v, steps, trace=None):
    """Run the recursive procedure from ``v`` on the mutable ``colors`` list.

    The recursion is unrolled onto an explicit stack; its depth is bounded by
    the number of levels.
    """
    budget = RecolorBudget(levels, ell, v)
    frame = ProcedureFrame((v,), _target_color(g, levels, colors, v, k))
    if trace is not None:
        trace.append(frame)
    stack = [(frame, _lower_neighbors(g, levels, v), 0)]
    while stack:
        frame, lower, i = stack[-1]
        a = frame.target_color
        while i < len(lower) and colors[lower[i]] != a:
            i += 1
        if i < len(lower):
            w = lower[i]
            stack[-1] = (frame, lower, i + 1)
            child = ProcedureFrame(frame.path + (w,), _target_color(g, levels, colors, w, k))
            if trace is not None:
                trace.append(child)
            stack.append((child, _lower_neighbors(g, levels, w), 0))
            continue
        stack.pop()
        u = frame.current
        steps.append(RecolorStep(u, colors[u], a))
        colors[u] = a
        budget.charge(u)
    return budget


def _check_sparse_inputs(g: Graph, p: LevelPartition, gamma: Coloring) -> None:
    if not is_proper(g, gamma):
        raise InputError("coloring is not proper")
    if not validate_partition(g, p):
        raise InputError(f"partition does not have degree {p.degree_bound} on this graph")
    if gamma.k < p.degree_bound + 2:
        raise PreconditionError(
            f"need at least l + 2 = {p.degree_bound + 2} colors, got {gamma.k}"
        )


def recolor_vertex(
    g: Graph,
    p: LevelPartition,
    gamma: Coloring,
    v: int,
    trace: list[ProcedureFrame] | None = None,
) -> tuple[RecolorSequence, Coloring]:
    """Change the color of ``v`` without touching any other vertex at level ``>= L(v)``.

    Every vertex ``w`` is recolored at most ``l ** (L(v) - L(w))`` times.
    Pass a list as ``trace`` to collect the procedure frames in start order.
    """
    _check_sparse_inputs(g, p, gamma)
    if not 0 <= v < g.n:
        raise InputError(f"vertex {v} not in graph")
    colors = list(gamma.colors)
    steps: list[RecolorStep] = []
    _recolor_in_place(g, p.levels, p.degree_bound, colors, gamma.k, v, steps, trace)
    return RecolorSequence(tuple(steps)), Coloring(gamma.k, tuple(colors))


def elimination_bound(p: LevelPartition) -> int:
    """``l**t * n**2`` (``l`` read as at least 1, the bound being vacuous at 0)."""
    return max(p.degree_bound, 1) ** p.t * p.n**2


def eliminate_color(
    g: Graph, p: LevelPartition, gamma: Coloring, dead_color: int
) -> tuple[RecolorSequence, Coloring]:
    """Recolor until ``dead_color`` (the top color ``gamma.k``) is unused.

    Levels are cleaned from ``t`` down to 1; cleaning level ``i`` only touches
    lower levels, so a cleaned level never sees the color again.
    """
    _check_sparse_inputs(g, p, gamma)
    if dead_color != gamma.k:
        raise InputError(f"only the top color {gamma.k} can be eliminated, got {dead_color}")
    colors = list(gamma.colors)
    steps: list[RecolorStep] = []
    for part in reversed(p.parts()):
        for v in part:
            if colors[v] == dead_color:
                _recolor_in_place(g, p.levels, p.degree_bound, colors, gamma.k, v, steps)
    if dead_color in colors:
        raise BoundViolationError("dead color survived elimination")
    if len(steps) > elimination_bound(p):
        raise BoundViolationError(f"{len(steps)} steps exceed l^t n^2 = {elimination_bound(p)}")
    return RecolorSequence(tuple(steps)), Coloring(gamma.k, tuple(colors))


def canonicalize(g: Graph, d: int, alpha: Coloring) -> tuple[RecolorSequence, Coloring]:
    """Drive ``alpha`` to a canonical coloring that depends only on ``g`` and ``d``.

    With ``k = alpha.k >= d + 1`` and a degree-``(d-1)`` partition from
    :func:`build_partition`, for ``l = d-1, ..., 1``: eliminate the top active
    color ``k - (d-1) + l`` on the current subgraph, give that color to the
    extracted stable set, and continue on the rest with degree ``l - 1``.
    What remains is edgeless and is set to color 1.
    """
    k = alpha.k
    if d < 1:
        raise InputError(f"d must be at least 1, got {d}")
    if k < d + 1:
        raise PreconditionError(f"need k >= d + 1 = {d + 1}, got {k}")
    if not is_proper(g, alpha):
        raise InputError("coloring is not proper")
    part = build_partition(g, d)
    if isinstance(part, PartitionFailure):
        raise PreconditionError(
            f"no partition of degree {d - 1}: residual subgraph on {len(part.vertices)} "
            f"vertices has minimum degree >= {d}",
            witness=part,
        )
    colors = list(alpha.colors)
    steps: list[RecolorStep] = []
    alive = tuple(range(g.n))
    sub = g
    for ell in range(d - 1, 0, -1):
        active = k - (d - 1) + ell
        local = Coloring(active, tuple(colors[v] for v in alive))
        elim, local = eliminate_color(sub, part, local, active)
        steps.extend(elim.relabel(alive))
        for i, v in enumerate(alive):
            colors[v] = local[i]
        split = extract_stable_set(sub, part)
        for i in sorted(split.stable_set):
            v = alive[i]
            steps.append(RecolorStep(v, colors[v], active))
            colors[v] = active
        alive = tuple(alive[i] for i in split.remaining)
        sub, part = split.subgraph, split.reduced_partition
    if sub.m:
        raise BoundViolationError("residual graph should be edgeless")
    for v in alive:
        if colors[v] != 1:
            steps.append(RecolorStep(v, colors[v], 1))
            colors[v] = 1
    seq = RecolorSequence(tuple(steps))
    gamma_star = verify_sequence(g, alpha, seq)
    return seq, gamma_star


def transform_sparse(g: Graph, d: int, alpha: Coloring, beta: Coloring) -> RecolorSequence:
    """Transform ``alpha`` into ``beta`` through the canonical coloring."""
    if alpha.k != beta.k:
        raise InputError(f"colorings use different k ({alpha.k} and {beta.k})")
    there, mid = canonicalize(g, d, alpha)
    back, mid_beta = canonicalize(g, d, beta)
    if mid != mid_beta:
        raise BoundViolationError("canonical coloring depends on the start coloring")
    seq = there + back.reversed()
    if verify_sequence(g, alpha, seq) != beta:
        raise BoundViolationError("sparse transformation does not end at beta")
    return seq


def sparse_length_bound(n: int, d: int, epsilon) -> float:
    """``2 (d (n^c + n) + n)`` with ``c = 1/log_d(d/(d - epsilon)) + 2``."""
    c = PartitionSpec(d, Fraction(epsilon)).c
    try:
        power = math.pow(n, c)
    except OverflowError:
        return math.inf
    return 2 * (d * (power + n) + n)
