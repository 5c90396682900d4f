"""Witness graphs and seeded random test families.

Grid vertex ``(i, j)`` with ``1 <= i, j <= 2m`` has id ``(i - 1) * 2m + (j - 1)``;
see :func:`grid_vertex`.

Icosahedron labeling: 0 is the top apex, 1..5 the upper ring, 6..10 the
lower ring and 11 the bottom apex. Upper-ring vertex ``i`` is adjacent to
lower-ring vertices ``i + 5`` and ``i % 5 + 6``.
"""

from __future__ import annotations

import numpy as np

from .errors import InputError
from .graph import Coloring, Graph, degeneracy_order
from .partition import LevelPartition

__all__ = [
    "icosahedron",
    "triangulated_grid",
    "square_grid",
    "grid_vertex",
    "random_degenerate",
    "random_proper_coloring",
    "random_leveled_graph",
]


def _rng(seed: int) -> np.random.Generator:
    if not 0 <= seed < 2**64:
        raise InputError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return np.random.default_rng(seed)


def icosahedron() -> Graph:
    edges = []
    for i in range(1, 6):
        nxt = i % 5 + 1
        edges += [(0, i), (i, nxt), (i + 5, nxt + 5), (11, i + 5)]
        edges += [(i, i + 5), (i, nxt + 5)]
    return Graph.from_edges(12, edges)


def grid_vertex(m: int, i: int, j: int) -> int:
    """Id of grid vertex ``(i, j)``, both coordinates 1-based in ``1..2m``."""
    side = 2 * m
    if not (1 <= i <= side and 1 <= j <= side):
        raise InputError(f"({i}, {j}) is outside the {side}x{side} grid")
    return (i - 1) * side + (j - 1)


def _grid_edges(m: int, diagonal: bool) -> list[tuple[int, int]]:
    if m < 1:
        raise InputError(f"m must be at least 1, got {m}")
    side = 2 * m
    edges = []
    for i in range(1, side + 1):
        for j in range(1, side + 1):
            v = grid_vertex(m, i, j)
            if i < side:
                edges.append((v, grid_vertex(m, i + 1, j)))
            if j < side:
                edges.append((v, grid_vertex(m, i, j + 1)))
            # (i+1, j+1) ~ (i, j)
            if diagonal and i < side and j < side:
                edges.append((v, grid_vertex(m, i + 1, j + 1)))
    return edges


def triangulated_grid(m: int) -> Graph:
    """``2m x 2m`` grid plus the diagonal ``(i+1, j+1) ~ (i, j)`` in every cell."""
    return Graph.from_edges(4 * m * m, _grid_edges(m, diagonal=True))


def square_grid(m: int) -> Graph:
    """Plain ``2m x 2m`` grid graph."""
    return Graph.from_edges(4 * m * m, _grid_edges(m, diagonal=False))


def random_degenerate(n: int, d: int, seed: int) -> Graph:
    """Each new vertex joins ``min(d - 1, #earlier)`` uniformly chosen earlier ones."""
    if n < 1 or d < 1:
        raise InputError("need n >= 1 and d >= 1")
    rng = _rng(seed)
    edges = []
    for v in range(1, n):
        r = min(d - 1, v)
        for w in rng.choice(v, size=r, replace=False):
            edges.append((int(w), v))
    return Graph.from_edges(n, edges)


def random_proper_coloring(g: Graph, k: int, seed: int) -> Coloring:
    """Greedy along the reversed degeneracy order, random among the free colors."""
    cert = degeneracy_order(g)
    if k < cert.degeneracy + 1:
        raise InputError(f"greedy coloring needs k >= {cert.degeneracy + 1}, got {k}")
    rng = _rng(seed)
    colors = [0] * g.n
    for v in reversed(cert.order):
        used = {colors[w] for w in g.neighbors(v)}
        free = [c for c in range(1, k + 1) if c not in used]
        colors[v] = int(free[rng.integers(len(free))])
    return Coloring(k, tuple(colors))


def random_leveled_graph(n: int, t: int, ell: int, seed: int) -> tuple[Graph, LevelPartition]:
    """Random graph with a planted ``t``-level partition of degree ``ell``.

    Every vertex tries to take up to ``ell`` neighbors among vertices at its
    own level or above; a same-level edge is only added if both endpoints
    still have room.
    """
    if n < t or t < 1 or ell < 0:
        raise InputError("need n >= t >= 1 and ell >= 0")
    rng = _rng(seed)
    levels = np.concatenate([np.arange(1, t + 1), rng.integers(1, t + 1, size=n - t)])
    rng.shuffle(levels)
    levels = [int(x) for x in levels]
    up = [0] * n
    edges: set[tuple[int, int]] = set()
    for u in rng.permutation(n):
        u = int(u)
        want = int(rng.integers(0, ell + 1))
        higher = [w for w in range(n) if w != u and levels[w] >= levels[u]]
        for w in rng.permutation(higher) if higher else ():
            w = int(w)
            if up[u] >= want:
                break
            edge = (min(u, w), max(u, w))
            if edge in edges:
                continue
            if levels[w] == levels[u] and up[w] >= ell:
                continue
            edges.add(edge)
            up[u] += 1
            if levels[w] == levels[u]:
                up[w] += 1
    return Graph.from_edges(n, edges), LevelPartition(tuple(levels), ell)
