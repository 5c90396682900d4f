"""Exhaustive ground truth on small instances.

All proper ``k``-colorings are enumerated and stored as base-``k`` integer
codes (vertex 0 most significant, so numeric order is lexicographic order).
Two colorings are adjacent in the recoloring graph when they differ on one
vertex; neighbors are found by adding ``(c' - c) * k**(n-1-v)`` to a code
and looking it up.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, shortest_path

from .errors import BudgetExceededError, InputError
from .graph import Coloring, Graph, RecolorSequence, is_proper

__all__ = [
    "DEFAULT_BUDGET",
    "EXACT_DIAMETER_LIMIT",
    "ReconfGraphStats",
    "ReconfigurationSpace",
    "reconf_stats",
    "shortest_transformation",
    "find_frozen",
]

DEFAULT_BUDGET = 10**7
EXACT_DIAMETER_LIMIT = 20_000


@dataclass(frozen=True)
class ReconfGraphStats:
    num_colorings: int
    num_components: int
    diameter: float  # math.inf when disconnected
    num_frozen: int
    diameter_exact: bool = True

    def summary(self) -> str:
        diam = "inf" if math.isinf(self.diameter) else str(int(self.diameter))
        if not self.diameter_exact:
            diam = f">={diam}"
        return (
            f"colorings={self.num_colorings} components={self.num_components} "
            f"diameter={diam} frozen={self.num_frozen}"
        )


class ReconfigurationSpace:
    """The recoloring graph ``C_k(G)`` of a small graph, built eagerly.

    ``budget`` caps the number of partial colorings held at any stage of the
    enumeration; exceeding it raises :class:`BudgetExceededError`.
    """

    def __init__(self, g: Graph, k: int, budget: int = DEFAULT_BUDGET):
        if not 1 <= k <= 62:
            raise InputError(f"k must lie in 1..62, got {k}")
        if g.n * math.log2(max(k, 2)) > 62:
            raise BudgetExceededError(f"{k}^{g.n} colorings cannot be encoded in 63 bits")
        self.g = g
        self.k = k
        self.budget = budget
        self.place = k ** np.arange(g.n - 1, -1, -1, dtype=np.int64)
        colorings = self._enumerate()
        codes = (colorings.astype(np.int64) - 1) @ self.place
        order = np.argsort(codes, kind="stable")
        self.colorings = colorings[order]
        self.codes = codes[order]

    def _enumerate(self) -> np.ndarray:
        g, k = self.g, self.k
        partial = np.zeros((1, 0), dtype=np.int8)
        for v in range(g.n):
            earlier = [w for w in g.neighbors(v) if w < v]
            blocks = []
            for c in range(1, k + 1):
                ok = np.ones(len(partial), dtype=bool)
                for w in earlier:
                    ok &= partial[:, w] != c
                kept = partial[ok]
                blocks.append(np.hstack([kept, np.full((len(kept), 1), c, dtype=np.int8)]))
            total = sum(len(b) for b in blocks)
            if total > self.budget:
                raise BudgetExceededError(
                    f"more than {self.budget} partial colorings after {v + 1} vertices"
                )
            partial = np.vstack(blocks)
        return partial

    def __len__(self) -> int:
        return len(self.codes)

    def index_of(self, c: Coloring) -> int:
        """Position of ``c`` among the proper colorings; ``KeyError`` if improper."""
        if len(c) != self.g.n:
            raise InputError("coloring size does not match graph")
        code = int(np.dot(np.asarray(c.colors, dtype=np.int64) - 1, self.place))
        i = int(np.searchsorted(self.codes, code))
        if i == len(self.codes) or self.codes[i] != code:
            raise KeyError(c)
        return i

    def coloring(self, i: int) -> Coloring:
        return Coloring(self.k, tuple(int(x) for x in self.colorings[i]))

    @cached_property
    def adjacency(self) -> csr_matrix:
        rows, cols = [], []
        n_states = len(self.codes)
        for v in range(self.g.n):
            current = self.colorings[:, v].astype(np.int64)
            for c in range(1, self.k + 1):
                movable = np.nonzero(current != c)[0]
                target = self.codes[movable] + (c - current[movable]) * self.place[v]
                j = np.searchsorted(self.codes, target)
                j_clip = np.minimum(j, n_states - 1)
                hit = self.codes[j_clip] == target
                rows.append(movable[hit])
                cols.append(j_clip[hit])
        rows = np.concatenate(rows) if rows else np.zeros(0, dtype=np.int64)
        cols = np.concatenate(cols) if cols else np.zeros(0, dtype=np.int64)
        data = np.ones(len(rows), dtype=np.int8)
        return csr_matrix((data, (rows, cols)), shape=(n_states, n_states))

    def degrees(self) -> np.ndarray:
        return np.diff(self.adjacency.indptr)

    def components(self) -> tuple[int, np.ndarray]:
        return connected_components(self.adjacency, directed=False)

    def distances_from(self, sources) -> np.ndarray:
        return shortest_path(self.adjacency, unweighted=True, indices=sources, directed=False)

    def eccentricity_max(self, sources, threads: int = 1, chunk: int = 256) -> float:
        sources = np.asarray(sources)
        batches = [sources[i : i + chunk] for i in range(0, len(sources), chunk)]

        def worst(batch):
            return float(self.distances_from(batch).max()) if len(batch) else 0.0

        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                results = list(pool.map(worst, batches))
        else:
            results = [worst(b) for b in batches]
        return max(results, default=0.0)

    def is_walk(self, start: Coloring, seq: RecolorSequence) -> bool:
        """True iff replaying ``seq`` from ``start`` only visits vertices of ``C_k(G)``
        joined by edges of ``C_k(G)``."""
        adj = self.adjacency
        try:
            prev = self.index_of(start)
            for c in seq.replay(start)[1:]:
                cur = self.index_of(c)
                if adj[prev, cur] == 0:
                    return False
                prev = cur
        except KeyError:
            return False
        return True


def _frozen_mask(g: Graph, k: int, colorings: np.ndarray) -> np.ndarray:
    """Rows where every vertex sees all ``k - 1`` other colors, via color bitmasks."""
    full = (1 << (k + 1)) - 2
    frozen = np.ones(len(colorings), dtype=bool)
    bits = np.left_shift(np.int64(1), colorings.astype(np.int64))
    for v in range(g.n):
        seen = bits[:, v].copy()
        for w in g.neighbors(v):
            seen |= bits[:, w]
        frozen &= seen == full
    return frozen


def reconf_stats(
    g: Graph,
    k: int,
    limit: int = DEFAULT_BUDGET,
    threads: int = 1,
    exact_limit: int = EXACT_DIAMETER_LIMIT,
    samples: int = 8,
) -> ReconfGraphStats:
    """Summary of ``C_k(g)``: size, components, diameter and frozen colorings.

    The diameter is exact when the space has at most ``exact_limit`` colorings
    (or is disconnected, giving infinity); otherwise a double-sweep lower
    bound from ``samples`` start points is reported with ``diameter_exact``
    false.
    """
    space = ReconfigurationSpace(g, k, limit)
    n_states = len(space)
    if n_states == 0:
        return ReconfGraphStats(0, 0, math.inf, 0)
    num_frozen = int(np.count_nonzero(space.degrees() == 0))
    num_components, _ = space.components()
    if num_components > 1:
        return ReconfGraphStats(n_states, num_components, math.inf, num_frozen)
    if n_states <= exact_limit:
        diameter = space.eccentricity_max(np.arange(n_states), threads=threads)
        return ReconfGraphStats(n_states, 1, int(diameter), num_frozen)
    rng = np.random.default_rng(0)
    best = 0.0
    for s in rng.choice(n_states, size=min(samples, n_states), replace=False):
        dist = space.distances_from([int(s)])[0]
        far = int(np.argmax(dist))
        best = max(best, float(dist[far]), float(space.distances_from([far])[0].max()))
    return ReconfGraphStats(n_states, 1, int(best), num_frozen, diameter_exact=False)


def shortest_transformation(
    g: Graph, k: int, alpha: Coloring, beta: Coloring, limit: int = DEFAULT_BUDGET
) -> float:
    """Distance between ``alpha`` and ``beta`` in ``C_k(g)``; ``math.inf`` if unreachable."""
    if not (is_proper(g, alpha) and is_proper(g, beta)):
        raise InputError("both colorings must be proper")
    if alpha == beta:
        return 0
    space = ReconfigurationSpace(g, k, limit)
    a, b = space.index_of(alpha.with_k(k)), space.index_of(beta.with_k(k))
    dist = space.distances_from([a])[0][b]
    return math.inf if math.isinf(dist) else int(dist)


def find_frozen(g: Graph, k: int, limit: int = DEFAULT_BUDGET) -> list[Coloring]:
    """Every frozen proper ``k``-coloring, in lexicographic order."""
    space = ReconfigurationSpace(g, k, limit)
    rows = np.nonzero(_frozen_mask(g, k, space.colorings))[0]
    return [space.coloring(int(i)) for i in rows]
