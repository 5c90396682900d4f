"""Level partitions of bounded degree.

A partition ``V_1..V_t`` has degree ``l`` when every vertex of ``V_i`` has at
most ``l`` neighbors in ``V_i ∪ ... ∪ V_t``. Peeling low-degree vertices
produces one whenever the graph is sparse enough, and removing a suitable
stable set lowers the degree by one.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import BoundViolationError, InputError
from .graph import Graph

__all__ = [
    "LevelPartition",
    "PartitionFailure",
    "PartitionSpec",
    "StableSetResult",
    "build_partition",
    "validate_partition",
    "extract_stable_set",
    "level_depth_bound",
    "upward_degrees",
]


@dataclass(frozen=True)
class LevelPartition:
    """Level ``L(v)`` in ``1..t`` for each vertex, with degree bound ``degree_bound``.

    Every level in ``1..t`` must be occupied. Whether the degree bound holds
    on a particular graph is checked by :func:`validate_partition`.
    """

    levels: tuple[int, ...]
    degree_bound: int

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(int(x) for x in self.levels))
        if self.degree_bound < 0:
            raise InputError("degree bound must be non-negative")
        if any(x < 1 for x in self.levels):
            raise InputError("levels start at 1")
        occupied = set(self.levels)
        if occupied != set(range(1, len(occupied) + 1)):
            raise InputError("levels must occupy 1..t without gaps")

    @classmethod
    def compacted(cls, levels: Iterable[int], degree_bound: int) -> LevelPartition:
        """Renumber arbitrary positive levels to ``1..t``, keeping their order."""
        levels = list(levels)
        rank = {x: i + 1 for i, x in enumerate(sorted(set(levels)))}
        return cls(tuple(rank[x] for x in levels), degree_bound)

    @property
    def t(self) -> int:
        return max(self.levels, default=0)

    @property
    def n(self) -> int:
        return len(self.levels)

    def level(self, v: int) -> int:
        return self.levels[v]

    def parts(self) -> list[list[int]]:
        """``parts()[i - 1]`` is ``V_i`` in increasing vertex order."""
        out: list[list[int]] = [[] for _ in range(self.t)]
        for v, x in enumerate(self.levels):
            out[x - 1].append(v)
        return out

    def at_or_above(self, i: int) -> list[int]:
        """Vertex set of ``G_i``."""
        return [v for v, x in enumerate(self.levels) if x >= i]


@dataclass(frozen=True)
class PartitionFailure:
    """Peeling got stuck: every vertex of ``vertices`` has degree ``>= d`` among them.

    The induced subgraph on ``vertices`` has average degree ``>= d`` and so
    certifies ``mad(g) >= d``.
    """

    d: int
    vertices: tuple[int, ...]
    peeled_levels: tuple[int, ...] = field(repr=False, default=())

    def subgraph(self, g: Graph) -> Graph:
        return g.induced_subgraph(self.vertices)[0]

    def __bool__(self):
        return False


@dataclass(frozen=True)
class PartitionSpec:
    d: int
    epsilon: Fraction

    def __post_init__(self):
        object.__setattr__(self, "epsilon", Fraction(self.epsilon))
        if self.d < 1:
            raise InputError("d must be at least 1")
        if not 0 < self.epsilon < self.d:
            raise InputError(f"epsilon must lie in (0, {self.d}), got {self.epsilon}")

    @property
    def shrink_ratio(self) -> Fraction:
        """``d / (d - epsilon)``: each peel divides the residual size by at least this."""
        return Fraction(self.d) / (self.d - self.epsilon)

    @property
    def c(self) -> float:
        """Polynomial exponent ``1 / log_d(d/(d - epsilon)) + 2`` (reporting only)."""
        return math.log(self.d) / math.log(self.shrink_ratio) + 2


@dataclass(frozen=True)
class StableSetResult:
    """Stable set ``S`` and the degree-``(l-1)`` partition left on ``G - S``.

    ``remaining[i]`` is the vertex of the input graph that became vertex ``i``
    of ``subgraph``; ``reduced_partition`` is indexed by subgraph ids.
    """

    stable_set: frozenset[int]
    per_level_sets: tuple[tuple[int, ...], ...]
    remaining: tuple[int, ...]
    subgraph: Graph
    reduced_partition: LevelPartition


def upward_degrees(g: Graph, levels) -> list[int]:
    """Per-vertex count of neighbors at the same or a higher level."""
    return [sum(1 for w in g.neighbors(v) if levels[w] >= levels[v]) for v in range(g.n)]


def validate_partition(g: Graph, p: LevelPartition) -> bool:
    if p.n != g.n:
        raise InputError(f"partition covers {p.n} vertices, graph has {g.n}")
    return all(x <= p.degree_bound for x in upward_degrees(g, p.levels))


def build_partition(g: Graph, d: int) -> LevelPartition | PartitionFailure:
    """Greedy peeling into a partition of degree ``d - 1``.

    Level ``i`` collects every vertex of degree at most ``d - 1`` in what is
    left after removing levels ``1..i-1``. Returns a :class:`PartitionFailure`
    (falsy) instead of raising when the residual graph has minimum degree
    ``>= d``.
    """
    if d < 1:
        raise InputError(f"d must be at least 1, got {d}")
    levels = [0] * g.n
    deg = g.degrees()
    alive = set(range(g.n))
    level = 0
    while alive:
        layer = sorted(v for v in alive if deg[v] <= d - 1)
        if not layer:
            return PartitionFailure(d, tuple(sorted(alive)), tuple(levels))
        level += 1
        for v in layer:
            levels[v] = level
            alive.discard(v)
        for v in layer:
            for w in g.neighbors(v):
                if w in alive:
                    deg[w] -= 1
    return LevelPartition(tuple(levels), d - 1)


def _greedy_stable_set(g: Graph, candidates: list[int]) -> list[int]:
    chosen: list[int] = []
    taken: set[int] = set()
    for v in candidates:
        if not any(w in taken for w in g.neighbors(v)):
            chosen.append(v)
            taken.add(v)
    return chosen


def extract_stable_set(g: Graph, p: LevelPartition) -> StableSetResult:
    """Pick ``S = S_1 ∪ ... ∪ S_t`` so that ``G - S`` keeps a partition of degree ``l - 1``.

    Works from the top level down. ``S_i`` is a greedy (smallest id first)
    maximal stable set among the level-``i`` vertices not adjacent to an
    already chosen ``S_j``, ``j > i``. Every unchosen vertex then has a
    neighbor in ``S`` at its own level or above, which is what drops its
    upward degree.
    """
    if p.degree_bound < 1:
        raise InputError("stable-set extraction needs degree bound >= 1")
    if not validate_partition(g, p):
        raise InputError(f"partition does not have degree {p.degree_bound} on this graph")
    parts = p.parts()
    blocked: set[int] = set()
    per_level: list[tuple[int, ...]] = [()] * p.t
    for i in range(p.t, 0, -1):
        candidates = [v for v in parts[i - 1] if v not in blocked]
        chosen = _greedy_stable_set(g, candidates)
        per_level[i - 1] = tuple(chosen)
        for v in chosen:
            blocked.update(g.neighbors(v))
    stable = frozenset(v for s in per_level for v in s)
    sub, remaining = g.induced_subgraph(v for v in range(g.n) if v not in stable)
    reduced = LevelPartition.compacted((p.levels[v] for v in remaining), p.degree_bound - 1)
    if not validate_partition(sub, reduced):
        raise BoundViolationError("reduced partition does not validate at degree l - 1")
    return StableSetResult(stable, tuple(per_level), remaining, sub, reduced)


def level_depth_bound(n: int, spec: PartitionSpec) -> int:
    """Smallest ``t >= 0`` with ``(d/(d - epsilon))**t >= n``, compared exactly."""
    if n < 1:
        raise InputError("n must be at least 1")
    ratio = spec.shrink_ratio
    t = max(0, math.floor(math.log(n) / math.log(ratio)) - 2)
    while ratio**t < n:
        t += 1
    while t > 0 and ratio ** (t - 1) >= n:
        t -= 1
    return t
