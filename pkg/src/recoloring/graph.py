"""Graphs, colorings, recoloring sequences and the structural measures on them.

Vertex ids are ``0..n-1``; colors are ``1..k``.
"""

from __future__ import annotations

import heapq
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

import networkx as nx
import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order, maximum_flow

from .errors import InputError, InvalidSequenceError

__all__ = [
    "Graph",
    "Coloring",
    "RecolorStep",
    "RecolorSequence",
    "DegeneracyCertificate",
    "is_proper",
    "is_frozen",
    "verify_sequence",
    "degeneracy_order",
    "mad",
    "densest_subgraph",
]


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    Build it with :meth:`from_edges`; the constructor expects already
    normalized data.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        normalized = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            edge = (u, v) if u < v else (v, u)
            if edge in normalized:
                raise InputError(f"parallel edge {edge}")
            normalized.add(edge)
        neighbors: list[list[int]] = [[] for _ in range(n)]
        for u, v in normalized:
            neighbors[u].append(v)
            neighbors[v].append(u)
        return cls(n, frozenset(normalized), tuple(tuple(sorted(a)) for a in neighbors))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls.from_edges(n, ())

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        """Return ``(H, keep)`` where vertex ``i`` of ``H`` is vertex ``keep[i]`` here.

        ``keep`` is sorted, so relative vertex order is preserved.
        """
        keep = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(keep)}
        sub_edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph.from_edges(len(keep), sub_edges), keep

    def to_networkx(self) -> nx.Graph:
        h = nx.Graph()
        h.add_nodes_from(range(self.n))
        h.add_edges_from(self.edges)
        return h


@dataclass(frozen=True)
class Coloring:
    """Assignment of a color in ``1..k`` to every vertex.

    Properness is not enforced here; see :func:`is_proper`.
    """

    k: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise InputError(f"number of colors must be positive, got {self.k}")
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        for v, c in enumerate(self.colors):
            if not 1 <= c <= self.k:
                raise InputError(f"vertex {v} has color {c} outside 1..{self.k}")

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __iter__(self) -> Iterator[int]:
        return iter(self.colors)

    def recolor(self, v: int, color: int) -> Coloring:
        colors = list(self.colors)
        colors[v] = color
        return Coloring(self.k, tuple(colors))

    def with_k(self, k: int) -> Coloring:
        """Same assignment viewed as a ``k``-coloring."""
        return Coloring(k, self.colors)

    def restrict(self, vertices: Sequence[int], k: int | None = None) -> Coloring:
        return Coloring(self.k if k is None else k, tuple(self.colors[v] for v in vertices))

    def used_colors(self) -> set[int]:
        return set(self.colors)


@dataclass(frozen=True)
class RecolorStep:
    vertex: int
    from_color: int
    to_color: int

    def __post_init__(self):
        if self.from_color == self.to_color:
            raise InputError(f"step on vertex {self.vertex} does not change its color")

    def reversed(self) -> RecolorStep:
        return RecolorStep(self.vertex, self.to_color, self.from_color)


@dataclass(frozen=True)
class RecolorSequence:
    """Ordered list of single-vertex recolorings."""

    steps: tuple[RecolorStep, ...] = ()

    @classmethod
    def of(cls, steps: Iterable[RecolorStep | tuple[int, int, int]]) -> RecolorSequence:
        return cls(tuple(s if isinstance(s, RecolorStep) else RecolorStep(*s) for s in steps))

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[RecolorStep]:
        return iter(self.steps)

    def __getitem__(self, i):
        return self.steps[i]

    def __add__(self, other: RecolorSequence) -> RecolorSequence:
        return RecolorSequence(self.steps + other.steps)

    def reversed(self) -> RecolorSequence:
        """The inverse walk: replays from the end coloring back to the start."""
        return RecolorSequence(tuple(s.reversed() for s in reversed(self.steps)))

    def relabel(self, mapping: Sequence[int]) -> RecolorSequence:
        """Translate vertex ids through ``mapping`` (subgraph id -> parent id)."""
        return RecolorSequence(
            tuple(RecolorStep(mapping[s.vertex], s.from_color, s.to_color) for s in self.steps)
        )

    def recolor_counts(self, n: int) -> list[int]:
        counts = [0] * n
        for s in self.steps:
            counts[s.vertex] += 1
        return counts

    def replay(self, start: Coloring) -> list[Coloring]:
        """All colorings visited, ``start`` included. Does not check properness."""
        colors = list(start.colors)
        visited = [start]
        for s in self.steps:
            colors[s.vertex] = s.to_color
            visited.append(Coloring(start.k, tuple(colors)))
        return visited


@dataclass(frozen=True)
class DegeneracyCertificate:
    """Elimination order ``e_1..e_n`` in which each ``e_i`` has at most
    ``degeneracy`` neighbors among ``e_i..e_n``."""

    order: tuple[int, ...]
    degeneracy: int

    def back_degrees(self, g: Graph) -> list[int]:
        position = {v: i for i, v in enumerate(self.order)}
        return [
            sum(1 for w in g.neighbors(v) if position[w] > position[v]) for v in self.order
        ]


def _check_size(g: Graph, c: Coloring) -> None:
    if len(c) != g.n:
        raise InputError(f"coloring has {len(c)} entries, graph has {g.n} vertices")


def is_proper(g: Graph, c: Coloring) -> bool:
    _check_size(g, c)
    return all(c[u] != c[v] for u, v in g.edges)


def is_frozen(g: Graph, c: Coloring) -> bool:
    """True iff no single vertex of ``g`` can change color in ``c``."""
    if not is_proper(g, c):
        raise InputError("is_frozen expects a proper coloring")
    need = c.k - 1
    for v in range(g.n):
        seen = {c[w] for w in g.neighbors(v)}
        if len(seen) < need:
            return False
    return True


def verify_sequence(g: Graph, start: Coloring, seq: RecolorSequence) -> Coloring:
    """Replay ``seq`` from ``start`` checking every intermediate coloring.

    Returns the final coloring; raises :class:`InvalidSequenceError` naming the
    first bad step otherwise.
    """
    if not is_proper(g, start):
        raise InputError("start coloring is not proper")
    colors = list(start.colors)
    for i, s in enumerate(seq):
        if not 0 <= s.vertex < g.n:
            raise InvalidSequenceError(i, f"vertex {s.vertex} not in graph")
        if not 1 <= s.to_color <= start.k:
            raise InvalidSequenceError(i, f"color {s.to_color} outside 1..{start.k}")
        if colors[s.vertex] != s.from_color:
            raise InvalidSequenceError(
                i,
                f"vertex {s.vertex} has color {colors[s.vertex]}, step expects {s.from_color}",
            )
        for w in g.neighbors(s.vertex):
            if colors[w] == s.to_color:
                raise InvalidSequenceError(
                    i, f"monochromatic edge ({s.vertex}, {w}) in color {s.to_color}"
                )
        colors[s.vertex] = s.to_color
    return Coloring(start.k, tuple(colors))


def degeneracy_order(g: Graph) -> DegeneracyCertificate:
    """Min-degree peeling; ties go to the smallest vertex id."""
    deg = g.degrees()
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    removed = [False] * g.n
    order = []
    best = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        best = max(best, d)
        for w in g.neighbors(v):
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return DegeneracyCertificate(tuple(order), best)


_INT32_MAX = 2**31 - 1


def _denser_than(g: Graph, density: Fraction) -> list[int]:
    """Vertices of a subgraph with ``2|E(H)|/|V(H)| > density``, or ``[]`` if none.

    Max-closure formulation scaled to integers: each edge earns ``2q`` and each
    vertex costs ``p`` where ``density = p/q``; a positive-profit closure is
    exactly a strictly denser subgraph. Node layout: source 0, edge nodes
    ``1..m``, vertex nodes ``m+1..m+n``, sink ``m+n+1``.
    """
    p, q = density.numerator, density.denominator
    if g.m == 0:
        return []
    total = 2 * q * g.m
    if total + 1 > _INT32_MAX or p > _INT32_MAX:
        return _denser_than_nx(g, p, q)
    m, n = g.m, g.n
    sink = m + n + 1
    ends = np.array(g.sorted_edges(), dtype=np.int32).reshape(-1, 2) + m + 1
    edge_nodes = np.arange(1, m + 1, dtype=np.int32)
    vertex_nodes = np.arange(m + 1, m + n + 1, dtype=np.int32)
    rows = np.concatenate([np.zeros(m, np.int32), edge_nodes, edge_nodes, vertex_nodes])
    cols = np.concatenate([edge_nodes, ends[:, 0], ends[:, 1], np.full(n, sink, np.int32)])
    caps = np.concatenate(
        [np.full(m, 2 * q), np.full(2 * m, total + 1), np.full(n, p)]
    ).astype(np.int32)
    cap = csr_matrix((caps, (rows, cols)), shape=(sink + 1, sink + 1))
    result = maximum_flow(cap, 0, sink)
    if total - result.flow_value <= 0:
        return []
    residual = cap - result.flow
    residual.data[residual.data < 0] = 0
    residual.eliminate_zeros()
    reached = breadth_first_order(residual, 0, directed=True, return_predecessors=False)
    return sorted(int(x) - m - 1 for x in reached if m < x <= m + n)


def _denser_than_nx(g: Graph, p: int, q: int) -> list[int]:
    # same network without the int32 capacity limit, for very large inputs
    if g.m == 0:
        return []
    net = nx.DiGraph()
    for u, v in g.edges:
        e = ("e", u, v)
        net.add_edge("s", e, capacity=2 * q)
        net.add_edge(e, ("v", u))
        net.add_edge(e, ("v", v))
    for v in range(g.n):
        net.add_edge(("v", v), "t", capacity=p)
    cut, (source_side, _) = nx.minimum_cut(net, "s", "t")
    if 2 * q * g.m - cut <= 0:
        return []
    return sorted(x[1] for x in source_side if x != "s" and x[0] == "v")


def densest_subgraph(g: Graph) -> tuple[Fraction, list[int]]:
    """Exact maximum average degree together with a subgraph attaining it.

    Every density ``2e/v`` has ``v <= n``, so binary search over that finite
    candidate list with a min-cut feasibility test is exact.
    """
    if g.n == 0:
        raise InputError("mad is undefined on the empty graph")
    if g.m == 0:
        return Fraction(0), [0]
    lower = Fraction(2 * g.m, g.n)
    upper = 2 * degeneracy_order(g).degeneracy
    candidates = sorted(
        {
            Fraction(2 * e, v)
            for v in range(2, g.n + 1)
            for e in range(0, min(g.m, v * (v - 1) // 2) + 1)
            if lower <= Fraction(2 * e, v) <= upper
        }
    )
    # first candidate with no strictly denser subgraph
    lo, hi = 0, len(candidates) - 1
    last_found = None
    while lo < hi:
        mid = (lo + hi) // 2
        found = _denser_than(g, candidates[mid])
        if found:
            lo = mid + 1
            last_found = (mid, found)
        else:
            hi = mid
    if lo == 0:
        return candidates[0], list(range(g.n))
    # a subgraph strictly denser than the previous candidate has density exactly candidates[lo]
    if last_found is not None and last_found[0] == lo - 1:
        witness = last_found[1]
    else:
        witness = _denser_than(g, candidates[lo - 1])
    return candidates[lo], witness


def mad(g: Graph) -> Fraction:
    """Maximum average degree ``max 2|E(H)|/|V(H)|`` as an exact fraction."""
    return densest_subgraph(g)[0]


def edge_count_within(g: Graph, vertices: Iterable[int]) -> int:
    inside = set(vertices)
    return sum(1 for u, v in g.edges if u in inside and v in inside)
