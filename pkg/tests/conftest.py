import itertools
from collections import deque
from pathlib import Path

import pytest
from hypothesis import strategies as st

from recoloring import Coloring, Graph
from recoloring.formats import read_coloring


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def star_graph(leaves):
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def brute_force_colorings(g, k):
    """Proper colorings by plain product enumeration (independent of the oracle module)."""
    out = []
    for colors in itertools.product(range(1, k + 1), repeat=g.n):
        if all(colors[u] != colors[v] for u, v in g.edges):
            out.append(colors)
    return out


def brute_force_distance(g, k, alpha, beta):
    """Dictionary BFS over proper colorings; ``None`` when unreachable."""
    start, goal = tuple(alpha), tuple(beta)
    seen = {start: 0}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if cur == goal:
            return seen[cur]
        for v in range(g.n):
            for c in range(1, k + 1):
                if c == cur[v] or any(cur[w] == c for w in g.neighbors(v)):
                    continue
                nxt = cur[:v] + (c,) + cur[v + 1 :]
                if nxt not in seen:
                    seen[nxt] = seen[cur] + 1
                    queue.append(nxt)
    return None


def coloring(k, *colors):
    return Coloring(k, tuple(colors))


FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def frozen_icosahedron_coloring():
    return read_coloring(FIXTURES / "frozen_icosahedron.col")
