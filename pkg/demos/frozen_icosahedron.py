"""
A frozen coloring of the icosahedron
====================================

The icosahedron is planar and 5-regular. With 6 colors some colorings are
frozen: every vertex sees all five other colors, so no single vertex can
change and the coloring is isolated in the recoloring graph. Finding them
takes an exhaustive enumeration of about four million colorings.
"""

import time

from recoloring import Graph, is_frozen
from recoloring.generators import icosahedron
from recoloring.oracle import find_frozen, reconf_stats

# %%
g = icosahedron()
start = time.perf_counter()
frozen = find_frozen(g, 6)
print(f"{len(frozen)} frozen 6-colorings found in {time.perf_counter() - start:.1f}s")

# %%
first = frozen[0]
print("first one:", first.colors)
assert is_frozen(g, first)
for v in range(g.n):
    seen = sorted(first[w] for w in g.neighbors(v))
    print(f"  vertex {v} has color {first[v]}, neighbors use {seen}")

# %%
# Small cases for comparison: an edge with two colors, a triangle with three.
print(reconf_stats(Graph.from_edges(2, [(0, 1)]), 2).summary())
print(reconf_stats(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]), 3).summary())
