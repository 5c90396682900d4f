"""
Recoloring a degenerate graph with 2d colors
============================================

A graph whose every subgraph has a vertex of degree below ``d`` can move
between any two proper ``2d``-colorings while touching each vertex at most
``d`` times. This script builds such a graph, picks two random colorings and
checks the sequence against that promise.
"""

from recoloring import degeneracy_order, transform_linear, verify_sequence
from recoloring.generators import random_degenerate, random_proper_coloring

# %%
# Every new vertex attaches to two earlier ones, so the graph is 2-degenerate
# and d = 3.
g = random_degenerate(40, 3, seed=1)
d = degeneracy_order(g).degeneracy + 1
print(f"n={g.n} m={g.m} d={d}")

# %%
k = 2 * d
alpha = random_proper_coloring(g, k, seed=10)
beta = random_proper_coloring(g, k, seed=11)
seq = transform_linear(g, alpha, beta)

# %%
# The sequence replays step by step through proper colorings only.
assert verify_sequence(g, alpha, seq) == beta
counts = seq.recolor_counts(g.n)
print(f"steps={len(seq)} (at most {d * g.n}), busiest vertex recolored {max(counts)} times")

# %%
# A histogram of recolorings per vertex.
for times in range(d + 1):
    print(f"{times} recolorings: {'#' * counts.count(times)}")
