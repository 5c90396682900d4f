"""
Sparse graphs with only d + 1 colors
====================================

When the maximum average degree stays below ``d``, the vertices split into
few levels, each vertex having fewer than ``d`` neighbors at its own level
or above. With ``d + 1`` colors every coloring can be driven to one
canonical coloring, so any two colorings connect through it.
"""

from recoloring import build_partition, canonicalize, mad, transform_sparse, verify_sequence
from recoloring.generators import random_proper_coloring, triangulated_grid
from recoloring.sparse import sparse_length_bound

# %%
g = triangulated_grid(3)
d = 6
density = mad(g)
print(f"6x6 triangulated grid: mad = {density} ({float(density):.3f}) < {d}")

# %%
# The greedy peeling gives the level structure.
p = build_partition(g, d)
print(f"levels={p.t} degree bound={p.degree_bound}")
for i, part in enumerate(p.parts(), start=1):
    print(f"  level {i}: {len(part)} vertices")

# %%
# Different starting colorings all reach the same canonical coloring.
k = d + 1
targets = set()
for seed in range(5):
    _, gamma = canonicalize(g, d, random_proper_coloring(g, k, seed))
    targets.add(gamma.colors)
print(f"distinct canonical colorings from 5 starts: {len(targets)}")

# %%
alpha = random_proper_coloring(g, k, 100)
beta = random_proper_coloring(g, k, 200)
seq = transform_sparse(g, d, alpha, beta)
assert verify_sequence(g, alpha, seq) == beta
print(f"transformation length {len(seq)}, bound {sparse_length_bound(g.n, d, d - density):.3g}")
