"""
Why triangulated grids need many levels
=======================================

On the ``2m x 2m`` triangulated grid, inner vertices have degree 6, so a
partition where each vertex has at most 5 neighbors at its level or above
can only peel the grid from the outside in. The center ends up on level
``m``: the depth grows with the grid, which is why constant-depth arguments
cannot work here.
"""

from recoloring import build_partition
from recoloring.generators import grid_vertex, triangulated_grid

# %%
for m in range(2, 6):
    g = triangulated_grid(m)
    p = build_partition(g, 6)
    print(f"m={m}: {g.n} vertices, {p.t} levels, center level {p.levels[grid_vertex(m, m, m)]}")

# %%
# The level map of the 8x8 grid, printed row by row.
m = 4
p = build_partition(triangulated_grid(m), 6)
for i in range(1, 2 * m + 1):
    print(" ".join(str(p.levels[grid_vertex(m, i, j)]) for j in range(1, 2 * m + 1)))
