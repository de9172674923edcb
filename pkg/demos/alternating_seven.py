"""The proportion of vanishing elements in A7, computed from two generators."""

import time

from vanishlab import character_table, nonvanishing_structure
from vanishlab.groups import from_permutations

start = time.perf_counter()
G = from_permutations([[1, 2, 3, 4, 5, 6, 0], [0, 1, 2, 3, 5, 6, 4]], name="A7")
T = character_table(G)
rep = nonvanishing_structure(G, T)
print(f"{G.name}: order {G.order}, {len(G.classes)} classes, degrees {T.degrees}")
print(f"vanishing elements: {rep.vanishing_count}, proportion {rep.pv}")
for cls, g, row in rep.witnesses:
    print(f"  class {cls} (order {G.classes.rep_orders[cls]}, size {G.classes.sizes[cls]}) vanishes on row {row}")
print(f"{time.perf_counter() - start:.1f}s")
