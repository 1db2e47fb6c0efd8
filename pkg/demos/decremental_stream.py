"""
Maintaining the partition under deletions
=========================================

Delete edges one at a time and watch parts split.
"""

import random

from kecs import DecrementalKECS
from kecs.generators import random_multigraph

g = random_multigraph(30, 150, seed=7)
k = 4
state = DecrementalKECS(g, k)
print("start:", sorted(len(p) for p in state.current_partition()))

rng = random.Random(7)
edges = [g.endpoints(e) for e in g.edge_ids()]
rng.shuffle(edges)

for i, (u, v) in enumerate(edges[:100]):
    new_parts = state.delete(u, v)
    if new_parts:
        sizes = sorted(len(p) for p in state.current_partition() if len(p) > 1)
        print(f"deletion {i:3d} ({u},{v}) split a part -> non-singleton sizes {sizes}")

c = state.counters
print("\nqueries", c.query_count, "updates", c.update_units, "depth", state.recursion_depth)
