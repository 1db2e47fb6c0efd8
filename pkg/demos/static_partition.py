"""
Static partition of a small multigraph
======================================

Two dense blocks joined by a couple of edges, plus a dangling path.
"""

from kecs import format_partition, maximal_kecs
from kecs.generators import two_cliques

g = two_cliques(5, 4, 2)
# hang a short path off vertex 0
g.add_vertex(9)
g.add_vertex(10)
g.add_edge(0, 9)
g.add_edge(9, 10)
print(g.n, "vertices,", g.m, "edges")

for k in (1, 2, 3, 4):
    result = maximal_kecs(g, k)
    print(f"\nk={k}: {len(result.partition)} parts, "
          f"{result.stats.query_count} oracle queries, depth {result.recursion_depth}")
    print(format_partition(result.partition), end="")

# the brute-force recursive min-cut gives the same answer
from kecs.reference import brute_partition_recursive_mincut

print("\nagrees with brute force:",
      all(maximal_kecs(g, k).partition == brute_partition_recursive_mincut(g, k)
          for k in range(1, 6)))
