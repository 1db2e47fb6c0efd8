"""
Components versus subgraphs
===========================

Pairwise connectivity can hold through vertices outside a set, so the
k-edge-connected components can be coarser than the maximal
k-edge-connected subgraphs.
"""

from kecs import format_partition, maximal_kecs, st_connectivity_capped
from kecs.generators import two_cliques
from kecs.reference import kecc_components

# two K4 blocks, two direct links and one detour through vertex 8
g = two_cliques(4, 4, 2, detours=1)
k = 3

print("lambda(0, 4) =", st_connectivity_capped(g, 0, 4, k))
print("\nk-edge-connected components:")
print(format_partition(kecc_components(g, k)), end="")
print("\nmaximal k-edge-connected subgraphs:")
print(format_partition(maximal_kecs(g, k).partition), end="")

# inside the union of both blocks only the 2 direct links cross
both = g.induced_subgraph(range(8))
print("\nlambda(0, 4) inside the blocks =", st_connectivity_capped(both, 0, 4, k))
