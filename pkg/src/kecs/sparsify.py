"""Forest decompositions and the sparse certificate for maximal k-ECS."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from kecs.graph import Graph


class _DisjointSet:
    def __init__(self):
        self.parent: dict[int, int] = {}

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent.get(root, root) != root:
            root = parent[root]
        while x != root:
            parent[x], x = root, parent.get(x, x)
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


@dataclass
class ForestDecomposition:
    forests: list[list[int]]
    leftover: list[int] = field(default_factory=list)

    @property
    def t(self) -> int:
        return len(self.forests)

    def edge_ids(self) -> list[int]:
        return [e for f in self.forests for e in f]


def forest_decomposition(g: Graph, t: int) -> ForestDecomposition:
    """Peel ``t`` maximal spanning forests off ``g`` in turn.

    Forest ``i`` spans whatever the first ``i - 1`` forests left behind;
    edges are scanned in id order so the result is deterministic.
    """
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    remaining = [(e, u, v) for e, u, v in g.edges()]
    forests = []
    for _ in range(t):
        dsu = _DisjointSet()
        forest, rest = [], []
        for item in remaining:
            if dsu.union(item[1], item[2]):
                forest.append(item[0])
            else:
                rest.append(item)
        forests.append(forest)
        remaining = rest
    return ForestDecomposition(forests, [e for e, _, _ in remaining])


def certificate_forests(n: int, k: int) -> int:
    """Number of forests kept by :func:`kecs_certificate`: 2k(ceil(log2 n) + 1)."""
    return 2 * k * (math.ceil(math.log2(n)) + 1) if n > 1 else 2 * k


def kecs_certificate(g: Graph, k: int) -> Graph:
    """Sparse subgraph with the same maximal k-edge-connected subgraphs.

    Returns a copy of ``g`` unchanged when it already has at most
    ``t * (n - 1)`` edges, since the forests would absorb every edge.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    t = certificate_forests(g.n, k)
    if g.m <= t * max(g.n - 1, 0):
        return g.copy()
    return g.edge_subgraph(forest_decomposition(g, t).edge_ids())
