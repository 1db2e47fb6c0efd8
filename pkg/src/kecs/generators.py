"""Deterministic test-graph generators."""

from __future__ import annotations

import random

from kecs.graph import Graph


def random_multigraph(n: int, m: int, seed: int = 0) -> Graph:
    """``m`` edges with uniformly random distinct endpoints; parallels allowed."""
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    if m and n < 2:
        raise ValueError("need at least 2 vertices to place an edge")
    rng = random.Random(seed)
    g = Graph(range(n))
    for _ in range(m):
        u, v = rng.sample(range(n), 2)
        g.add_edge(u, v)
    return g


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def tree(n: int, seed: int = 0) -> Graph:
    """Random recursive tree: vertex ``i`` hangs off a uniform earlier vertex."""
    if n < 1:
        raise ValueError("tree needs n >= 1")
    rng = random.Random(seed)
    return Graph.from_edges(n, ((rng.randrange(i), i) for i in range(1, n)))


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return Graph.from_edges(10, edges)


def two_cliques(a: int, b: int, bridges: int, detours: int = 0) -> Graph:
    """K_a on ``0..a-1`` and K_b on ``a..a+b-1`` joined two ways.

    ``bridges`` direct edges join ``i % a`` to ``a + i % b``. Each of the
    ``detours`` adds a fresh middle vertex with one edge into each clique,
    which raises the pairwise connectivity between the cliques without
    making the union k-edge-connected.
    """
    if a < 1 or b < 1 or bridges < 0 or detours < 0:
        raise ValueError("infeasible two_cliques parameters")
    g = Graph(range(a + b + detours))
    for base, size in ((0, a), (a, b)):
        for i in range(size):
            for j in range(i + 1, size):
                g.add_edge(base + i, base + j)
    for i in range(bridges):
        g.add_edge(i % a, a + i % b)
    for i in range(detours):
        mid = a + b + i
        g.add_edge(mid, (bridges + i) % a)
        g.add_edge(mid, a + (bridges + i) % b)
    return g


KINDS = {
    "random": random_multigraph,
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "tree": tree,
    "petersen": petersen,
    "two_cliques": two_cliques,
}
