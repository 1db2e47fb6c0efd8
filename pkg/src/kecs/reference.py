"""Slow, independent oracles used to check the solvers.

Nothing here calls the oracle classes or the peeling code. All routines
are meant for small graphs (tens of vertices).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from kecs.graph import Graph, GraphError, VertexPartition
from kecs.oracle import st_connectivity_capped


def global_min_cut(g: Graph) -> tuple[int, list[int]]:
    """Stoer-Wagner minimum cut; returns ``(value, one side)``.

    A disconnected graph has value 0 and the component of the smallest
    vertex as its side.
    """
    verts = sorted(g.vertices())
    n = len(verts)
    if n < 2:
        raise GraphError("global min cut needs at least 2 vertices")
    comps = g.connected_components()
    if len(comps) > 1:
        side = next(p for p in comps if verts[0] in p)
        return 0, sorted(side)

    index = {v: i for i, v in enumerate(verts)}
    w = np.zeros((n, n), np.int64)
    for _, a, b in g.edges():
        w[index[a], index[b]] += 1
        w[index[b], index[a]] += 1
    groups = [[v] for v in verts]
    active = np.ones(n, bool)
    best, best_side = None, None
    for phase in range(n - 1):
        start = int(np.flatnonzero(active)[0])
        added = ~active
        added[start] = True
        weights = w[start].copy()
        prev, last, cut = start, start, 0
        for _ in range(n - 1 - phase):
            nxt = int(np.argmax(np.where(added, -1, weights)))
            # weights[nxt] is nxt's attachment to everything added so far
            cut = int(weights[nxt])
            added[nxt] = True
            weights += w[nxt]
            prev, last = last, nxt
        if best is None or cut < best:
            best, best_side = cut, list(groups[last])
        w[prev] += w[last]
        w[:, prev] += w[:, last]
        w[prev, prev] = 0
        w[last] = 0
        w[:, last] = 0
        groups[prev].extend(groups[last])
        active[last] = False
    return best, sorted(best_side)


def brute_partition_recursive_mincut(g: Graph, k: int) -> VertexPartition:
    """Split along global minimum cuts until every piece has min cut >= k."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    parts = []
    stack = [sorted(g.vertices())] if g.n else []
    while stack:
        s = stack.pop()
        if len(s) == 1:
            parts.append(s)
            continue
        value, side = global_min_cut(g.induced_subgraph(s))
        if value >= k:
            parts.append(s)
        else:
            inside = set(side)
            stack.append(side)
            stack.append([v for v in s if v not in inside])
    return VertexPartition(parts, g.vertices())


def kecc_components(g: Graph, k: int) -> VertexPartition:
    """Classes of the relation lambda_G(s, t) >= k, flows taken in all of ``g``."""
    comp_of = g.connected_components().part_index()
    classes: list[list[int]] = []
    for v in sorted(g.vertices()):
        home = None
        if g.degree(v) >= k:
            for cls in classes:
                r = cls[0]
                if comp_of[r] == comp_of[v] and g.degree(r) >= k and \
                        st_connectivity_capped(g, v, r, k) >= k:
                    home = cls
                    break
        if home is None:
            classes.append([v])
        else:
            home.append(v)
    return VertexPartition(classes, g.vertices())


def bridges(g: Graph) -> list[int]:
    """Bridge edge ids (iterative lowpoint DFS; parallel edges are never bridges)."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    out = []
    clock = 0
    for root in sorted(g.vertices()):
        if root in disc:
            continue
        disc[root] = low[root] = clock
        clock += 1
        stack = [(root, None, iter(g.incident(root).items()))]
        while stack:
            x, via, it = stack[-1]
            for eid, y in it:
                if eid == via:
                    continue
                if y in disc:
                    low[x] = min(low[x], disc[y])
                else:
                    disc[y] = low[y] = clock
                    clock += 1
                    stack.append((y, eid, iter(g.incident(y).items())))
                    break
            else:
                stack.pop()
                if stack:
                    parent = stack[-1][0]
                    low[parent] = min(low[parent], low[x])
                    if low[x] > disc[parent]:
                        out.append(via)
    return out


def bridge_components(g: Graph) -> VertexPartition:
    """Maximal 2-edge-connected subgraphs: components after deleting bridges."""
    h = g.copy()
    for eid in bridges(g):
        h.delete_edge(eid)
    return h.connected_components()


@dataclass
class CutEnumeration:
    """Every vertex set with fewer than ``k`` boundary edges, as bitmasks.

    Bit ``i`` of a mask stands for ``vertices[i]``.
    """

    vertices: list[int]
    masks: np.ndarray
    boundary: np.ndarray

    def mask_of(self, s) -> int:
        pos = {v: i for i, v in enumerate(self.vertices)}
        return sum(1 << pos[v] for v in s)

    def sets(self) -> list[frozenset[int]]:
        return [frozenset(v for i, v in enumerate(self.vertices) if (int(m) >> i) & 1)
                for m in self.masks]

    def missing(self, L) -> list[frozenset[int]]:
        """The enumerated cuts that avoid ``L`` entirely."""
        bad = self.masks[(self.masks & self.mask_of(L)) == 0]
        return [frozenset(v for i, v in enumerate(self.vertices) if (int(m) >> i) & 1) for m in bad]

    def __len__(self) -> int:
        return len(self.masks)


def enumerate_k_cuts(g: Graph, k: int, cap: int = 20) -> CutEnumeration:
    verts = sorted(g.vertices())
    n = len(verts)
    if n > cap:
        raise GraphError(f"{n} vertices exceeds enumeration cap {cap}")
    pos = {v: i for i, v in enumerate(verts)}
    masks = np.arange(1, 1 << n, dtype=np.int64)
    boundary = np.zeros(len(masks), np.int64)
    for _, a, b in g.edges():
        boundary += ((masks >> pos[a]) & 1) ^ ((masks >> pos[b]) & 1)
    keep = boundary < k
    return CutEnumeration(verts, masks[keep], boundary[keep])


def appendix_supergraph(g: Graph, k: int) -> Graph:
    """Chain consecutive vertices (in id order) with ``k`` dummy 2-paths each.

    Dummies get fresh ids above ``max(V(g))``; every dummy has degree 2.
    """
    if k <= 2:
        raise ValueError("dummy paths only isolate for k > 2")
    order = sorted(g.vertices())
    h = g.copy()
    fresh = (order[-1] + 1) if order else 0
    for a, b in zip(order, order[1:]):
        for _ in range(k):
            h.add_vertex(fresh)
            h.add_edge(a, fresh)
            h.add_edge(fresh, b)
            fresh += 1
    return h
