"""Decremental pairwise k-edge-connectivity oracles.

The solvers only ever talk to a :class:`ConnectivityOracle`: bind it to a
graph once, feed it edge deletions, ask "is lambda(s, t) >= k?". Two
implementations are provided. :class:`FlowOracle` snapshots the graph into
CSR arrays and answers each query with a compiled capped max-flow;
:class:`SimpleFlowOracle` keeps a private :class:`Graph` and calls
:func:`st_connectivity_capped` directly. They share no code, so either can
check the other.
"""

from __future__ import annotations

import abc
from collections import deque
from dataclasses import dataclass, fields

import numpy as np

from kecs import _kernel
from kecs.graph import Graph, GraphError


@dataclass
class CostCounters:
    preprocess_units: int = 0
    update_units: int = 0
    query_count: int = 0

    def __iadd__(self, other: "CostCounters") -> "CostCounters":
        for f in fields(self):
            setattr(self, f.name, getattr(self, f.name) + getattr(other, f.name))
        return self

    def as_dict(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def st_connectivity_capped(g: Graph, s: int, t: int, k: int) -> int:
    """``min(lambda(s, t), k)`` by at most ``k`` BFS augmenting paths.

    Each undirected edge holds a net flow in {-1, 0, 1} relative to its
    stored orientation; residual capacity from ``x`` to ``y`` is positive
    while the net flow ``x -> y`` is below 1.
    """
    if s == t:
        raise GraphError("s and t must differ")
    g.incident(s)
    g.incident(t)
    flow: dict[int, int] = {}
    value = 0
    while value < k:
        parent = {s: None}
        queue = deque([s])
        while queue and t not in parent:
            x = queue.popleft()
            for eid, y in g.incident(x).items():
                if y in parent:
                    continue
                a, _ = g.endpoints(eid)
                net = flow.get(eid, 0) if a == x else -flow.get(eid, 0)
                if net < 1:
                    parent[y] = eid
                    queue.append(y)
        if t not in parent:
            break
        y = t
        while y != s:
            eid = parent[y]
            a, b = g.endpoints(eid)
            x = a if b == y else b
            flow[eid] = flow.get(eid, 0) + (1 if a == x else -1)
            y = x
        value += 1
    return value


class ConnectivityOracle(abc.ABC):
    """Exact answers to "are s and t k-edge-connected?" under deletions."""

    def __init__(self, g: Graph, k: int):
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        self.k = k
        self.counters = CostCounters()

    @abc.abstractmethod
    def delete(self, eid: int) -> None: ...

    @abc.abstractmethod
    def _query(self, s: int, t: int) -> bool: ...

    @abc.abstractmethod
    def _check_vertex(self, v: int) -> None: ...

    def is_k_connected(self, s: int, t: int) -> bool:
        self._check_vertex(s)
        self._check_vertex(t)
        self.counters.query_count += 1
        if s == t:
            return True
        return self._query(s, t)


class FlowOracle(ConnectivityOracle):
    """Immutable CSR snapshot plus an alive mask; compiled flow per query."""

    def __init__(self, g: Graph, k: int):
        super().__init__(g, k)
        verts = sorted(g.vertices())
        self._index = {v: i for i, v in enumerate(verts)}
        n = len(verts)
        eids = g.edge_ids()
        self._eindex = {e: i for i, e in enumerate(eids)}
        m = len(eids)
        ea = np.empty(m, np.int64)
        eb = np.empty(m, np.int64)
        for i, e in enumerate(eids):
            a, b = g.endpoints(e)
            ea[i] = self._index[a]
            eb[i] = self._index[b]
        self._ea, self._eb = ea, eb
        self._indptr, self._adj_v, self._adj_e = _kernel.build_csr(n, ea, eb)
        self._alive = np.ones(m, np.uint8)
        self._deg = np.diff(self._indptr)
        self._flow = np.zeros(m, np.int8)
        self._mark_f = np.zeros(n, np.int64)
        self._mark_b = np.zeros(n, np.int64)
        self._par_f = np.zeros(n, np.int64)
        self._par_b = np.zeros(n, np.int64)
        self._qf = np.zeros(n, np.int64)
        self._qb = np.zeros(n, np.int64)
        maxdeg = int(self._deg.max()) if n else 0
        self._touched = np.zeros(max(1, min(k, maxdeg) * n), np.int64)
        self._stamp = 0
        self.counters.preprocess_units += m

    def _check_vertex(self, v: int) -> None:
        if v not in self._index:
            raise GraphError(f"no such vertex {v}")

    def delete(self, eid: int) -> None:
        i = self._eindex.get(eid)
        if i is None or not self._alive[i]:
            raise GraphError(f"no such edge {eid}")
        self._alive[i] = 0
        self._deg[self._ea[i]] -= 1
        self._deg[self._eb[i]] -= 1
        self.counters.update_units += 1

    def capped(self, s: int, t: int) -> int:
        a, b = self._index[s], self._index[t]
        cap = min(self.k, int(self._deg[a]), int(self._deg[b]))
        if cap == 0:
            return 0
        value, self._stamp = _kernel.capped_flow(
            a, b, cap, self._indptr, self._adj_v, self._adj_e, self._ea, self._eb,
            self._alive, self._flow, self._mark_f, self._mark_b, self._par_f,
            self._par_b, self._qf, self._qb, self._stamp, self._touched)
        return value

    def _query(self, s: int, t: int) -> bool:
        a, b = self._index[s], self._index[t]
        if self._deg[a] < self.k or self._deg[b] < self.k:
            return False
        return self.capped(s, t) >= self.k


class SimpleFlowOracle(ConnectivityOracle):
    """Recompute-per-query baseline over a private graph copy."""

    def __init__(self, g: Graph, k: int):
        super().__init__(g, k)
        self._g = g.copy()
        self.counters.preprocess_units += g.m

    def _check_vertex(self, v: int) -> None:
        self._g.incident(v)

    def delete(self, eid: int) -> None:
        self._g.delete_edge(eid)
        self.counters.update_units += 1

    def _query(self, s: int, t: int) -> bool:
        return st_connectivity_capped(self._g, s, t, self.k) >= self.k
