"""Maximal k-edge-connected subgraphs by oracle-driven peeling."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable

from kecs.graph import Graph, VertexPartition
from kecs.local import race
from kecs.oracle import ConnectivityOracle, CostCounters, FlowOracle
from kecs.sparsify import kecs_certificate

OracleFactory = Callable[[Graph, int], ConnectivityOracle]
Observer = Callable[[Graph, "WorkList"], None]


class WorkList:
    """Insertion-ordered vertex set; the pair examined is always the two oldest."""

    def __init__(self, items: Iterable[int] = ()):
        self._items = dict.fromkeys(items)

    def __len__(self) -> int:
        return len(self._items)

    def __contains__(self, v: int) -> bool:
        return v in self._items

    def __iter__(self):
        return iter(self._items)

    def first_pair(self) -> tuple[int, int]:
        it = iter(self._items)
        return next(it), next(it)

    def add(self, v: int) -> None:
        self._items.setdefault(v)

    def discard(self, v: int) -> None:
        self._items.pop(v, None)

    def __repr__(self) -> str:
        return f"WorkList({list(self._items)})"


@dataclass
class Piece:
    """One output part together with the graph and oracle it ended with."""

    vertices: list[int]
    graph: Graph
    oracle: ConnectivityOracle | None


@dataclass
class SolverResult:
    partition: VertexPartition
    stats: CostCounters = field(default_factory=CostCounters)
    recursion_depth: int = 0


class _Run:
    def __init__(self, k: int, oracle_factory: OracleFactory, observer: Observer | None):
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        self.k = k
        self.oracle_factory = oracle_factory
        self.observer = observer
        self.counters: list[CostCounters] = []
        self.depth = 0

    def new_oracle(self, g: Graph) -> ConnectivityOracle:
        oracle = self.oracle_factory(g, self.k)
        self.counters.append(oracle.counters)
        return oracle

    def totals(self) -> CostCounters:
        total = CostCounters()
        for c in self.counters:
            total += c
        return total

    def main(self, g: Graph, L: WorkList, oracle: ConnectivityOracle | None, depth: int) -> list[Piece]:
        pieces: list[Piece] = []
        if len(L) > 1:
            self.depth = max(self.depth, depth)
            if oracle is None:
                oracle = self.new_oracle(g)
        while len(L) > 1:
            if self.observer:
                self.observer(g, L)
            u, v = L.first_pair()
            if oracle.is_k_connected(u, v):
                L.discard(v)
                continue
            U = race(g, oracle, u, v)[0].visited
            inside = set(U)
            pieces.extend(self.main(g.induced_subgraph(U), WorkList(U), None, depth + 1))
            outside = [w for x in U for w in g.incident(x).values() if w not in inside]
            for eid in g.delete_vertices(U):
                oracle.delete(eid)
            for x in U:
                L.discard(x)
            for w in outside:
                L.add(w)
        if self.observer:
            self.observer(g, L)
        if g.n:
            pieces.append(Piece(sorted(g.vertices()), g, oracle))
        return pieces


def main(
    g: Graph,
    L: Iterable[int],
    k: int,
    *,
    oracle: ConnectivityOracle | None = None,
    oracle_factory: OracleFactory = FlowOracle,
    observer: Observer | None = None,
) -> list[Piece]:
    """Peel ``g`` into maximal k-edge-connected subgraphs.

    ``g`` is consumed: the final piece owns what is left of it. Every
    k-cut of ``g`` must meet ``L`` (true for ``L = V(g)``). ``oracle``, if
    given, must be bound to the current state of ``g``.
    """
    return _Run(k, oracle_factory, observer).main(g, WorkList(L), oracle, 1)


def depth_bound(m: int) -> int:
    """Upper bound on recursion depth for a graph with ``m`` edges."""
    return math.ceil(math.log2(m)) + 1 if m >= 1 else 1


def maximal_kecs(
    g: Graph,
    k: int,
    use_certificate: bool = True,
    *,
    oracle_factory: OracleFactory = FlowOracle,
    observer: Observer | None = None,
) -> SolverResult:
    """Partition ``V(g)`` into its maximal k-edge-connected subgraphs.

    ``g`` is left untouched. Each connected component is solved separately
    with the work list initialised to all of its vertices.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k == 1:
        return SolverResult(g.connected_components())
    h = kecs_certificate(g, k) if use_certificate else g
    run = _Run(k, oracle_factory, observer)
    parts = []
    for comp in h.connected_components():
        if len(comp) == 1:
            parts.append(comp)
            continue
        verts = sorted(comp)
        for piece in run.main(h.induced_subgraph(verts), WorkList(verts), None, 1):
            parts.append(piece.vertices)
    return SolverResult(VertexPartition(parts, g.vertices()), run.totals(), run.depth)
