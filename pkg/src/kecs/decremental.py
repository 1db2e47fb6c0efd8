"""Maintain maximal k-edge-connected subgraphs under edge deletions."""

from __future__ import annotations

from kecs.graph import Graph, GraphError, VertexPartition
from kecs.oracle import CostCounters, FlowOracle
from kecs.static import OracleFactory, Piece, WorkList, _Run, maximal_kecs


class DecrementalKECS:
    """Partition of ``V`` kept equal to the maximal k-ECS of the live graph.

    Each part keeps its own induced graph and, once the part has been hit
    by a deletion, its own oracle. Deleting an edge between two parts
    changes nothing; deleting an edge inside a part reruns the peeling on
    that part with the work list ``{x, y}``.
    """

    def __init__(self, g: Graph, k: int, *, use_certificate: bool = True,
                 oracle_factory: OracleFactory = FlowOracle):
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        self.k = k
        self.oracle_factory = oracle_factory
        self.live = g.copy()
        result = maximal_kecs(g, k, use_certificate, oracle_factory=oracle_factory)
        self._counters = [result.stats]
        self.recursion_depth = result.recursion_depth
        self._parts: dict[int, Piece] = {}
        self._part_of: dict[int, int] = {}
        self._next_id = 0
        for p in result.partition.canonical():
            self._adopt(Piece(p, g.induced_subgraph(p), None))

    def _adopt(self, piece: Piece) -> int:
        pid = self._next_id
        self._next_id += 1
        self._parts[pid] = piece
        for v in piece.vertices:
            self._part_of[v] = pid
        return pid

    def _part(self, v: int) -> int:
        try:
            return self._part_of[v]
        except KeyError:
            raise GraphError(f"no such vertex {v}") from None

    def delete(self, u: int, v: int) -> list[int]:
        """Delete the lowest-id surviving edge ``u``-``v``; return new part ids."""
        pu, pv = self._part(u), self._part(v)
        parallel = self.live.edges_between(u, v)
        if not parallel:
            raise GraphError(f"no edge {u}-{v}")
        eid = parallel[0]
        self.live.delete_edge(eid)
        if pu != pv:
            return []
        piece = self._parts[pu]
        h = piece.graph
        h.delete_edge(eid)
        run = _Run(self.k, self.oracle_factory, None)
        oracle = piece.oracle
        if oracle is None:
            oracle = run.new_oracle(h)
        else:
            oracle.delete(eid)
        pieces = run.main(h, WorkList((u, v)), oracle, 1)
        self._counters.extend(run.counters)
        self.recursion_depth = max(self.recursion_depth, run.depth)
        if len(pieces) == 1:
            piece.oracle = pieces[0].oracle
            return []
        del self._parts[pu]
        return [self._adopt(p) for p in pieces]

    def same_part(self, u: int, v: int) -> bool:
        return self._part(u) == self._part(v)

    def current_partition(self) -> VertexPartition:
        return VertexPartition([p.vertices for p in self._parts.values()])

    def part_graph(self, v: int) -> Graph:
        return self._parts[self._part(v)].graph

    @property
    def counters(self) -> CostCounters:
        total = CostCounters()
        for c in self._counters:
            total += c
        return total

