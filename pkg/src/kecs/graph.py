"""Undirected multigraph with stable vertex and edge ids.

Vertices are nonnegative integers. Edges carry integer ids that are never
reused, so parallel edges stay distinguishable across deletions and across
induced subgraphs (which keep the parent's ids).
"""

from __future__ import annotations

import io
from collections import deque
from typing import Iterable, Iterator, TextIO


class GraphError(ValueError):
    pass


class ParseError(GraphError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


class Graph:
    """Mutable undirected multigraph without self-loops.

    ``adj[u]`` maps edge id -> other endpoint, so the incidence list of ``u``
    is ``adj[u].items()`` and ``deg(u) == len(adj[u])``.
    """

    def __init__(self, vertices: Iterable[int] = ()):
        self._adj: dict[int, dict[int, int]] = {}
        self._edges: dict[int, tuple[int, int]] = {}
        self._next_edge = 0
        for v in vertices:
            self.add_vertex(v)

    # -- construction -----------------------------------------------------

    def add_vertex(self, v: int) -> None:
        if v < 0:
            raise GraphError(f"negative vertex id {v}")
        self._adj.setdefault(v, {})

    def add_edge(self, u: int, v: int, eid: int | None = None) -> int:
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if u not in self._adj or v not in self._adj:
            raise GraphError(f"no such vertex {u if u not in self._adj else v}")
        if eid is None:
            eid = self._next_edge
        elif eid in self._edges:
            raise GraphError(f"duplicate edge id {eid}")
        self._next_edge = max(self._next_edge, eid + 1)
        self._edges[eid] = (u, v)
        self._adj[u][eid] = v
        self._adj[v][eid] = u
        return eid

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        g = cls(range(n))
        for u, v in edges:
            g.add_edge(u, v)
        return g

    def copy(self) -> "Graph":
        h = Graph()
        h._adj = {v: dict(inc) for v, inc in self._adj.items()}
        h._edges = dict(self._edges)
        h._next_edge = self._next_edge
        return h

    # -- queries ------------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return len(self._edges)

    def vertices(self) -> list[int]:
        return list(self._adj)

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def has_edge(self, eid: int) -> bool:
        return eid in self._edges

    def edge_ids(self) -> list[int]:
        return list(self._edges)

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(eid, u, v)`` in edge-id insertion order."""
        for eid, (u, v) in self._edges.items():
            yield eid, u, v

    def endpoints(self, eid: int) -> tuple[int, int]:
        try:
            return self._edges[eid]
        except KeyError:
            raise GraphError(f"no such edge {eid}") from None

    def incident(self, v: int) -> dict[int, int]:
        """Incidence map of ``v``: edge id -> neighbour. Do not mutate."""
        try:
            return self._adj[v]
        except KeyError:
            raise GraphError(f"no such vertex {v}") from None

    def neighbors(self, v: int) -> list[int]:
        return list(self.incident(v).values())

    def degree(self, v: int) -> int:
        return len(self.incident(v))

    def volume(self, s: Iterable[int]) -> int:
        return sum(self.degree(v) for v in s)

    def edges_between(self, u: int, v: int) -> list[int]:
        """Ids of all parallel edges joining ``u`` and ``v``, ascending."""
        inc = self.incident(u)
        self.incident(v)
        return sorted(e for e, w in inc.items() if w == v)

    def cut_edges(self, s: Iterable[int]) -> list[int]:
        """Edges with exactly one endpoint in ``s`` (parallels counted)."""
        s = self._checked_set(s)
        out = []
        for v in s:
            for eid, w in self._adj[v].items():
                if w not in s:
                    out.append(eid)
        return out

    def _checked_set(self, s: Iterable[int]) -> set[int]:
        s = set(s)
        for v in s:
            if v not in self._adj:
                raise GraphError(f"no such vertex {v}")
        return s

    # -- mutation -----------------------------------------------------------

    def delete_edge(self, eid: int) -> tuple[int, int]:
        try:
            u, v = self._edges.pop(eid)
        except KeyError:
            raise GraphError(f"no such edge {eid}") from None
        del self._adj[u][eid]
        del self._adj[v][eid]
        return u, v

    def delete_vertices(self, s: Iterable[int]) -> list[int]:
        """Remove ``s`` with every incident edge; return the removed edge ids."""
        s = self._checked_set(s)
        removed = []
        for v in s:
            for eid in list(self._adj[v]):
                if eid in self._edges:
                    self.delete_edge(eid)
                    removed.append(eid)
        for v in s:
            del self._adj[v]
        return removed

    # -- derived graphs -------------------------------------------------------

    def induced_subgraph(self, s: Iterable[int]) -> "Graph":
        s = self._checked_set(s)
        h = Graph()
        for v in sorted(s):
            h._adj[v] = {}
        for v in s:
            for eid, w in self._adj[v].items():
                if w in s:
                    h._adj[v][eid] = w
                    h._edges[eid] = self._edges[eid]
        # keep edge-id order so iteration matches the parent
        h._edges = {e: h._edges[e] for e in sorted(h._edges)}
        for v in h._adj:
            h._adj[v] = {e: h._adj[v][e] for e in sorted(h._adj[v])}
        h._next_edge = self._next_edge
        return h

    def edge_subgraph(self, eids: Iterable[int]) -> "Graph":
        """Same vertex set, only the listed edges (ids kept)."""
        h = Graph(self._adj)
        for eid in sorted(eids):
            u, v = self.endpoints(eid)
            h.add_edge(u, v, eid)
        h._next_edge = self._next_edge
        return h

    def connected_components(self) -> "VertexPartition":
        seen: set[int] = set()
        parts = []
        for root in sorted(self._adj):
            if root in seen:
                continue
            seen.add(root)
            comp = [root]
            queue = deque([root])
            while queue:
                x = queue.popleft()
                for w in self._adj[x].values():
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        queue.append(w)
            parts.append(comp)
        return VertexPartition(parts, self._adj)

    def relabeled(self) -> tuple["Graph", list[int]]:
        """Compact vertices to ``0..n-1`` in ascending order.

        Returns the new graph (edges renumbered in id order) and the label
        list mapping new id -> old id.
        """
        labels = sorted(self._adj)
        index = {v: i for i, v in enumerate(labels)}
        h = Graph(range(len(labels)))
        for _, u, v in self.edges():
            h.add_edge(index[u], index[v])
        return h, labels

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class VertexPartition:
    """Disjoint vertex sets covering ``universe``; compared as a set of sets."""

    def __init__(self, parts: Iterable[Iterable[int]], universe: Iterable[int] | None = None):
        self.parts = [frozenset(p) for p in parts]
        covered: set[int] = set()
        for p in self.parts:
            if not p:
                raise GraphError("empty part")
            if covered & p:
                raise GraphError("parts overlap")
            covered |= p
        if universe is not None and covered != set(universe):
            raise GraphError("parts do not cover the universe")
        self.universe = frozenset(covered)

    def canonical(self) -> list[list[int]]:
        return sorted(sorted(p) for p in self.parts)

    def part_index(self) -> dict[int, int]:
        return {v: i for i, p in enumerate(self.parts) for v in p}

    def refines(self, other: "VertexPartition") -> bool:
        where = other.part_index()
        return all(len({where[v] for v in p}) == 1 for p in self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, VertexPartition):
            return NotImplemented
        return set(self.parts) == set(other.parts)

    def __hash__(self):
        return hash(frozenset(self.parts))

    def __repr__(self) -> str:
        return f"VertexPartition({self.canonical()})"


# -- text formats ---------------------------------------------------------------


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_graph(stream: TextIO | str) -> Graph:
    """Read the edge-list format: a vertex count, then one ``u v`` per edge.

    Blank lines and ``#`` comments are ignored. Repeated lines become
    parallel edges.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    g = None
    n = 0
    for lineno, raw in enumerate(stream, 1):
        line = _strip(raw)
        if not line:
            continue
        fields = line.split()
        if g is None:
            if len(fields) != 1 or not fields[0].isdigit():
                raise ParseError(lineno, f"expected vertex count, got {raw.strip()!r}")
            n = int(fields[0])
            g = Graph(range(n))
            continue
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise ParseError(lineno, f"expected 'u v', got {raw.strip()!r}")
        u, v = int(fields[0]), int(fields[1])
        if u == v:
            raise ParseError(lineno, f"self-loop at vertex {u}")
        if u >= n or v >= n:
            raise ParseError(lineno, f"vertex out of range 0..{n - 1}")
        g.add_edge(u, v)
    if g is None:
        raise ParseError(0, "missing vertex count")
    return g


def serialize_graph(g: Graph) -> str:
    """Inverse of :func:`parse_graph`; vertices are compacted first."""
    h, _ = g.relabeled()
    lines = [str(h.n)]
    lines.extend(f"{u} {v}" for _, u, v in h.edges())
    return "\n".join(lines) + "\n"


def format_partition(p: VertexPartition | Iterable[Iterable[int]]) -> str:
    """One part per line, ascending ids, lines ordered by smallest member."""
    parts = p.canonical() if isinstance(p, VertexPartition) else sorted(sorted(x) for x in p)
    return "".join(" ".join(map(str, part)) + "\n" for part in parts)


def parse_partition(stream: TextIO | str) -> VertexPartition:
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    return VertexPartition([int(x) for x in line.split()] for line in stream if line.strip())
