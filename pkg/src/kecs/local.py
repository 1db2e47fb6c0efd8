"""Local discovery of the connected component of G[kECC(u)] containing u."""

from __future__ import annotations

from collections import deque

from kecs.graph import Graph
from kecs.oracle import ConnectivityOracle


class PreconditionError(RuntimeError):
    pass


class LocalSearch:
    """BFS from ``seed`` that only enters vertices k-connected to ``seed``.

    One :meth:`step` examines one edge endpoint, so a finished search has
    performed exactly ``vol(visited)`` steps. Verdicts are memoised for the
    lifetime of the search only; the graph changes between searches.
    """

    def __init__(self, g: Graph, oracle: ConnectivityOracle, seed: int):
        self.g = g
        self.oracle = oracle
        self.seed = seed
        self.visited = [seed]
        self._inside = {seed}
        self.rejected: set[int] = set()
        self.frontier = deque(g.incident(seed).values())
        self.scans = 0

    @property
    def done(self) -> bool:
        return not self.frontier

    def step(self) -> None:
        w = self.frontier.popleft()
        self.scans += 1
        if w in self._inside or w in self.rejected:
            return
        if self.oracle.is_k_connected(self.seed, w):
            self._inside.add(w)
            self.visited.append(w)
            self.frontier.extend(self.g.incident(w).values())
        else:
            self.rejected.add(w)

    def run(self) -> list[int]:
        while self.frontier:
            self.step()
        return self.visited

    def __contains__(self, v: int) -> bool:
        return v in self._inside


def local_component(g: Graph, oracle: ConnectivityOracle, u: int) -> list[int]:
    """Vertices of u's component in G[kECC(u)], in discovery order."""
    return LocalSearch(g, oracle, u).run()


def race(g: Graph, oracle: ConnectivityOracle, u: int, v: int) -> tuple[LocalSearch, LocalSearch]:
    """Grow the searches from ``u`` and ``v`` alternately, one scan each.

    Returns ``(winner, loser)``. The winner is the first search to finish;
    ``u`` moves first, so ties go to ``u``. A finished search has volume at
    most the loser's full component volume.
    """
    su = LocalSearch(g, oracle, u)
    sv = LocalSearch(g, oracle, v)
    while True:
        if su.done:
            return su, sv
        if sv.done:
            return sv, su
        su.step()
        if v in su:
            raise PreconditionError(f"{u} and {v} are k-edge-connected")
        if su.done:
            return su, sv
        sv.step()
        if u in sv:
            raise PreconditionError(f"{u} and {v} are k-edge-connected")


def race_smaller(g: Graph, oracle: ConnectivityOracle, u: int, v: int) -> list[int]:
    return race(g, oracle, u, v)[0].visited
