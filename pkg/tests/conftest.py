import contextlib
import random

import pytest
from hypothesis import strategies as st

from kecs.graph import Graph

_ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


@contextlib.contextmanager
def criterion(number: int, title: str):
    """Record a pass/fail line for an acceptance criterion."""
    detail = {}
    try:
        yield detail
    except BaseException as exc:
        _ACCEPTANCE[number] = (title, False, f"{type(exc).__name__}: {str(exc)[:200]}")
        raise
    _ACCEPTANCE[number] = (title, True, ", ".join(f"{k}={v}" for k, v in detail.items()))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, ok, detail = _ACCEPTANCE[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number}. {title} ({detail})")


def random_graph(rng: random.Random, n: int, m: int) -> Graph:
    g = Graph(range(n))
    if n >= 2:
        for _ in range(m):
            u, v = rng.sample(range(n), 2)
            g.add_edge(u, v)
    return g


def varied_graph(rng: random.Random, nmax: int) -> Graph:
    """Random multigraph whose density ranges from forest-like to dense."""
    n = rng.randint(1, nmax)
    m = rng.randint(0, int(n * rng.choice([0.8, 1.5, 2.5, 4.0])))
    return random_graph(rng, n, m)


def clustered_graph(rng: random.Random, n: int, k: int, heavy: bool = False) -> Graph:
    """Dense blocks, a few links between them, and some low-degree strays."""
    g = Graph(range(n))
    verts = list(range(n))
    rng.shuffle(verts)
    blocks = []
    i = 0
    while i < n:
        size = rng.randint(1, max(1, n // 3))
        blocks.append(verts[i:i + size])
        i += size
    for b in blocks:
        if len(b) < 2:
            continue
        per_vertex = rng.randint(k, 3 * k) * (20 if heavy else 1)
        for _ in range(per_vertex * len(b) // 2):
            u, v = rng.sample(b, 2)
            g.add_edge(u, v)
    for _ in range(rng.randint(0, 2 * len(blocks))):
        a, b = rng.sample(range(len(blocks)), 2) if len(blocks) > 1 else (0, 0)
        if a == b:
            continue
        for _ in range(rng.randint(1, k + 1)):
            g.add_edge(rng.choice(blocks[a]), rng.choice(blocks[b]))
    return g


@st.composite
def multigraphs(draw, max_n=10, max_m=30):
    n = draw(st.integers(1, max_n))
    if n < 2:
        return Graph(range(n))
    pairs = draw(st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1]),
        max_size=max_m))
    return Graph.from_edges(n, pairs)


@pytest.fixture
def rng():
    return random.Random(12345)
