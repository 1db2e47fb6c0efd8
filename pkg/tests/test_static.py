import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kecs.generators import complete, cycle, path, random_multigraph, two_cliques
from kecs.graph import Graph, VertexPartition
from kecs.oracle import SimpleFlowOracle, st_connectivity_capped
from kecs.reference import (
    appendix_supergraph,
    bridge_components,
    brute_partition_recursive_mincut,
    enumerate_k_cuts,
    global_min_cut,
    kecc_components,
)
from kecs.static import WorkList, depth_bound, main, maximal_kecs

from conftest import multigraphs, random_graph

QUERY_CONSTANT = 8


def parts(pieces):
    return VertexPartition(p.vertices for p in pieces)


def test_worklist_order():
    L = WorkList([3, 1, 2])
    assert L.first_pair() == (3, 1)
    L.discard(1)
    L.add(3)
    L.add(7)
    assert list(L) == [3, 2, 7] and len(L) == 3 and 7 in L


def test_main_path_splits():
    g = path(3)
    assert parts(main(g, g.vertices(), 2)).canonical() == [[0], [1], [2]]


def test_main_cycle_whole():
    g = cycle(4)
    assert parts(main(g, g.vertices(), 2)).canonical() == [[0, 1, 2, 3]]


def test_main_two_cliques():
    g = two_cliques(4, 4, 2)
    want = brute_partition_recursive_mincut(g, 3)
    assert want.canonical() == [[0, 1, 2, 3], [4, 5, 6, 7]]
    assert parts(main(g.copy(), g.vertices(), 3)) == want


def test_main_finer_than_kecc_on_detour_gadget():
    g = two_cliques(4, 4, 2, detours=1)
    got = parts(main(g.copy(), g.vertices(), 3))
    assert got == brute_partition_recursive_mincut(g, 3)
    kecc = kecc_components(g, 3)
    assert got.refines(kecc) and got != kecc


def test_main_consumes_graph_and_keeps_oracle():
    g = two_cliques(4, 6, 1)
    pieces = main(g, g.vertices(), 3)
    last = pieces[-1]
    assert last.graph is g
    assert sorted(g.vertices()) == last.vertices == [4, 5, 6, 7, 8, 9]
    assert last.oracle.is_k_connected(4, 9)


def test_maximal_kecs_trivial_inputs():
    assert len(maximal_kecs(Graph(), 3).partition) == 0
    g = random_multigraph(15, 12, seed=2)
    r = maximal_kecs(g, 1)
    assert r.partition == g.connected_components()
    assert r.stats.query_count == 0
    with pytest.raises(ValueError):
        maximal_kecs(g, 0)


def test_maximal_kecs_leaves_input_alone():
    g = random_multigraph(20, 50, seed=3)
    before = list(g.edges())
    maximal_kecs(g, 3)
    assert list(g.edges()) == before


def test_dummy_path_supergraph_partition():
    g = random_multigraph(20, 45, seed=6)
    h = appendix_supergraph(g, 3)
    dummies = set(h.vertices()) - set(g.vertices())
    base = brute_partition_recursive_mincut(g, 3)
    want = VertexPartition(list(base) + [[d] for d in dummies])
    assert brute_partition_recursive_mincut(h, 3) == want
    assert maximal_kecs(h, 3).partition == want


@settings(max_examples=150, deadline=None)
@given(multigraphs(max_n=12, max_m=40), st.integers(1, 5))
def test_matches_brute_force(g, k):
    assert maximal_kecs(g, k).partition == brute_partition_recursive_mincut(g, k)


@settings(max_examples=60, deadline=None)
@given(multigraphs(max_n=12, max_m=40), st.integers(2, 5))
def test_simple_oracle_gives_same_partition(g, k):
    a = maximal_kecs(g, k)
    b = maximal_kecs(g, k, oracle_factory=SimpleFlowOracle)
    assert a.partition == b.partition
    assert a.stats.query_count == b.stats.query_count


def test_parts_are_certified():
    rng = random.Random(31)
    for _ in range(60):
        n = rng.randint(2, 30)
        g = random_graph(rng, n, rng.randint(0, 4 * n))
        k = rng.randint(2, 5)
        p = maximal_kecs(g, k).partition
        where = p.part_index()
        for part in p:
            if len(part) > 1:
                assert global_min_cut(g.induced_subgraph(part))[0] >= k
        # maximality: merging the two parts an edge joins never stays k-connected
        for _, a, b in g.edges():
            if where[a] != where[b]:
                merged = p.parts[where[a]] | p.parts[where[b]]
                assert global_min_cut(g.induced_subgraph(merged))[0] < k
        assert p.refines(kecc_components(g, k))


def test_crossing_edge_can_join_k_connected_pair():
    # the bridges of the detour gadget cross parts although lambda_G = 3 there
    g = two_cliques(4, 4, 2, detours=1)
    where = maximal_kecs(g, 3).partition.part_index()
    a, b = g.endpoints(g.edges_between(0, 4)[0])
    assert where[a] != where[b]
    assert st_connectivity_capped(g, a, b, 3) == 3


def test_k2_matches_bridges():
    rng = random.Random(32)
    for _ in range(100):
        n = rng.randint(1, 40)
        g = random_graph(rng, n, rng.randint(0, 2 * n))
        assert maximal_kecs(g, 2).partition == bridge_components(g)


def test_certificate_does_not_change_answer():
    rng = random.Random(33)
    for _ in range(40):
        n = rng.randint(2, 12)
        g = random_graph(rng, n, rng.randint(0, 40 * n))
        k = rng.randint(1, 4)
        assert maximal_kecs(g, k).partition == maximal_kecs(g, k, use_certificate=False).partition


def test_depth_and_query_bounds():
    rng = random.Random(34)
    for _ in range(100):
        n = rng.randint(2, 40)
        g = random_graph(rng, n, rng.randint(0, 4 * n))
        k = rng.randint(2, 5)
        r = maximal_kecs(g, k, use_certificate=False)
        assert r.recursion_depth <= depth_bound(g.m)
        assert r.stats.query_count <= QUERY_CONSTANT * g.m * depth_bound(g.m)


def test_depth_bound_values():
    assert depth_bound(0) == 1 and depth_bound(1) == 1
    assert depth_bound(2) == 2 and depth_bound(1000) == math.ceil(math.log2(1000)) + 1


def test_nested_recursion_happens():
    # blocks inside blocks force recursive calls below the top level
    g = Graph(range(16))
    for base in (0, 8):
        for half in (base, base + 4):
            for i in range(4):
                for j in range(i + 1, 4):
                    g.add_edge(half + i, half + j)
        g.add_edge(base, base + 4)
        g.add_edge(base + 1, base + 5)
    g.add_edge(3, 11)
    r = maximal_kecs(g, 3)
    assert r.partition == brute_partition_recursive_mincut(g, 3)
    assert len(r.partition) == 4 and r.recursion_depth == 2


def test_invariant_every_cut_meets_worklist():
    rng = random.Random(35)
    violations = []

    def observe(graph, L):
        missing = enumerate_k_cuts(graph, k).missing(list(L))
        violations.extend(missing)

    for _ in range(40):
        n = rng.randint(2, 10)
        g = random_graph(rng, n, rng.randint(0, 3 * n))
        k = rng.randint(2, 4)
        maximal_kecs(g, k, use_certificate=False, observer=observe)
    assert violations == []


def test_complete_graph_single_part():
    for n in range(2, 8):
        assert len(maximal_kecs(complete(n), n - 1).partition) == 1
        assert len(maximal_kecs(complete(n), n).partition) == n
