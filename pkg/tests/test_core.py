from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings

from hyperps import HypergraphError, UnknownNodeError, build, count_clique_edges
from hyperps.core import BipartiteEdge, Hyperedge, eid, vid

from conftest import member_lists


def test_build_fig1(fig1):
    assert fig1.num_vertices == 5
    assert fig1.num_hyperedges == 4
    assert sorted(fig1.vertices) == [1, 2, 3, 4, 5]
    assert list(fig1.hyperedges) == [0, 1, 2, 3]


def test_singleton_hyperedge():
    h = build([[7]])
    assert (h.num_vertices, h.num_hyperedges, h.cardinality(0)) == (1, 1, 1)
    assert h.bipartite_edges() == [BipartiteEdge(7, 0)]
    assert h.to_clique_graph().num_edges == 0


def test_duplicate_members_are_dropped():
    h = build([[1, 1, 2]])
    assert h.members(0) == (1, 2)
    assert h.duplicate_members == 1


def test_empty_hyperedge_names_index():
    with pytest.raises(HypergraphError, match="index 2"):
        build([[1], [2], []])


@pytest.mark.parametrize("bad", [[-1], [1.5], ["a"], [2**64]])
def test_bad_ids(bad):
    with pytest.raises(HypergraphError):
        build([bad])


def test_negative_weight_rejected():
    with pytest.raises(HypergraphError):
        build([([1, 2], -1.0)])


def test_weights_and_explicit_ids():
    h = build([([1, 2], 2.5), [3]], ids=[10, 4])
    assert list(h.hyperedges) == [4, 10]
    assert h.weight(10) == 2.5 and h.weight(4) == 1.0


def test_bipartite_edges_fig1(fig1):
    edges = fig1.bipartite_edges()
    assert len(edges) == 11
    assert edges[:3] == [(1, 0), (2, 0), (1, 1)]


def test_degree_and_cardinality(fig1):
    assert fig1.degree(1) == 3
    assert fig1.cardinality(1) == 4
    assert [fig1.degree(v) for v in range(1, 6)] == [3, 2, 2, 3, 1]
    with pytest.raises(UnknownNodeError):
        fig1.degree(99)
    with pytest.raises(UnknownNodeError):
        fig1.cardinality(99)


def test_isolated_vertex_from_attrs():
    h = build([[1, 2]], vertex_attrs={9: "lonely"})
    assert h.degree(9) == 0
    assert h.vertices[9] == "lonely"
    assert h.without_isolated().num_vertices == 2


def test_clique_fig1(fig1):
    g = fig1.to_clique_graph(lambda items: sorted(w for _, w in items))
    assert set(g.edges) == {(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (1, 5), (4, 5)}
    # {1,2} sits in hyperedges 0 and 1, {3,4} in 1 and 3
    assert g.edges[(1, 2)] == [1.0, 1.0]
    assert g.edges[(3, 4)] == [1.0, 1.0]
    assert g.edges[(1, 5)] == [1.0]


def test_clique_single_hyperedge_merge_inputs():
    seen = []
    h = build([[1, 2, 3]], hyperedge_attrs={0: "x"})
    g = h.to_clique_graph(lambda items: seen.append(items) or len(items))
    assert g.num_edges == 3
    assert all(items == [("x", 1.0)] for items in seen)


def test_tagged_ids_are_distinct():
    assert vid(3) != eid(3)
    assert {vid(3): 1, eid(3): 2}[vid(3)] == 1


def test_with_attrs_keeps_topology(fig1):
    h = fig1.map_vertices(lambda v, a: v * 10)
    assert h.vertices[3] == 30
    assert h.bipartite_edges() == fig1.bipartite_edges()
    assert fig1.vertices[3] is None


def test_unknown_member_rejected():
    with pytest.raises(HypergraphError):
        from hyperps import Hypergraph
        Hypergraph({1: None}, [Hyperedge(0, (1, 2))])


@settings(max_examples=200, deadline=None)
@given(member_lists)
def test_degree_sum_equals_edges(lists):
    h = build(lists)
    n = len(h.bipartite_edges())
    assert sum(h.degree(v) for v in h.vertices) == n
    assert sum(h.cardinality(e) for e in h.hyperedges) == n


@settings(max_examples=200, deadline=None)
@given(member_lists)
def test_clique_count_brute_force(lists):
    h = build(lists)
    pairs = set()
    total = 0
    for m in lists:
        total += comb(len(m), 2)
        pairs.update(frozenset(p) for p in combinations(m, 2))
    g = h.to_clique_graph()
    assert g.num_edges == len(pairs) <= total
    assert (g.num_edges == total) == (len(pairs) == total)
    assert all(u < w for u, w in g.edges)
    assert count_clique_edges(h) == (len(pairs), True)


def test_clique_count_cap_reports_lower_bound():
    h = build([list(range(20)), list(range(10, 30))])
    n, exact = count_clique_edges(h)
    assert exact and n == 2 * comb(20, 2) - comb(10, 2)
    low, exact = count_clique_edges(h, cap=100)
    assert not exact and low <= n
