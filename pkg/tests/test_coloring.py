import pytest
from hypothesis import given

from conftest import graphs
from critgraphs.coloring import (
    chromatic_number, clique_number, independence_number, is_k_colorable, is_k_vertex_critical,
    maximum_independent_set, optimal_coloring,
)
from critgraphs.graph import Graph, join, members
from critgraphs.patterns import named_graph
from oracles import brute_chromatic_number, brute_is_critical


def c5_join_k2():
    return join(named_graph("C5"), Graph.complete(2))


def test_small_values():
    assert chromatic_number(Graph.empty(0)) == 0
    assert chromatic_number(Graph.empty(3)) == 1
    assert chromatic_number(named_graph("C5")) == 3
    assert chromatic_number(named_graph("P5")) == 2
    assert chromatic_number(c5_join_k2()) == 5


def test_c5_join_k2_is_5_critical():
    report = is_k_vertex_critical(c5_join_k2(), 5)
    assert report.verdict and report.per_vertex == (4,) * 7


def test_short_circuit_on_low_degree():
    report = is_k_vertex_critical(named_graph("P5"), 5)
    assert not report.verdict and report.per_vertex is None


def test_k_must_be_positive():
    with pytest.raises(ValueError):
        is_k_colorable(Graph.complete(2), 0)


def test_certificate():
    g = c5_join_k2()
    assert is_k_colorable(g, 4) is None
    cert = is_k_colorable(g, 5)
    assert cert.is_valid_for(g)
    assert optimal_coloring(g).k == 5


@given(graphs(max_n=8))
def test_chromatic_number_matches_oracle(g):
    chi = chromatic_number(g)
    assert chi == brute_chromatic_number(g)
    assert optimal_coloring(g).is_valid_for(g)


@given(graphs(max_n=7))
def test_criticality_matches_oracle(g):
    for k in range(1, 5):
        assert is_k_vertex_critical(g, k).verdict == brute_is_critical(g, k)


@given(graphs(max_n=8))
def test_clique_and_independence_bounds(g):
    w = clique_number(g)
    a = independence_number(g)
    chi = chromatic_number(g)
    assert w <= chi
    if g.n:
        assert chi * a >= g.n
    s = maximum_independent_set(g)
    assert len(members(s)) == a
    assert not any(g.has_edge(u, v) for u in members(s) for v in members(s))
