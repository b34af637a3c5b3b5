import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from critgraphs.graph import Graph
from critgraphs.patterns import (
    PatternFamily, UnknownPatternError, contains_induced, first_member_found, is_embedding,
    is_family_free, named_graph,
)
from oracles import brute_contains_induced, labelled_copies

SMALL = ["P3", "P4", "P5", "C4", "K3", "chair", "cricket", "2P2", "P3+P1"]
COPIES = {name: labelled_copies(named_graph(name)) for name in SMALL}


def test_named_shapes():
    chair = named_graph("chair")
    assert (chair.n, chair.num_edges()) == (5, 4)
    assert sorted(chair.degrees()) == [1, 1, 1, 2, 3]
    cricket = named_graph("cricket")
    assert (cricket.n, cricket.num_edges()) == (5, 5)
    assert sorted(cricket.degrees()) == [1, 1, 2, 2, 4]
    assert named_graph("C_7").num_edges() == 7
    assert named_graph("K5-e").num_edges() == 9
    p4_2p1 = named_graph("P4+2P1")
    assert (p4_2p1.n, p4_2p1.num_edges()) == (6, 3)
    assert named_graph("2P2").num_edges() == 2


@pytest.mark.parametrize("bad", ["", "P0", "C2", "banana", "P4+", "3"])
def test_unknown_names(bad):
    with pytest.raises(UnknownPatternError):
        named_graph(bad)


def test_family_parsing():
    fam = PatternFamily.from_names("P5, chair")
    assert fam.names == ["P5", "chair"]
    with pytest.raises(ValueError):
        PatternFamily.from_names("P5,P5")


def test_chair_row_a_contains_p5():
    # Chair case-table row {a}: x adjacent only to a on the path a-b-c-d.
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 0)])
    emb = contains_induced(g, named_graph("P5"))
    assert emb is not None and is_embedding(g, named_graph("P5"), emb)
    assert set(emb) == {0, 1, 2, 3, 4}


def test_c5_is_p5_free_and_p5_is_not():
    c5 = named_graph("C5")
    fam = PatternFamily.from_names("P5")
    assert is_family_free(c5, fam)
    assert first_member_found(named_graph("P5"), fam)[0] == "P5"


def test_anchor_restricts_copies():
    # Triangle plus an isolated vertex: only triangle vertices anchor a K3.
    g = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2)])
    k3 = named_graph("K3")
    assert contains_induced(g, k3, anchor=1) is not None
    assert contains_induced(g, k3, anchor=3) is None


@given(graphs(max_n=8), st.sampled_from(SMALL))
def test_matches_oracle(g, name):
    h = named_graph(name)
    emb = contains_induced(g, h)
    assert (emb is not None) == brute_contains_induced(g, h, COPIES[name])
    if emb is not None:
        assert is_embedding(g, h, emb)
