from itertools import combinations

from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, random_graph, relabelled
from critgraphs.canon import (
    are_isomorphic, automorphism_generators, canonical_form, canonical_graph, canonical_labeling,
)
from critgraphs.graph import Graph
from oracles import brute_canonical_code

# Unlabelled graphs on n vertices (OEIS A000088).
UNLABELLED = [1, 1, 2, 4, 11, 34, 156]


def all_labelled(n):
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for t, p in enumerate(pairs) if bits >> t & 1])


def test_counts_isomorphism_classes_up_to_six():
    for n, expected in enumerate(UNLABELLED):
        assert len({canonical_form(g) for g in all_labelled(n)}) == expected


def test_eleven_graphs_on_four_vertices_are_distinct():
    forms = {}
    for g in all_labelled(4):
        forms.setdefault(canonical_form(g), brute_canonical_code(g))
    assert len(forms) == 11
    assert len(set(forms.values())) == 11


@given(graphs(max_n=10), st.randoms(use_true_random=False))
def test_relabelling_invariance(g, rnd):
    assert canonical_form(relabelled(g, rnd)) == canonical_form(g)


@given(graphs(max_n=8))
def test_canonical_graph_is_isomorphic_copy(g):
    assert brute_canonical_code(canonical_graph(g)) == brute_canonical_code(g)


@given(graphs(max_n=9))
def test_automorphisms_preserve_edges(g):
    edges = set(g.edges())
    for perm in automorphism_generators(g):
        assert sorted(perm) == list(range(g.n))
        assert {tuple(sorted((perm[u], perm[v]))) for u, v in edges} == edges


def test_labeling_is_a_permutation():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    order, _ = canonical_labeling(g.adj)
    assert sorted(order) == list(range(5))


@settings(max_examples=50)
@given(st.randoms(use_true_random=False))
def test_distinguishes_like_oracle(rnd):
    gs = [random_graph(rnd, 6) for _ in range(20)]
    pairs = [(canonical_form(g), brute_canonical_code(g)) for g in gs]
    for (fa, oa), (fb, ob) in combinations(pairs, 2):
        assert (fa == fb) == (oa == ob)


def test_regular_graphs():
    # Hard inputs for refinement: vertex-transitive graphs with equal degrees.
    petersen = Graph.from_edges(10, [(i, (i + 1) % 5) for i in range(5)]
                                + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
                                + [(i, i + 5) for i in range(5)])
    prism = Graph.from_edges(10, [(i, (i + 1) % 5) for i in range(5)]
                             + [(5 + i, 5 + (i + 1) % 5) for i in range(5)]
                             + [(i, i + 5) for i in range(5)])
    assert not are_isomorphic(petersen, prism)
    assert are_isomorphic(petersen, petersen.relabel([3, 1, 4, 0, 5, 9, 2, 6, 8, 7]))
    assert canonical_form(Graph.complete(13)) == canonical_form(Graph.complete(13).relabel(list(range(12, -1, -1))))
