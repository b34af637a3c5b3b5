import random

import pytest
from hypothesis import given, settings

from conftest import graphs, random_graph
from critgraphs.graph import Graph, join, members, vset
from critgraphs.patterns import named_graph
from critgraphs.structure import (
    RamseyInstance, check_lemma2, check_ramsey_lemma_degenerate, decompose, exhaustive_ramsey_degenerate,
    find_lemma1_violation, homogeneous_sets, induced_p4s, is_antichain, max_ell,
    min_ell_for_P4_ellP1_freeness, verify_case_table, verify_proof_claims,
)
from oracles import brute_homogeneous, brute_lemma1


def c5_join_k2():
    return join(named_graph("C5"), Graph.complete(2))


@pytest.mark.parametrize("variant,holds,free", [("chair", 13, 2), ("cricket", 10, 5)])
def test_case_tables(variant, holds, free):
    reports = verify_case_table(variant)
    assert len(reports) == 15
    assert all(r.holds for r in reports)
    assert sum(not r.unconstrained for r in reports) == holds
    assert sum(r.unconstrained for r in reports) == free


def test_chair_row_ac_names_exact_set():
    row = [r for r in verify_case_table("chair") if r.claim.endswith("{a,c}")][0]
    assert "chair on {x,z,a,c,d}" in row.note


def test_antichain():
    assert is_antichain([{0, 1}, {1, 2}, {0, 2}])
    assert not is_antichain([{0}, {0, 1}])
    assert not is_antichain([{0, 1}, {0, 1}])
    assert is_antichain([])
    assert is_antichain([0b11])


def test_lemma1_absent_in_critical_graphs():
    assert find_lemma1_violation(c5_join_k2()) is None
    assert find_lemma1_violation(Graph.complete(4)) is None


def test_lemma1_finds_false_twins():
    # 0 and 1 are non-adjacent twins: X={0}, Y={1} is a violation.
    g = Graph.from_edges(3, [(0, 2), (1, 2)])
    assert find_lemma1_violation(g, 1) == ([0], [1])


@settings(max_examples=60)
@given(graphs(min_n=1, max_n=6))
def test_lemma1_matches_oracle(g):
    assert (find_lemma1_violation(g, 2) is not None) == brute_lemma1(g, 2)


@given(graphs(min_n=1, max_n=6))
def test_homogeneous_sets_match_oracle(g):
    got = set(homogeneous_sets(g))
    want = {s for s in range(1, (1 << g.n) - 1) if brute_homogeneous(g, set(members(s)))}
    assert got == want


def test_lemma2_on_critical_graph():
    # The joined K2 is a homogeneous set whose components are 1-critical.
    report = check_lemma2(c5_join_k2(), 5)
    assert report.holds


def test_lemma2_rejects_noncritical_input():
    with pytest.raises(ValueError):
        check_lemma2(named_graph("P5"), 3)


def test_induced_p4_orientations():
    p4 = named_graph("P4")
    assert sorted(induced_p4s(p4)) == [(0, 1, 2, 3), (3, 2, 1, 0)]
    assert induced_p4s(p4, both_orientations=False) == [(0, 1, 2, 3)]


def test_decompose_attachment_sets():
    rng = random.Random(5)
    for _ in range(30):
        g = random_graph(rng, 9, 0.45)
        for p4 in induced_p4s(g)[:3]:
            for variant, wanted in [("chair", {"T": "bc", "U": "abcd"}),
                                    ("cricket", {"L": "ac", "M": "bc", "R": "bd",
                                                 "Lplus": "abc", "Rplus": "bcd"})]:
                d = decompose(g, 5, p4, variant)
                for name, letters in wanted.items():
                    got = members(d.sets[name])
                    want = [x for x in range(g.n) if x not in p4 and
                            "".join("abcd"[i] for i, v in enumerate(p4) if g.has_edge(x, v)) == letters]
                    assert got == want
                assert members(d.A) == [x for x in range(g.n) if x not in p4
                                        and not any(g.has_edge(x, v) for v in p4)]


def test_decompose_rejects_non_path():
    with pytest.raises(ValueError):
        decompose(Graph.complete(4), 5, (0, 1, 2, 3), "chair")


@pytest.mark.parametrize("variant", ["chair", "cricket"])
def test_proof_claims_on_c5_join_k2(variant):
    reports = verify_proof_claims(c5_join_k2(), 5, variant)
    assert reports and all(r.holds for r in reports)


def test_proof_claims_check_preconditions():
    with pytest.raises(ValueError):
        verify_proof_claims(named_graph("C5"), 5, "chair")
    with pytest.raises(ValueError):
        verify_proof_claims(c5_join_k2(), 5, "bull")


def test_ramsey_degenerate_exhaustive():
    report, stats = exhaustive_ramsey_degenerate(4, 4)
    assert report.holds
    assert stats["largest_antichain"] <= 1


def test_ramsey_general_case_not_implemented():
    inst = RamseyInstance(2, (0,), Graph.empty(1), (frozenset({0}),))
    with pytest.raises(NotImplementedError):
        check_ramsey_lemma_degenerate(inst)


def test_ramsey_rejects_bad_hypothesis():
    inst = RamseyInstance(1, (0, 1), Graph.empty(2), (frozenset({0}), frozenset({1})))
    with pytest.raises(ValueError):
        check_ramsey_lemma_degenerate(inst)


def test_max_ell():
    assert max_ell(named_graph("P4+2P1")) == 2
    assert max_ell(named_graph("P4")) == 0
    assert max_ell(Graph.complete(4)) == -1
    assert min_ell_for_P4_ellP1_freeness([named_graph("P4+2P1"), Graph.complete(3)]) == 3
    assert min_ell_for_P4_ellP1_freeness([Graph.complete(3)]) == 0
    with pytest.raises(ValueError):
        min_ell_for_P4_ellP1_freeness([])


@settings(max_examples=60)
@given(graphs(min_n=4, max_n=8))
def test_max_ell_matches_pattern_search(g):
    from critgraphs.patterns import contains_induced
    ell = max_ell(g)
    for l in range(0, 5):
        has = contains_induced(g, named_graph("P4" + (f"+{l}P1" if l else ""))) is not None
        assert has == (l <= ell)
