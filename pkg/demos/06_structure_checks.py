"""Replaying case tables and checking the structural claims on real graphs."""
from critgraphs import (
    check_lemma2, find_lemma1_violation, is_antichain, min_ell_for_P4_ellP1_freeness, verify_case_table,
    verify_proof_claims,
)
from critgraphs import EnumerationConfig, PatternFamily, enumerate_critical
from critgraphs.structure import exhaustive_ramsey_degenerate

print("Case tables: where can a vertex x with a neighbour z outside the path attach?")
for r in verify_case_table("chair"):
    print(" ", r.line())

print("\nA few 5-vertex-critical (P5, cricket)-free graphs to test against:")
graphs = enumerate_critical(EnumerationConfig(5, PatternFamily.from_names("P5,cricket"), 8)).graphs
for g in graphs:
    reports = verify_proof_claims(g, 5, "cricket")
    failed = [r for r in reports if not r.holds]
    print(f"  n={g.n}: {len(reports)} claim checks, {len(failed)} failed, "
          f"lemma1 violation: {find_lemma1_violation(g, 3)}, lemma2: {check_lemma2(g, 5).holds}")

print("\nAntichains: {0,1},{1,2} is one; {0},{0,1} is not:",
      is_antichain([{0, 1}, {1, 2}]), is_antichain([{0}, {0, 1}]))

report, stats = exhaustive_ramsey_degenerate(4, 4)
print("\nDegenerate Ramsey lemma over all small instances:", report.line())

print("\nSmallest l with every graph above P4+lP1-free:", min_ell_for_P4_ellP1_freeness(graphs))
