"""Exact colouring and k-vertex-criticality."""
from critgraphs import Graph, chromatic_number, is_k_colorable, is_k_vertex_critical, named_graph
from critgraphs.graph import join

c5k2 = join(named_graph("C5"), Graph.complete(2))

print("chromatic numbers:")
for name, g in [("P5", named_graph("P5")), ("C5", named_graph("C5")), ("C7", named_graph("C7")),
                ("K5", Graph.complete(5)), ("C5 v K2", c5k2)]:
    print(f"  {name:>8}: {chromatic_number(g)}")

print("\nA certificate for 5 colours, and none for 4:")
print("  5:", is_k_colorable(c5k2, 5))
print("  4:", is_k_colorable(c5k2, 4))

print("\nCriticality asks that every vertex deletion drops the chromatic number.")
report = is_k_vertex_critical(c5k2, 5)
print("  C5 v K2 at k=5:", report.verdict, "per-vertex chi(G-v):", report.per_vertex)

g = c5k2.extend(0b0000011)
report = is_k_vertex_critical(g, 5)
print("  with a pendant-ish extra vertex:", report.verdict, "-", report.reason)
