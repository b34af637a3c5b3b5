"""Named patterns and induced-subgraph search."""
from critgraphs import PatternFamily, contains_induced, is_family_free, named_graph
from critgraphs.structure import case_configuration

for name in ["P5", "chair", "cricket", "P4+2P1"]:
    h = named_graph(name)
    print(f"{name:>7}: {h.n} vertices, edges {h.edges()}")

print("\nA path a-b-c-d (0-1-2-3), a vertex z (4) off the path, and x (5)")
print("adjacent to z, a and c.")
g, names = case_configuration("ac")
emb = contains_induced(g, named_graph("chair"))
print("chair embedding (pattern vertex -> graph vertex):", emb)
print("P5 embedding:", contains_induced(g, named_graph("P5")))

fam = PatternFamily.from_names("P5,cricket")
print(f"\nIs C7 {fam}-free?", is_family_free(named_graph("C7"), fam))
print(f"Is C5 {fam}-free?", is_family_free(named_graph("C5"), fam))

print("\nThe anchor argument restricts the search to copies through one vertex:")
print("K3 through vertex 4 of P4+K3:", contains_induced(named_graph("P4+K3"), named_graph("K3"), anchor=4))
print("K3 through vertex 0 of P4+K3:", contains_induced(named_graph("P4+K3"), named_graph("K3"), anchor=0))
