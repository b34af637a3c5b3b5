"""Building graphs, taking induced subgraphs and round-tripping graph6."""
from critgraphs import Graph, induced_subgraph, parse_graph6, serialize_graph6, set_relation, vset
from critgraphs.graph import join

rule = "-" * 60

print("A graph is a vertex count plus one bitmask row per vertex.")
c5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
print("C5 edges:", c5.edges())
print("C5 degrees:", c5.degrees())

print("\nJoining two extra vertices to every cycle vertex gives C5 v K2:")
g = join(c5, Graph.complete(2))
print(g)

print(rule)
print("graph6 packs the upper triangle column by column, six bits a byte.")
text = serialize_graph6(g)
print("graph6:", text)
print("parsed back equals the original:", parse_graph6(text) == g)

print(rule)
print("How do the cycle and the two joined vertices relate?")
print("set_relation(cycle, {5,6}) =", set_relation(g, vset(range(5)), vset([5, 6])))
print("set_relation({0}, {1,2}) =", set_relation(g, vset([0]), vset([1, 2])))

print("\nInduced subgraphs are re-indexed in ascending vertex order:")
print(induced_subgraph(g, vset([0, 2, 5])))
