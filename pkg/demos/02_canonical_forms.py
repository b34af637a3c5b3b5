"""Canonical forms identify isomorphic graphs regardless of labelling."""
import random

from critgraphs import Graph, are_isomorphic, canonical_form
from critgraphs.canon import automorphism_generators

rng = random.Random(1)

petersen = Graph.from_edges(10, [(i, (i + 1) % 5) for i in range(5)]
                            + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
                            + [(i, i + 5) for i in range(5)])
perm = list(range(10))
rng.shuffle(perm)
shuffled = petersen.relabel(perm)

print("Petersen graph, then a random relabelling of it:")
print("  ", petersen.edges()[:6], "...")
print("  ", shuffled.edges()[:6], "...")
print("canonical forms:")
print("  ", canonical_form(petersen))
print("  ", canonical_form(shuffled))
print("equal:", canonical_form(petersen) == canonical_form(shuffled))

print("\nThe search also returns automorphisms it met on the way.")
gens = automorphism_generators(petersen)
print(len(gens), "generators found, e.g.", gens[0] if gens else None)

prism = Graph.from_edges(10, [(i, (i + 1) % 5) for i in range(5)]
                         + [(5 + i, 5 + (i + 1) % 5) for i in range(5)]
                         + [(i, i + 5) for i in range(5)])
print("\nThe pentagonal prism is also cubic on 10 vertices, but")
print("are_isomorphic(petersen, prism) =", are_isomorphic(petersen, prism))

print("\nCounting isomorphism classes of all 2^10 labelled graphs on 5 vertices:")
pairs = [(i, j) for j in range(5) for i in range(j)]
forms = {canonical_form(Graph.from_edges(5, [p for t, p in enumerate(pairs) if bits >> t & 1]))
         for bits in range(1 << len(pairs))}
print(len(forms), "classes")
