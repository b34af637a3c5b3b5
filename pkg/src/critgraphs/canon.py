"""Canonical labelling by partition refinement and individualisation.

The search explores the individualisation-refinement tree of the graph and
keeps the leaf whose adjacency bit-string (graph6 bit order, first bit most
significant) is least.  Because refinement and cell selection depend only on
the partition structure, never on labels, the chosen string is an isomorphism
invariant.  Automorphisms discovered at equivalent leaves prune the tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, iter_bits
from .graph6 import serialize_graph6


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Isomorphism-invariant key: order plus graph6 text of the canonical relabelling."""

    n: int
    code: str

    def graph(self) -> Graph:
        from .graph6 import parse_graph6

        return parse_graph6(self.code)

    def __str__(self) -> str:
        return self.code


def _refine(adj: Sequence[int], cells: list[list[int]], queue: list[int]) -> list[list[int]]:
    qi = 0
    while qi < len(queue):
        if len(cells) == len(adj):
            break
        w = queue[qi]
        qi += 1
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                key = (adj[v] & w).bit_count()
                if key in groups:
                    groups[key].append(v)
                else:
                    groups[key] = [v]
            if len(groups) == 1:
                out.append(cell)
                continue
            changed = True
            for key in sorted(groups):
                sub = groups[key]
                out.append(sub)
                m = 0
                for v in sub:
                    m |= 1 << v
                queue.append(m)
        if changed:
            cells = out
    return cells


def _leaf_code(adj: Sequence[int], order: Sequence[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def _orbit_roots(autos: list[tuple[int, ...]], fixed: tuple[int, ...], n: int) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in autos:
        if any(g[v] != v for v in fixed):
            continue
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(v) for v in range(n)]


class _Jump(Exception):
    def __init__(self, depth: int):
        self.depth = depth


def canonical_labeling(adj: Sequence[int]) -> tuple[list[int], list[tuple[int, ...]]]:
    """Return ``(order, automorphisms)`` for the graph with rows ``adj``.

    ``order[i]`` is the original vertex placed at canonical position ``i``.
    ``automorphisms`` are permutations (as tuples ``g[v]``) found during the
    search; they generate a subgroup of the automorphism group.
    """
    n = len(adj)
    if n <= 1:
        return list(range(n)), []
    full = (1 << n) - 1
    root = _refine(adj, [list(range(n))], [full])

    best_code = -1
    best_order: list[int] = []
    best_path: tuple[int, ...] = ()
    autos: list[tuple[int, ...]] = []

    def visit(cells: list[list[int]], path: tuple[int, ...]) -> None:
        nonlocal best_code, best_order, best_path
        target = -1
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                target = idx
                break
        if target < 0:
            order = [c[0] for c in cells]
            code = _leaf_code(adj, order)
            if best_code < 0 or code < best_code:
                best_code, best_order, best_path = code, order, path
            elif code == best_code:
                perm = [0] * n
                for a, b in zip(best_order, order):
                    perm[a] = b
                autos.append(tuple(perm))
                common = 0
                for x, y in zip(best_path, path):
                    if x != y:
                        break
                    common += 1
                # This subtree is an image of the one holding the best leaf.
                raise _Jump(common)
            return
        cell = cells[target]
        tried: list[int] = []
        for v in sorted(cell):
            if tried and autos:
                roots = _orbit_roots(autos, path, n)
                if any(roots[v] == roots[t] for t in tried):
                    continue
            rest = [u for u in cell if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            try:
                visit(_refine(adj, child, [1 << v]), path + (v,))
            except _Jump as jump:
                if jump.depth < len(path):
                    raise
            tried.append(v)

    visit(root, ())
    return best_order, autos


def canonical_adjacency(g: Graph) -> tuple[int, ...]:
    order, _ = canonical_labeling(g.adj)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    out = [0] * g.n
    for v, row in enumerate(g.adj):
        m = 0
        for u in iter_bits(row):
            m |= 1 << pos[u]
        out[pos[v]] = m
    return tuple(out)


def canonical_graph(g: Graph) -> Graph:
    return Graph._trusted(g.n, canonical_adjacency(g))


def canonical_form(g: Graph) -> CanonicalForm:
    return CanonicalForm(g.n, serialize_graph6(canonical_graph(g)))


def automorphism_generators(g: Graph) -> list[tuple[int, ...]]:
    return canonical_labeling(g.adj)[1]


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
