"""Brute-force reference implementations used only by the tests.

Nothing here imports the search code it is compared against.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from critgraphs.graph import Graph


def graph6_by_hand(n: int, edges: set[tuple[int, int]]) -> str:
    """graph6 text written straight from the format definition."""
    bits = "".join("1" if (i, j) in edges or (j, i) in edges else "0"
                   for j in range(1, n) for i in range(j))
    bits += "0" * (-len(bits) % 6)
    return chr(n + 63) + "".join(chr(int(bits[p:p + 6], 2) + 63) for p in range(0, len(bits), 6))


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1
    return a


@lru_cache(maxsize=None)
def _perm_table(n: int) -> np.ndarray:
    return np.array(list(permutations(range(n))), dtype=np.int64).reshape(-1, n)


@lru_cache(maxsize=None)
def _pair_positions(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    I = np.array([p[0] for p in pairs], dtype=np.int64)
    J = np.array([p[1] for p in pairs], dtype=np.int64)
    weights = np.array([1 << (len(pairs) - 1 - t) for t in range(len(pairs))], dtype=np.int64)
    return I, J, weights


def brute_canonical_code(g: Graph) -> tuple[int, int]:
    """Least adjacency bit-string over *all* n! orderings (n <= 8)."""
    n = g.n
    if n <= 1:
        return (n, 0)
    a = adjacency_matrix(g)
    P = _perm_table(n)
    I, J, w = _pair_positions(n)
    bits = a[P[:, I], P[:, J]]
    return (n, int((bits * w).sum(axis=1).min()))


@lru_cache(maxsize=None)
def _growth_strings(n: int) -> np.ndarray:
    """All restricted growth strings of length n (one labelling per set partition)."""
    out = []

    def rec(prefix, top):
        if len(prefix) == n:
            out.append(prefix)
            return
        for c in range(top + 2):
            rec(prefix + [c], max(top, c))

    rec([], -1)
    return np.array(out, dtype=np.int64).reshape(-1, n)


def brute_chromatic_number(g: Graph) -> int:
    """Minimum over every colour assignment (up to renaming of colours)."""
    if g.n == 0:
        return 0
    rgs = _growth_strings(g.n)
    ok = np.ones(len(rgs), dtype=bool)
    for u, v in g.edges():
        ok &= rgs[:, u] != rgs[:, v]
    return int(rgs[ok].max(axis=1).min()) + 1


def brute_k_colorable(g: Graph, k: int) -> bool:
    return brute_chromatic_number(g) <= k


def labelled_copies(h: Graph) -> set[tuple]:
    """Edge sets (on positions 0..t-1) of every relabelling of h."""
    out = set()
    for perm in permutations(range(h.n)):
        out.add(frozenset(frozenset((perm[u], perm[v])) for u, v in h.edges()))
    return out


def brute_contains_induced(g: Graph, h: Graph, copies: set | None = None) -> bool:
    if copies is None:
        copies = labelled_copies(h)
    for sub in combinations(range(g.n), h.n):
        edges = frozenset(frozenset((i, j)) for i, j in combinations(range(h.n), 2)
                          if g.has_edge(sub[i], sub[j]))
        if edges in copies:
            return True
    return False


def brute_homogeneous(g: Graph, s: set[int]) -> bool:
    for v in range(g.n):
        if v in s:
            continue
        hits = {u for u in s if g.has_edge(u, v)}
        if hits and hits != s:
            return False
    return True


def brute_components(g: Graph, s: set[int]) -> list[set[int]]:
    comps = []
    left = set(s)
    while left:
        start = min(left)
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for u in list(left):
                if u not in comp and g.has_edge(u, v):
                    comp.add(u)
                    stack.append(u)
        comps.append(comp)
        left -= comp
    return comps


def brute_is_critical(g: Graph, k: int) -> bool:
    if brute_chromatic_number(g) != k:
        return False
    for v in range(g.n):
        keep = [u for u in range(g.n) if u != v]
        sub = Graph.from_edges(len(keep), [(keep.index(a), keep.index(b)) for a, b in g.edges()
                                           if a != v and b != v])
        if brute_chromatic_number(sub) != k - 1:
            return False
    return True


def brute_lemma1(g: Graph, max_size: int) -> bool:
    """True iff some pair (X, Y) of sizes <= max_size satisfies all three conditions."""
    verts = range(g.n)
    for xs in (c for r in range(1, max_size + 1) for c in combinations(verts, r)):
        X = set(xs)
        NX = {u for u in verts if u not in X and any(g.has_edge(u, x) for x in X)}
        for ys in (c for r in range(1, max_size + 1) for c in combinations(verts, r)):
            Y = set(ys)
            if Y & X:
                continue
            if any(g.has_edge(x, y) for x in X for y in Y):
                continue
            if not all(g.has_edge(y, w) for y in Y for w in NX):
                continue
            gx = _sub(g, sorted(X))
            gy = _sub(g, sorted(Y))
            if brute_chromatic_number(gx) <= brute_chromatic_number(gy):
                return True
    return False


def _sub(g: Graph, verts: list[int]) -> Graph:
    return Graph.from_edges(len(verts), [(i, j) for i, j in combinations(range(len(verts)), 2)
                                         if g.has_edge(verts[i], verts[j])])
