"""Exact colouring, vertex-criticality and the clique/independence numbers.

The low-level functions take raw adjacency rows (tuples of bitmasks) so the
enumerator can call them without building :class:`Graph` objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Graph, induced_subgraph, is_connected, iter_bits


@dataclass(frozen=True)
class ColoringCertificate:
    """A proper colouring; ``colors[v]`` is in ``1..k``."""

    colors: tuple[int, ...]
    k: int

    def is_valid_for(self, g: Graph) -> bool:
        if len(self.colors) != g.n:
            return False
        if any(not 1 <= c <= self.k for c in self.colors):
            return False
        return all(self.colors[u] != self.colors[v] for u, v in g.edges())


@dataclass(frozen=True)
class CriticalityReport:
    k: int
    chi: int
    per_vertex: Optional[tuple[int, ...]]
    verdict: bool
    reason: str = ""


def greedy_clique(adj: Sequence[int]) -> list[int]:
    """A maximal clique grown greedily by degree inside the candidate set."""
    n = len(adj)
    if n == 0:
        return []
    cand = (1 << n) - 1
    clique = []
    while cand:
        best = -1
        best_deg = -1
        for v in iter_bits(cand):
            d = (adj[v] & cand).bit_count()
            if d > best_deg:
                best, best_deg = v, d
        clique.append(best)
        cand &= adj[best]
    return clique


def color_raw(adj: Sequence[int], k: int, clique: Optional[Sequence[int]] = None) -> Optional[list[int]]:
    """DSATUR backtracking; returns colours ``0..k-1`` per vertex or ``None``."""
    n = len(adj)
    if n == 0:
        return []
    if k <= 0:
        return None
    if clique is None:
        clique = greedy_clique(adj)
    if len(clique) > k:
        return None
    colors = [-1] * n
    sat = [0] * n
    deg = [row.bit_count() for row in adj]
    # Symmetry breaking: the clique takes colours 0..|Q|-1 up front.
    for c, v in enumerate(clique):
        colors[v] = c
        for u in iter_bits(adj[v]):
            sat[u] |= 1 << c
    uncolored = (1 << n) - 1
    for v in clique:
        uncolored &= ~(1 << v)
    full = (1 << k) - 1

    def solve(uncolored: int, used: int) -> bool:
        if not uncolored:
            return True
        best = -1
        best_key = (-1, -1)
        for v in iter_bits(uncolored):
            s = sat[v].bit_count()
            if s == k:
                return False
            key = (s, deg[v])
            if key > best_key:
                best, best_key = v, key
        v = best
        free = full & ~sat[v]
        # Only one previously unused colour needs trying.
        if used < k:
            free &= (1 << (used + 1)) - 1
        rest = uncolored & ~(1 << v)
        nbrs = adj[v] & rest
        for c in iter_bits(free):
            bit = 1 << c
            colors[v] = c
            saved = [(u, sat[u]) for u in iter_bits(nbrs)]
            for u, s in saved:
                sat[u] = s | bit
            if solve(rest, max(used, c + 1)):
                return True
            for u, s in saved:
                sat[u] = s
        colors[v] = -1
        return False

    if solve(uncolored, len(clique)):
        return colors
    return None


def is_k_colorable(g: Graph, k: int) -> Optional[ColoringCertificate]:
    if k < 1:
        raise ValueError("k must be a positive integer")
    colors = color_raw(g.adj, k)
    if colors is None:
        return None
    return ColoringCertificate(tuple(c + 1 for c in colors), k)


def chromatic_number_raw(adj: Sequence[int]) -> tuple[int, list[int]]:
    n = len(adj)
    if n == 0:
        return 0, []
    clique = greedy_clique(adj)
    for k in range(len(clique), n + 1):
        colors = color_raw(adj, k, clique)
        if colors is not None:
            return k, colors
    raise AssertionError("unreachable: every graph is n-colourable")


def chromatic_number(g: Graph) -> int:
    return chromatic_number_raw(g.adj)[0]


def optimal_coloring(g: Graph) -> ColoringCertificate:
    k, colors = chromatic_number_raw(g.adj)
    return ColoringCertificate(tuple(c + 1 for c in colors), k)


def _delete(adj: Sequence[int], v: int) -> list[int]:
    low = (1 << v) - 1
    return [(row & low) | (row >> (v + 1) << v) for u, row in enumerate(adj) if u != v]


def is_critical_raw(adj: Sequence[int], k: int) -> bool:
    """Fast yes/no version of :func:`is_k_vertex_critical`."""
    n = len(adj)
    if n == 0 or k < 1:
        return False
    if any(row.bit_count() < k - 1 for row in adj):
        return False
    if color_raw(adj, k - 1) is not None:
        return False
    if color_raw(adj, k) is None:
        return False
    return all(color_raw(_delete(adj, v), k - 1) is not None for v in range(n))


def is_k_vertex_critical(g: Graph, k: int) -> CriticalityReport:
    if k < 1:
        raise ValueError("k must be a positive integer")
    chi = chromatic_number(g)
    low = [v for v in range(g.n) if g.degree(v) < k - 1]
    if low:
        return CriticalityReport(k, chi, None, False, f"degree below {k - 1} at vertices {low}")
    if chi != k:
        return CriticalityReport(k, chi, None, False, f"chromatic number is {chi}, not {k}")
    per_vertex = []
    for v in range(g.n):
        sub = _delete(g.adj, v)
        # chi(G-v) >= chi(G)-1, so (k-1)-colourability decides it exactly.
        per_vertex.append(k - 1 if color_raw(sub, k - 1) is not None else k)
    verdict = all(x == k - 1 for x in per_vertex)
    report = CriticalityReport(k, chi, tuple(per_vertex), verdict,
                               "" if verdict else "some vertex deletion keeps chromatic number k")
    if verdict:
        # Standard necessary conditions for criticality.
        assert min(g.degrees(), default=k - 1) >= k - 1
        assert is_connected(g)
    return report


def max_clique_raw(adj: Sequence[int], cand: Optional[int] = None) -> int:
    """Mask of a maximum clique inside ``cand`` (all vertices by default)."""
    n = len(adj)
    if cand is None:
        cand = (1 << n) - 1
    best = 0
    best_size = 0

    def expand(clique: int, size: int, cand: int) -> None:
        nonlocal best, best_size
        if not cand:
            if size > best_size:
                best, best_size = clique, size
            return
        # Greedy colouring of the candidates bounds the clique extension.
        order = []
        bound = []
        rest = cand
        color = 0
        while rest:
            color += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~adj[v] & ~(1 << v)
                rest &= ~(1 << v)
                order.append(v)
                bound.append(color)
        for i in range(len(order) - 1, -1, -1):
            if size + bound[i] <= best_size:
                return
            v = order[i]
            expand(clique | 1 << v, size + 1, cand & adj[v])
            cand &= ~(1 << v)

    expand(0, 0, cand)
    return best


def clique_number(g: Graph) -> int:
    return max_clique_raw(g.adj).bit_count()


def independence_number(g: Graph) -> int:
    return clique_number(g.complement())


def maximum_independent_set(g: Graph, s: Optional[int] = None) -> int:
    """Mask of a maximum independent set of ``G[s]``."""
    comp = g.complement()
    return max_clique_raw(comp.adj, g.vertices if s is None else s)


def chi_of(g: Graph, s: int) -> int:
    return chromatic_number(induced_subgraph(g, s))
