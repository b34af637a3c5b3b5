"""Immutable bitset graphs and the elementary set relations used on them.

Vertex sets are plain ``int`` bitmasks (bit ``v`` set means vertex ``v`` is a
member).  The helpers :func:`vset` and :func:`members` convert between masks
and sorted vertex lists.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

MAX_ORDER = 62

COMPLETE = "complete"
ANTICOMPLETE = "anticomplete"
MIXED = "mixed"


def vset(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbourhood of ``v`` as a bitmask.  Instances are
    immutable and hashable; equality is labelled equality (use
    :func:`critgraphs.canon.canonical_form` for isomorphism).
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int]):
        if not 0 <= n <= MAX_ORDER:
            raise ValueError(f"order {n} outside supported range 0..{MAX_ORDER}")
        adj = tuple(adj)
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for u, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"row {u} references vertices >= {n}")
            if row >> u & 1:
                raise ValueError(f"self-loop at vertex {u}")
            for v in iter_bits(row):
                if not adj[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.adj = adj
        self._hash = None

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # Skips validation; callers guarantee the invariants.
        g = object.__new__(cls)
        g.n = n
        g.adj = adj
        g._hash = None
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, [full ^ (1 << v) for v in range(n)])

    @property
    def vertices(self) -> int:
        """Mask of all vertices."""
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return members(self.adj[v])

    def extend(self, mask: int) -> "Graph":
        """Copy of this graph plus one new vertex ``n`` adjacent to ``mask``."""
        n = self.n
        if n >= MAX_ORDER:
            raise ValueError(f"cannot extend beyond {MAX_ORDER} vertices")
        if mask >> n:
            raise ValueError("neighbourhood mask references missing vertices")
        bit = 1 << n
        adj = tuple(row | bit if mask >> v & 1 else row for v, row in enumerate(self.adj))
        return Graph._trusted(n + 1, adj + (mask,))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        n = self.n
        if sorted(perm) != list(range(n)):
            raise ValueError("perm is not a permutation of the vertices")
        adj = [0] * n
        for v, row in enumerate(self.adj):
            m = 0
            for u in iter_bits(row):
                m |= 1 << perm[u]
            adj[perm[v]] = m
        return Graph._trusted(n, tuple(adj))

    def delete_vertex(self, v: int) -> "Graph":
        return induced_subgraph(self, self.vertices & ~(1 << v))

    def complement(self) -> "Graph":
        full = self.vertices
        return Graph._trusted(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[int] = []
    offset = 0
    for g in graphs:
        adj.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(offset, adj)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between them."""
    gmask = g.vertices
    hmask = h.vertices << g.n
    adj = [row | hmask for row in g.adj] + [(row << g.n) | gmask for row in h.adj]
    return Graph(g.n + h.n, adj)


def _check_mask(g: Graph, s: int) -> None:
    if s < 0 or s >> g.n:
        raise ValueError(f"vertex set {members(s) if s >= 0 else s} not within 0..{g.n - 1}")


def induced_subgraph(g: Graph, s: int) -> Graph:
    """``G[S]`` with the vertices of ``s`` renumbered in ascending order."""
    _check_mask(g, s)
    verts = members(s)
    index = {v: i for i, v in enumerate(verts)}
    adj = []
    for v in verts:
        m = 0
        for u in iter_bits(g.adj[v] & s):
            m |= 1 << index[u]
        adj.append(m)
    return Graph._trusted(len(verts), tuple(adj))


def neighborhood(g: Graph, s: int) -> int:
    """``N(S)``: vertices outside ``s`` with a neighbour in ``s``."""
    out = 0
    for v in iter_bits(s):
        out |= g.adj[v]
    return out & ~s


def common_neighbors(g: Graph, s: int) -> int:
    """Vertices adjacent to every member of ``s`` (all vertices if ``s`` is empty)."""
    out = g.vertices
    for v in iter_bits(s):
        out &= g.adj[v]
    return out


def set_relation(g: Graph, x: int, y: int) -> str:
    if not x or not y:
        raise ValueError("set_relation needs two nonempty sets")
    if x & y:
        raise ValueError(f"sets overlap on {members(x & y)}")
    _check_mask(g, x)
    _check_mask(g, y)
    complete = True
    touched = False
    for v in iter_bits(x):
        hit = g.adj[v] & y
        if hit:
            touched = True
        if hit != y:
            complete = False
    if complete:
        return COMPLETE
    return MIXED if touched else ANTICOMPLETE


def is_homogeneous_set(g: Graph, s: int) -> bool:
    """True iff no vertex outside ``s`` is mixed on ``s``."""
    if not s:
        raise ValueError("homogeneous-set test needs a nonempty set")
    _check_mask(g, s)
    for v in iter_bits(g.vertices & ~s):
        hit = g.adj[v] & s
        if hit and hit != s:
            return False
    return True


def connected_components(g: Graph, s: int | None = None) -> list[int]:
    """Components of ``G[s]`` as masks, ordered by least vertex."""
    if s is None:
        s = g.vertices
    _check_mask(g, s)
    comps = []
    rest = s
    while rest:
        frontier = rest & -rest
        comp = frontier
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= g.adj[v]
            frontier = reach & s & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1
