"""Named small graphs, induced-subgraph detection and forbidden families."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional

from .graph import Graph, disjoint_union

# Vertex labels follow the drawings: a=0, b=1, c=2, d=3, e=4.
_FIXED = {
    "chair": [(1, 2), (2, 3), (2, 4), (0, 3)],
    "cricket": [(0, 1), (1, 2), (0, 2), (0, 3), (0, 4)],
    "gem": [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)],
    "banner": [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)],
    "dart": [(0, 1), (1, 2), (2, 3), (3, 0), (1, 3), (1, 4)],
    "bull": [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)],
    "K5-e": [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
}

_TERM = re.compile(r"^(\d*)(?:(P|C|K)_?(\d+)|([A-Za-z][A-Za-z0-9-]*))$")


class UnknownPatternError(ValueError):
    pass


def path(t: int) -> Graph:
    return Graph.from_edges(t, [(i, i + 1) for i in range(t - 1)])


def cycle(t: int) -> Graph:
    if t < 3:
        raise UnknownPatternError(f"C{t}: cycles need at least 3 vertices")
    return Graph.from_edges(t, [(i, (i + 1) % t) for i in range(t)])


def _base(name: str) -> Graph:
    m = _TERM.match(name)
    if not m:
        raise UnknownPatternError(f"unknown pattern {name!r}")
    kind, size, word = m.group(2), m.group(3), m.group(4)
    if kind:
        t = int(size)
        if t < 1:
            raise UnknownPatternError(f"unknown pattern {name!r}")
        if kind == "P":
            return path(t)
        if kind == "C":
            return cycle(t)
        return Graph.complete(t)
    key = {"k5-e": "K5-e"}.get(word.lower(), word.lower())
    if key not in _FIXED:
        raise UnknownPatternError(f"unknown pattern {name!r}")
    return Graph.from_edges(5, _FIXED[key])


def named_graph(name: str) -> Graph:
    """Build a named graph such as ``chair``, ``P5``, ``C_7`` or ``P4+2P1``.

    A ``+`` joins disjoint-union terms and a leading integer repeats a term,
    so ``2P2`` is two disjoint edges and ``P4+0P1`` is just ``P4``.
    """
    text = name.strip().replace("−", "-").replace(" ", "")
    if not text:
        raise UnknownPatternError("empty pattern name")
    # "K5-e" contains a '-' but never a '+', so split on '+' only.
    parts = []
    for term in text.split("+"):
        m = _TERM.match(term)
        if not m:
            raise UnknownPatternError(f"unknown pattern {name!r}")
        reps = int(m.group(1)) if m.group(1) else 1
        body = term[len(m.group(1)):]
        parts.extend([_base(body)] * reps)
    g = disjoint_union(*parts)
    if g.n == 0:
        raise UnknownPatternError(f"pattern {name!r} has no vertices")
    return g


@dataclass(frozen=True)
class PatternFamily:
    members: tuple[tuple[str, Graph], ...]

    def __post_init__(self):
        names = [name for name, _ in self.members]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate pattern names in {names}")
        for name, g in self.members:
            if g.n < 1:
                raise ValueError(f"pattern {name!r} has no vertices")

    @classmethod
    def from_names(cls, names: str | Iterable[str]) -> "PatternFamily":
        if isinstance(names, str):
            names = [s for s in names.split(",") if s.strip()]
        return cls(tuple((s.strip(), named_graph(s)) for s in names))

    @property
    def names(self) -> list[str]:
        return [name for name, _ in self.members]

    def __str__(self) -> str:
        return ",".join(self.names)

    def __len__(self) -> int:
        return len(self.members)


def _search_order(h: Graph) -> list[int]:
    # Connectivity-first: grow from a max-degree vertex, always taking the
    # vertex with most already-placed neighbours (then degree, then label).
    n = h.n
    deg = h.degrees()
    order: list[int] = []
    placed = 0
    remaining = set(range(n))
    while remaining:
        best = min(remaining, key=lambda v: (-(h.adj[v] & placed).bit_count(), -deg[v], v))
        order.append(best)
        placed |= 1 << best
        remaining.discard(best)
    return order


def contains_induced(g: Graph, h: Graph, anchor: Optional[int] = None) -> Optional[tuple[int, ...]]:
    """Find an induced copy of ``h`` in ``g``.

    Returns ``emb`` with ``emb[i]`` the vertex of ``g`` playing pattern vertex
    ``i``, or ``None``.  With ``anchor`` set, only copies using that vertex of
    ``g`` are considered.
    """
    if h.n < 1:
        raise ValueError("pattern must have at least one vertex")
    if h.n > g.n:
        return None
    order = _search_order(h)
    hdeg = h.degrees()
    gdeg = g.degrees()
    # Required adjacency pattern of order[i] against order[:i].
    links = []
    for i, pv in enumerate(order):
        links.append([(j, bool(h.adj[pv] >> order[j] & 1)) for j in range(i)])
    assign = [0] * h.n
    t = h.n

    def extend(i: int, used: int, has_anchor: bool) -> bool:
        if i == t:
            return anchor is None or has_anchor
        if anchor is not None and not has_anchor and t - i == 1:
            candidates = [anchor] if not used >> anchor & 1 else []
        else:
            candidates = range(g.n)
        need = hdeg[order[i]]
        for v in candidates:
            if used >> v & 1 or gdeg[v] < need:
                continue
            row = g.adj[v]
            if all(bool(row >> assign[j] & 1) == adj for j, adj in links[i]):
                assign[i] = v
                if extend(i + 1, used | 1 << v, has_anchor or v == anchor):
                    return True
        return False

    if not extend(0, 0, False):
        return None
    emb = [0] * h.n
    for i, pv in enumerate(order):
        emb[pv] = assign[i]
    return tuple(emb)


def is_embedding(g: Graph, h: Graph, emb: tuple[int, ...]) -> bool:
    if len(emb) != h.n or len(set(emb)) != h.n:
        return False
    for i in range(h.n):
        for j in range(i + 1, h.n):
            if h.has_edge(i, j) != g.has_edge(emb[i], emb[j]):
                return False
    return True


def is_family_free(g: Graph, fam: PatternFamily) -> bool:
    return all(contains_induced(g, h) is None for _, h in fam.members)


def first_member_found(g: Graph, fam: PatternFamily) -> Optional[tuple[str, tuple[int, ...]]]:
    for name, h in fam.members:
        emb = contains_induced(g, h)
        if emb is not None:
            return name, emb
    return None
