"""Level-by-level generation of k-vertex-critical F-free graphs.

Starting from K1, every frontier graph on n vertices is extended by one new
vertex in all possible ways.  Children are canonicalised and deduplicated and
then sorted into three bins:

* contains a forbidden pattern: dropped;
* (k-1)-colourable: joins the next frontier;
* otherwise: emitted if k-vertex-critical, dropped if not.

Why this finds everything: a k-vertex-critical graph is connected, so listing
its vertices in breadth-first order gives prefixes that are connected, F-free
(the class is hereditary) and (k-1)-colourable (proper induced subgraphs of a
critical graph).  Each such prefix is therefore a frontier member, and the
full graph is produced as a child of its last proper prefix.
"""

from __future__ import annotations

import csv
import io
import logging
import os
import tempfile
import time
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Callable, Iterable, Iterator, Optional

import numpy as np

from .canon import canonical_form, canonical_labeling
from .coloring import color_raw, is_critical_raw, is_k_vertex_critical
from .graph import MAX_ORDER, Graph, induced_subgraph, is_connected
from .graph6 import Graph6Error, parse_graph6, serialize_graph6
from .patterns import PatternFamily, contains_induced, is_family_free

log = logging.getLogger(__name__)

# Largest pattern order handled by lookup tables; bigger ones use backtracking.
TABLE_MAX_ORDER = 7


@dataclass
class EnumerationConfig:
    k: int
    family: PatternFamily
    n_max: int
    connected_prefix: bool = True
    jobs: int = 1
    spill_threshold: Optional[int] = None
    use_symmetry: bool = True

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("k must be at least 2")
        if not 1 <= self.n_max <= MAX_ORDER:
            raise ValueError(f"n_max must lie in 1..{MAX_ORDER}")
        if self.jobs < 1:
            raise ValueError("jobs must be positive")

    def describe(self) -> dict:
        return {
            "k": self.k,
            "family": str(self.family),
            "n_max": self.n_max,
            "connected_prefix": self.connected_prefix,
            "use_symmetry": self.use_symmetry,
        }


@dataclass
class CountTable:
    """Per-order counts, optionally with the canonical forms behind them."""

    counts: dict[int, int] = field(default_factory=dict)
    forms: Optional[dict[int, set[str]]] = None
    partial: bool = False

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def add(self, n: int, code: Optional[str] = None) -> None:
        self.counts[n] = self.counts.get(n, 0) + 1
        if code is not None:
            if self.forms is None:
                self.forms = {}
            self.forms.setdefault(n, set()).add(code)

    def row(self, lo: int, hi: int) -> tuple[int, ...]:
        return tuple(self.counts.get(n, 0) for n in range(lo, hi + 1))

    def to_csv(self, lo: int = 1, hi: Optional[int] = None) -> str:
        if hi is None:
            hi = max(self.counts, default=lo - 1)
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "count"])
        for n in range(lo, hi + 1):
            w.writerow([n, self.counts.get(n, 0)])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "CountTable":
        table = cls()
        for rec in csv.DictReader(io.StringIO(text)):
            table.counts[int(rec["n"])] = int(rec["count"])
        return table

    def summary(self, title: str = "count", lo: Optional[int] = None, hi: Optional[int] = None) -> str:
        if lo is None:
            lo = min(self.counts, default=1)
        if hi is None:
            hi = max(self.counts, default=lo)
        width = max(len(title), 8)
        lines = [f"{'n':>3} | {title:>{width}}", "-" * (width + 6)]
        for n in range(lo, hi + 1):
            lines.append(f"{n:>3} | {self.counts.get(n, 0):>{width},}")
        lines.append("-" * (width + 6))
        lines.append(f"{'Tot':>3} | {self.total:>{width},}")
        if self.partial:
            lines.append("(partial: search truncated at the vertex bound)")
        return "\n".join(lines)


@dataclass
class EnumerationResult:
    graphs: list[Graph]
    counts: CountTable
    frontier_sizes: dict[int, int]
    elapsed: float

    @property
    def partial(self) -> bool:
        return self.counts.partial

    def graph6_lines(self) -> list[str]:
        return [serialize_graph6(g) for g in self.graphs]


# --- pattern lookup tables -------------------------------------------------

def _pair_index(i: int, j: int) -> int:
    # Bit position of pair (i, j), i < j, in column-major upper-triangle order.
    return j * (j - 1) // 2 + i


def _code_of(adj: tuple[int, ...], verts: tuple[int, ...]) -> int:
    code = 0
    for j in range(1, len(verts)):
        row = adj[verts[j]]
        for i in range(j):
            if row >> verts[i] & 1:
                code |= 1 << _pair_index(i, j)
    return code


_TABLE_CACHE: dict[tuple, np.ndarray] = {}


def pattern_table(members: Iterable[Graph], t: int) -> np.ndarray:
    """Boolean table over all labelled t-vertex graphs: is it one of ``members``?"""
    members = [h for h in members if h.n == t]
    key = (t, tuple(sorted(h.adj for h in members)))
    if key in _TABLE_CACHE:
        return _TABLE_CACHE[key]
    table = np.zeros(1 << (t * (t - 1) // 2), dtype=bool)
    for h in members:
        for perm in permutations(range(t)):
            # perm[i] is the pattern vertex sitting at position i.
            table[_code_of(h.adj, perm)] = True
    _TABLE_CACHE[key] = table
    return table


class ExtensionFilter:
    """Decides which one-vertex extensions of a family-free graph stay family-free.

    Only induced copies that use the new vertex need checking; for a pattern
    of order t those live on the new vertex plus a (t-1)-subset of the parent.
    """

    def __init__(self, family: PatternFamily):
        self.family = family
        self.tables: dict[int, np.ndarray] = {}
        self.large: list[Graph] = []
        for t in sorted({h.n for _, h in family.members}):
            hs = [h for _, h in family.members if h.n == t]
            if t <= TABLE_MAX_ORDER:
                self.tables[t] = pattern_table(hs, t)
            else:
                self.large.extend(hs)
        self._subsets: dict[tuple[int, int], np.ndarray] = {}

    def _subsets_for(self, n: int, r: int) -> np.ndarray:
        key = (n, r)
        if key not in self._subsets:
            self._subsets[key] = np.array(list(combinations(range(n), r)), dtype=np.int64).reshape(-1, r)
        return self._subsets[key]

    def allowed(self, adj: tuple[int, ...], masks: np.ndarray) -> np.ndarray:
        n = len(adj)
        ok = np.ones(len(masks), dtype=bool)
        for t, table in self.tables.items():
            r = t - 1
            if r > n or not ok.any():
                continue
            if r == 0:
                ok &= ~table[0]
                continue
            subs = self._subsets_for(n, r)
            base = np.array([_code_of(adj, tuple(s)) for s in subs.tolist()], dtype=np.int64)
            shifts = np.array([_pair_index(i, r) for i in range(r)], dtype=np.int64)
            live = np.nonzero(ok)[0]
            m = masks[live].astype(np.int64)
            bits = (m[:, None, None] >> subs[None, :, :]) & 1
            idx = base[None, :] + (bits << shifts[None, None, :]).sum(axis=2)
            bad = table[idx].any(axis=1)
            ok[live[bad]] = False
        if self.large:
            for pos in np.nonzero(ok)[0]:
                child = _extend_raw(adj, int(masks[pos]))
                g = Graph._trusted(n + 1, child)
                if any(contains_induced(g, h, anchor=n) is not None for h in self.large):
                    ok[pos] = False
        return ok


# --- raw helpers ----------------------------------------------------------

def _extend_raw(adj: tuple[int, ...], mask: int) -> tuple[int, ...]:
    n = len(adj)
    bit = 1 << n
    return tuple(row | bit if mask >> v & 1 else row for v, row in enumerate(adj)) + (mask,)


def _canonical_code(adj: tuple[int, ...]) -> str:
    order, _ = canonical_labeling(adj)
    n = len(adj)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    out = [0] * n
    for v, row in enumerate(adj):
        m = 0
        while row:
            low = row & -row
            m |= 1 << pos[low.bit_length() - 1]
            row ^= low
        out[pos[v]] = m
    return serialize_graph6(Graph._trusted(n, tuple(out)))


def _mask_representatives(n: int, autos: list[tuple[int, ...]], masks: np.ndarray) -> np.ndarray:
    """Keep one mask per orbit of the parent's automorphisms acting on masks."""
    if not autos:
        return masks
    size = 1 << n
    all_masks = np.arange(size, dtype=np.int64)
    rep = all_masks.copy()
    images = []
    for g in autos:
        img = np.zeros(size, dtype=np.int64)
        for v in range(n):
            img |= ((all_masks >> v) & 1) << g[v]
        images.append(img)
    while True:
        before = rep.copy()
        for img in images:
            np.minimum.at(rep, img, rep)
            rep = np.minimum(rep, rep[img])
        if np.array_equal(rep, before):
            break
    keep = rep[masks] == masks
    return masks[keep]


def _min_degree_ok(adj: tuple[int, ...], masks: np.ndarray, k: int) -> np.ndarray:
    # Degree of every vertex in the child must reach k-1.
    need = k - 1
    required = 0
    for v, row in enumerate(adj):
        d = row.bit_count()
        if d < need - 1:
            return np.zeros(len(masks), dtype=bool)
        if d == need - 1:
            required |= 1 << v
    m = masks.astype(np.int64)
    pop = np.zeros(len(m), dtype=np.int64)
    tmp = m.copy()
    while tmp.any():
        pop += tmp & 1
        tmp >>= 1
    return (pop >= need) & ((m & required) == required)


@dataclass
class _Context:
    k: int
    family: PatternFamily
    connected_prefix: bool
    use_symmetry: bool
    filt: ExtensionFilter = field(init=False)

    def __post_init__(self):
        self.filt = ExtensionFilter(self.family)


_WORKER_CTX: Optional[_Context] = None


def _init_worker(k: int, names: list[str], connected_prefix: bool, use_symmetry: bool) -> None:
    global _WORKER_CTX
    _WORKER_CTX = _Context(k, PatternFamily.from_names(names), connected_prefix, use_symmetry)


def _expand_parent(ctx: _Context, code: str, final: bool) -> tuple[set[str], set[str]]:
    """Children of one frontier graph.

    Returns ``(extendable, candidates)``: canonical codes of family-free
    children that are (k-1)-colourable, and of those that are not and have
    minimum degree >= k-1 (possible critical graphs).  On the final level
    ``extendable`` only records whether the parent has any such child, by
    holding the parent's own code.
    """
    g = parse_graph6(code)
    adj = g.adj
    n = g.n
    lo = 1 if ctx.connected_prefix else 0
    masks = np.arange(lo, 1 << n, dtype=np.int64)
    if ctx.use_symmetry:
        _, autos = canonical_labeling(adj)
        masks = _mask_representatives(n, autos, masks)
    masks = masks[ctx.filt.allowed(adj, masks)]
    extendable: set[str] = set()
    candidates: set[str] = set()
    if final:
        # One colourable child is enough to know the search would continue.
        for m in masks.tolist():
            if color_raw(_extend_raw(adj, m), ctx.k - 1) is not None:
                extendable.add(code)
                break
        masks = masks[_min_degree_ok(adj, masks, ctx.k)]
        for m in masks.tolist():
            child = _extend_raw(adj, m)
            if color_raw(child, ctx.k - 1) is None:
                candidates.add(_canonical_code(child))
        return extendable, candidates
    deg_ok = _min_degree_ok(adj, masks, ctx.k)
    for m, dok in zip(masks.tolist(), deg_ok.tolist()):
        child = _extend_raw(adj, m)
        cc = _canonical_code(child)
        if cc in extendable or cc in candidates:
            continue
        if color_raw(child, ctx.k - 1) is not None:
            extendable.add(cc)
        elif dok:
            candidates.add(cc)
    return extendable, candidates


def _expand_chunk(args: tuple[list[str], bool]) -> tuple[set[str], set[str]]:
    codes, final = args
    ext: set[str] = set()
    cand: set[str] = set()
    for code in codes:
        e, c = _expand_parent(_WORKER_CTX, code, final)
        ext |= e
        cand |= c
    return ext, cand


class _Frontier:
    """Sorted list of canonical codes, kept in a temporary file when large."""

    def __init__(self, codes: Iterable[str], spill_threshold: Optional[int]):
        codes = sorted(codes)
        self.size = len(codes)
        self._codes: Optional[list[str]] = codes
        self._path: Optional[str] = None
        if spill_threshold is not None and self.size > spill_threshold:
            fd, self._path = tempfile.mkstemp(prefix="frontier-", suffix=".g6")
            with os.fdopen(fd, "w", encoding="ascii") as fh:
                for c in codes:
                    fh.write(c + "\n")
            self._codes = None
            log.info("frontier of %d graphs spilled to %s", self.size, self._path)

    @property
    def spilled(self) -> bool:
        return self._path is not None

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[str]:
        if self._codes is not None:
            yield from self._codes
        else:
            with open(self._path, encoding="ascii") as fh:
                for line in fh:
                    yield line.rstrip("\n")

    def chunks(self, size: int) -> Iterator[list[str]]:
        buf: list[str] = []
        for c in self:
            buf.append(c)
            if len(buf) == size:
                yield buf
                buf = []
        if buf:
            yield buf

    def close(self) -> None:
        if self._path is not None:
            os.unlink(self._path)
            self._path = None


def iter_critical(cfg: EnumerationConfig,
                  progress: Optional[Callable[[int, int, int], None]] = None,
                  stats: Optional[dict] = None) -> Iterator[tuple[int, Graph]]:
    """Yield ``(n, graph)`` for every critical graph found, level by level.

    Graphs are yielded in their canonical labelling, sorted by canonical form
    within each level.  ``stats`` (if given) receives ``frontier_sizes`` and
    ``partial``.
    """
    k = cfg.k
    names = cfg.family.names
    ctx = _Context(k, cfg.family, cfg.connected_prefix, cfg.use_symmetry)
    if stats is None:
        stats = {}
    stats["frontier_sizes"] = {}
    stats["partial"] = False
    k1 = Graph._trusted(1, (0,))
    if not is_family_free(k1, cfg.family):
        return
    # K1 is (k-1)-colourable for every k >= 2.
    frontier = _Frontier([serialize_graph6(k1)], cfg.spill_threshold)
    stats["frontier_sizes"][1] = 1
    pool = None
    if cfg.jobs > 1:
        import multiprocessing as mp

        pool = mp.get_context("fork").Pool(cfg.jobs, initializer=_init_worker,
                                           initargs=(k, names, cfg.connected_prefix, cfg.use_symmetry))
    else:
        global _WORKER_CTX
        _WORKER_CTX = ctx
    try:
        for n in range(2, cfg.n_max + 1):
            if len(frontier) == 0:
                break
            final = n == cfg.n_max
            extendable: set[str] = set()
            candidates: set[str] = set()
            chunk = max(1, min(64, len(frontier) // (4 * cfg.jobs) or 1))
            work = ((c, final) for c in frontier.chunks(chunk))
            results = pool.imap(_expand_chunk, work) if pool else map(_expand_chunk, work)
            for ext, cand in results:
                extendable |= ext
                candidates |= cand
            frontier.close()
            for code in sorted(candidates):
                adj = parse_graph6(code).adj
                if is_critical_raw(adj, k):
                    g = Graph._trusted(n, adj)
                    # Re-verified through the public, independent code paths.
                    assert is_k_vertex_critical(g, k).verdict
                    assert is_family_free(g, cfg.family)
                    yield n, g
            if final:
                stats["partial"] = bool(extendable)
                frontier = _Frontier([], None)
                break
            frontier = _Frontier(extendable, cfg.spill_threshold)
            stats["frontier_sizes"][n] = len(frontier)
            if progress:
                progress(n, len(frontier), len(candidates))
        frontier.close()
    finally:
        if pool is not None:
            pool.close()
            pool.join()


def enumerate_critical(cfg: EnumerationConfig,
                       sink: Optional[Callable[[Graph], None]] = None,
                       progress: Optional[Callable[[int, int, int], None]] = None) -> EnumerationResult:
    t0 = time.perf_counter()
    stats: dict = {}
    graphs = []
    table = CountTable(counts={n: 0 for n in range(1, cfg.n_max + 1)}, forms={})
    for n, g in iter_critical(cfg, progress=progress, stats=stats):
        graphs.append(g)
        table.add(n, serialize_graph6(g))
        if sink is not None:
            sink(g)
    table.partial = stats["partial"]
    return EnumerationResult(graphs, table, stats["frontier_sizes"], time.perf_counter() - t0)


# --- corpus verification ----------------------------------------------------

@dataclass
class GraphVerdict:
    line: int
    text: str
    n: Optional[int] = None
    family_free: Optional[bool] = None
    forbidden: Optional[str] = None
    critical: Optional[bool] = None
    chi: Optional[int] = None
    duplicate_of: Optional[int] = None
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None and bool(self.family_free) and bool(self.critical) and self.duplicate_of is None


@dataclass
class CorpusReport:
    verdicts: list[GraphVerdict]
    counts: CountTable

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.verdicts)

    @property
    def failures(self) -> list[GraphVerdict]:
        return [v for v in self.verdicts if not v.ok]


def verify_corpus(lines: Iterable[str], k: int, family: PatternFamily) -> CorpusReport:
    verdicts = []
    seen: dict[str, int] = {}
    table = CountTable(forms={})
    lineno = 0
    for raw in lines:
        lineno += 1
        text = raw.strip()
        if not text:
            continue
        v = GraphVerdict(lineno, text)
        verdicts.append(v)
        try:
            g = parse_graph6(text)
        except Graph6Error as exc:
            v.error = str(exc)
            continue
        v.n = g.n
        code = canonical_form(g).code
        if code in seen:
            v.duplicate_of = seen[code]
        else:
            seen[code] = lineno
        table.add(g.n, code)
        hit = None
        for name, h in family.members:
            if contains_induced(g, h) is not None:
                hit = name
                break
        v.family_free = hit is None
        v.forbidden = hit
        report = is_k_vertex_critical(g, k)
        v.critical = report.verdict
        v.chi = report.chi
    return CorpusReport(verdicts, table)


@dataclass
class CrossCheck:
    equal: bool
    mismatches: list[tuple[int, int, int]]
    only_left: dict[int, list[str]]
    only_right: dict[int, list[str]]

    def __str__(self) -> str:
        if self.equal:
            return "counts agree"
        out = []
        for n, a, b in self.mismatches:
            out.append(f"n={n}: {a} vs {b}")
            for c in self.only_left.get(n, []):
                out.append(f"  only left:  {c}")
            for c in self.only_right.get(n, []):
                out.append(f"  only right: {c}")
        return "\n".join(out)


def cross_check(left: CountTable, right: CountTable, n_cap: int) -> CrossCheck:
    mismatches = []
    only_left: dict[int, list[str]] = {}
    only_right: dict[int, list[str]] = {}
    orders = sorted(n for n in set(left.counts) | set(right.counts) if n <= n_cap)
    for n in orders:
        a, b = left.counts.get(n, 0), right.counts.get(n, 0)
        lf = (left.forms or {}).get(n, set())
        rf = (right.forms or {}).get(n, set())
        if a != b or (left.forms is not None and right.forms is not None and lf != rf):
            mismatches.append((n, a, b))
            if lf - rf:
                only_left[n] = sorted(lf - rf)
            if rf - lf:
                only_right[n] = sorted(rf - lf)
    return CrossCheck(not mismatches, mismatches, only_left, only_right)


def prefix_witness(g: Graph, k: int, family: PatternFamily) -> Optional[list[int]]:
    """A vertex order whose every proper prefix is a frontier member.

    Returns the breadth-first order from the first start vertex that works,
    or ``None``.  Each prefix must be connected, family-free and
    (k-1)-colourable.
    """
    for start in range(g.n):
        order = [start]
        seen = 1 << start
        i = 0
        while i < len(order):
            v = order[i]
            i += 1
            nb = g.adj[v] & ~seen
            while nb:
                low = nb & -nb
                order.append(low.bit_length() - 1)
                seen |= low
                nb ^= low
        if len(order) != g.n:
            return None
        good = True
        mask = 0
        for v in order[:-1]:
            mask |= 1 << v
            h = induced_subgraph(g, mask)
            if not (is_connected(h) and is_family_free(h, family) and color_raw(h.adj, k - 1) is not None):
                good = False
                break
        if good:
            return order
    return None
