"""Executable checks of the structural lemmas and proof claims.

Everything here works on concrete graphs: each check either confirms a
statement on the given input or returns a counterexample that can be
re-verified by hand.  Vertex sets in reports are sorted vertex lists.

Terminology (for a chosen induced path a-b-c-d, written ``p4``):

* ``P`` is ``{a, b, c, d}``; ``A`` the vertices outside ``P`` with no
  neighbour in ``P``.
* ``N_P(x)`` is the set of path vertices adjacent to ``x``.
* chair variant: ``T``/``U`` are the vertices outside ``A | P`` with
  ``N_P = {b,c}`` / ``{a,b,c,d}``.
* cricket variant: ``L, M, R, L+, R+`` have ``N_P = {a,c}, {b,c}, {b,d},
  {a,b,c}, {b,c,d}``; ``B = M | L+ | R+``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Optional

from .coloring import chromatic_number_raw, is_critical_raw, is_k_vertex_critical, maximum_independent_set
from .graph import (
    COMPLETE,
    Graph,
    common_neighbors,
    connected_components,
    induced_subgraph,
    is_homogeneous_set,
    iter_bits,
    members,
    neighborhood,
    set_relation,
    vset,
)
from .patterns import PatternFamily, contains_induced, is_family_free, named_graph

VARIANTS = ("chair", "cricket")
LETTERS = "abcd"

ALLOWED_NP = {
    "chair": ("bc", "abcd"),
    "cricket": ("ac", "bc", "bd", "abc", "bcd"),
}

# (N_P(x), forbidden pattern or None, listed 5-set in role order)
CASE_TABLES = {
    "chair": (
        ("a", "P5", "zxabc"),
        ("b", "P5", "zxbcd"),
        ("c", "P5", "zxcba"),
        ("d", "P5", "zxdcb"),
        ("ab", "P5", "zxbcd"),
        ("ac", "chair", "xzacd"),
        ("ad", "P5", "zxabc"),
        ("bc", None, None),
        ("bd", "chair", "xzdba"),
        ("cd", "P5", "zxcba"),
        ("abc", "chair", "xzacd"),
        ("abd", "chair", "xzadc"),
        ("acd", "chair", "xzdab"),
        ("bcd", "chair", "xzdba"),
        ("abcd", None, None),
    ),
    "cricket": (
        ("a", "P5", "zxabc"),
        ("b", "P5", "zxbcd"),
        ("c", "P5", "zxcba"),
        ("d", "P5", "zxdcb"),
        ("ab", "P5", "zxbcd"),
        ("ac", None, None),
        ("ad", "P5", "zxabc"),
        ("bc", None, None),
        ("bd", None, None),
        ("cd", "P5", "zxcba"),
        ("abc", None, None),
        ("abd", "cricket", "xzdab"),
        ("acd", "cricket", "xzacd"),
        ("bcd", None, None),
        ("abcd", "cricket", "xzdab"),
    ),
}

# Edges between role positions of the listed 5-sets.
ROLE_TEMPLATES = {
    "P5": ((0, 1), (1, 2), (2, 3), (3, 4)),
    # centre, two pendants, then the two-edge arm
    "chair": ((0, 1), (0, 2), (0, 3), (3, 4)),
    # centre, two pendants, then the other two triangle vertices
    "cricket": ((0, 1), (0, 2), (0, 3), (0, 4), (3, 4)),
}


def _fmt(mask: int) -> list[int]:
    return members(mask)


def _np_name(letters: str) -> str:
    return "{" + ",".join(letters) + "}"


@dataclass
class ClaimReport:
    claim: str
    holds: bool
    counterexample: Optional[dict] = None
    p4: Optional[tuple[int, int, int, int]] = None
    note: str = ""
    unconstrained: bool = False

    def __post_init__(self):
        if not self.holds and self.counterexample is None:
            raise ValueError(f"failing report {self.claim} needs a counterexample")

    def as_dict(self) -> dict:
        out = {"claim": self.claim, "holds": self.holds}
        if self.p4 is not None:
            out["p4"] = list(self.p4)
        if self.unconstrained:
            out["unconstrained"] = True
        if self.note:
            out["note"] = self.note
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out

    def line(self) -> str:
        status = "UNCONSTRAINED" if self.unconstrained else ("HOLDS" if self.holds else "FAILS")
        parts = [f"{status:<13} {self.claim}"]
        if self.p4 is not None:
            parts.append("P4=" + "-".join(map(str, self.p4)))
        if self.note:
            parts.append(self.note)
        if self.counterexample is not None:
            parts.append(f"counterexample={self.counterexample}")
        return "  ".join(parts)


# --- small predicates -------------------------------------------------------

def is_antichain(sets: Iterable[Iterable[int] | int]) -> bool:
    """True iff no member is a subset of a different member (by position).

    Members may be bitmasks or iterables of vertices.  Two equal members at
    different positions are comparable, so they break the antichain.
    """
    masks = [s if isinstance(s, int) else vset(s) for s in sets]
    for i, x in enumerate(masks):
        for j, y in enumerate(masks):
            if i != j and x & ~y == 0:
                return False
    return True


def _comparable(x: frozenset, y: frozenset) -> bool:
    return x <= y or y <= x


def induced_p4s(g: Graph, both_orientations: bool = True) -> list[tuple[int, int, int, int]]:
    """All ordered quadruples (a, b, c, d) inducing the path a-b-c-d."""
    out = []
    adj = g.adj
    for b in range(g.n):
        for c in iter_bits(adj[b]):
            for a in iter_bits(adj[b] & ~adj[c] & ~(1 << c)):
                for d in iter_bits(adj[c] & ~adj[b] & ~adj[a] & ~(1 << b) & ~(1 << a)):
                    if both_orientations or a < d:
                        out.append((a, b, c, d))
    out.sort()
    return out


def _is_induced_p4(g: Graph, p4: tuple[int, ...]) -> bool:
    if len(p4) != 4 or len(set(p4)) != 4 or any(not 0 <= v < g.n for v in p4):
        return False
    a, b, c, d = p4
    e = g.has_edge
    return e(a, b) and e(b, c) and e(c, d) and not (e(a, c) or e(a, d) or e(b, d))


# --- Lemma 1 --------------------------------------------------------------------

def find_lemma1_violation(g: Graph, max_size: int = 3) -> Optional[tuple[list[int], list[int]]]:
    """Search for disjoint nonempty X, Y (sizes <= max_size) such that X and Y
    are anticomplete, Y is complete to N(X) and chi(G[X]) <= chi(G[Y]).

    Returns ``(X, Y)`` as sorted vertex lists, or ``None``.  Critical graphs
    admit no such pair of any size; the bound only limits the search.
    """
    if max_size < 1:
        raise ValueError("max_size must be at least 1")
    chi_cache: dict[int, int] = {}

    def chi(mask: int) -> int:
        if mask not in chi_cache:
            chi_cache[mask] = chromatic_number_raw(induced_subgraph(g, mask).adj)[0]
        return chi_cache[mask]

    for size in range(1, max_size + 1):
        for xs in combinations(range(g.n), size):
            x = vset(xs)
            nx = neighborhood(g, x)
            pool = common_neighbors(g, nx) & ~x & ~nx
            if not pool:
                continue
            cx = chi(x)
            verts = members(pool)
            for ysize in range(1, min(max_size, len(verts)) + 1):
                for ys in combinations(verts, ysize):
                    y = vset(ys)
                    if chi(y) >= cx:
                        return list(xs), list(ys)
    return None


# --- Lemma 2 --------------------------------------------------------------------

def homogeneous_sets(g: Graph, proper: bool = True) -> list[int]:
    """All nonempty homogeneous sets by exhaustive scan (masks, ascending)."""
    full = g.vertices
    top = full if proper else full + 1
    out = []
    outside_rows = g.adj
    for s in range(1, top):
        ok = True
        rest = full & ~s
        while rest:
            low = rest & -rest
            hit = outside_rows[low.bit_length() - 1] & s
            if hit and hit != s:
                ok = False
                break
            rest ^= low
        if ok:
            out.append(s)
    if not proper and full not in out:
        out.append(full)
    return out


def check_lemma2(g: Graph, k: int) -> ClaimReport:
    """Every component of every proper homogeneous set is m-critical, m < k."""
    if not is_k_vertex_critical(g, k).verdict:
        raise ValueError(f"input graph is not {k}-vertex-critical")
    verdict_cache: dict[int, tuple[int, bool]] = {}
    checked = 0
    for s in homogeneous_sets(g, proper=True):
        for comp in connected_components(g, s):
            if comp not in verdict_cache:
                adj = induced_subgraph(g, comp).adj
                m, _ = chromatic_number_raw(adj)
                verdict_cache[comp] = (m, is_critical_raw(adj, m))
            m, crit = verdict_cache[comp]
            checked += 1
            if not (crit and 1 <= m < k):
                return ClaimReport(
                    "lemma2", False,
                    {"S": _fmt(s), "A": _fmt(comp), "chi_A": m, "A_critical": crit,
                     "why": f"component is not m-vertex-critical for any m < {k}"})
    return ClaimReport("lemma2", True, note=f"{checked} (set, component) pairs checked")


# --- Case tables ----------------------------------------------------------------

def case_configuration(np_letters: str) -> tuple[Graph, dict[str, int]]:
    """Path a-b-c-d, z anticomplete to it, x adjacent to z and to ``np_letters``."""
    names = {"a": 0, "b": 1, "c": 2, "d": 3, "z": 4, "x": 5}
    edges = [(0, 1), (1, 2), (2, 3), (4, 5)]
    edges += [(5, names[ch]) for ch in np_letters]
    return Graph.from_edges(6, edges), names


def verify_case_table(variant: str) -> list[ClaimReport]:
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    table_id = "table1" if variant == "chair" else "table2"
    family = PatternFamily.from_names(["P5", variant])
    reports = []
    for np_letters, pattern, listed in CASE_TABLES[variant]:
        g, names = case_configuration(np_letters)
        claim = f"{table_id}:N_P(x)={_np_name(np_letters)}"
        if pattern is None:
            allowed = np_letters in ALLOWED_NP[variant]
            free = is_family_free(g, family)
            note = ("allowed by the attachment classification; configuration is "
                    + ("(P5," + variant + ")-free" if free else "not pattern-free"))
            if allowed:
                reports.append(ClaimReport(claim, True, note=note, unconstrained=True))
            else:
                reports.append(ClaimReport(claim, False, {"why": "row marked '-' but not an allowed attachment"},
                                           unconstrained=True))
            continue
        verts = [names[ch] for ch in listed]
        sub = induced_subgraph(g, vset(verts))
        # Relabel so position i of the listed tuple becomes vertex i.
        index = {v: i for i, v in enumerate(sorted(verts))}
        perm = [0] * 5
        for pos, v in enumerate(verts):
            perm[index[v]] = pos
        in_role = sub.relabel(perm)
        expected = Graph.from_edges(5, ROLE_TEMPLATES[pattern])
        role_exact = in_role == expected
        pat = named_graph(pattern)
        iso = contains_induced(sub, pat) is not None
        ok = role_exact and iso
        listed_set = "{" + ",".join(listed) + "}"
        note = f"{pattern} on {listed_set}"
        if ok:
            reports.append(ClaimReport(claim, True, note=note))
        else:
            reports.append(ClaimReport(claim, False, {
                "listed": listed_set, "pattern": pattern,
                "induced_edges": [(listed[a], listed[b]) for a, b in in_role.edges()],
                "isomorphic": iso, "role_exact": role_exact}, note=note))
    return reports


# --- Decomposition ----------------------------------------------------------------

@dataclass
class Decomposition:
    variant: str
    p4: tuple[int, int, int, int]
    P: int
    A: int
    sets: dict[str, int]
    components: list[int]
    component_chi: list[int]
    families: dict[str, list[int]]
    Ip: dict[tuple[int, int], frozenset[int]]
    claim1_violations: list[tuple[int, str, int]] = field(default_factory=list)

    def np_letters(self, g: Graph, x: int) -> str:
        return "".join(LETTERS[i] for i, v in enumerate(self.p4) if g.adj[x] >> v & 1)


def _np_letters(g: Graph, p4: tuple[int, ...], x: int) -> str:
    return "".join(LETTERS[i] for i, v in enumerate(p4) if g.adj[x] >> v & 1)


def decompose(g: Graph, k: int, p4: tuple[int, int, int, int], variant: str) -> Decomposition:
    """Split ``g`` around the induced path ``p4`` as in the finiteness proofs.

    ``Ip[(u, p)]`` holds the indices of components from u's own family (the
    U-family for chair, the L- or R-family for cricket) that are p-chromatic
    and meet N(u).
    """
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    p4 = tuple(p4)
    if not _is_induced_p4(g, p4):
        raise ValueError(f"{p4} does not induce a path a-b-c-d")
    P = vset(p4)
    A = 0
    for x in iter_bits(g.vertices & ~P):
        if not g.adj[x] & P:
            A |= 1 << x
    if variant == "chair":
        wanted = {"bc": "T", "abcd": "U"}
        names = ("T", "U")
    else:
        wanted = {"ac": "L", "bc": "M", "bd": "R", "abc": "Lplus", "bcd": "Rplus"}
        names = ("L", "M", "R", "Lplus", "Rplus")
    sets = {name: 0 for name in names}
    violations = []
    for x in iter_bits(g.vertices & ~P & ~A):
        letters = _np_letters(g, p4, x)
        if letters in wanted:
            sets[wanted[letters]] |= 1 << x
        if g.adj[x] & A and letters not in ALLOWED_NP[variant]:
            z = (g.adj[x] & A & -(g.adj[x] & A)).bit_length() - 1
            violations.append((x, letters, z))
    comps = connected_components(g, A)
    chis = [chromatic_number_raw(induced_subgraph(g, c).adj)[0] for c in comps]
    nbhd = [neighborhood(g, c) for c in comps]
    families: dict[str, list[int]] = {}
    Ip: dict[tuple[int, int], frozenset[int]] = {}
    if variant == "chair":
        T = sets["T"]
        families["T"] = [i for i, nb in enumerate(nbhd) if nb & T]
        families["U"] = [i for i, nb in enumerate(nbhd) if not nb & T]
        owners = [(sets["U"], families["U"])]
    else:
        B = sets["M"] | sets["Lplus"] | sets["Rplus"]
        sets["B"] = B
        L, R = sets["L"], sets["R"]
        families["B"] = [i for i, nb in enumerate(nbhd) if nb & B]
        rest = [i for i, nb in enumerate(nbhd) if not nb & B]
        families["L"] = [i for i in rest if nbhd[i] and nbhd[i] & ~L == 0]
        families["R"] = [i for i in rest if nbhd[i] and nbhd[i] & ~R == 0]
        owners = [(L, families["L"]), (R, families["R"])]
    for owner_set, fam in owners:
        for u in iter_bits(owner_set):
            for p in range(1, k):
                Ip[(u, p)] = frozenset(i for i in fam if chis[i] == p and g.adj[u] & comps[i])
    return Decomposition(variant, p4, P, A, sets, comps, chis, families, Ip, violations)


# --- Claim checks -----------------------------------------------------------------

def _greedy_star(d: Decomposition, owner: int, p: int) -> list[int]:
    # A maximal subset of `owner` with pairwise distinct I_p, ascending scan.
    chosen: list[int] = []
    seen: set[frozenset[int]] = set()
    for u in iter_bits(owner):
        key = d.Ip[(u, p)]
        if key not in seen:
            seen.add(key)
            chosen.append(u)
    return chosen


def _claim1(g: Graph, d: Decomposition, tag: str) -> ClaimReport:
    if not d.claim1_violations:
        return ClaimReport(f"{tag}.claim1", True, p4=d.p4)
    x, letters, z = d.claim1_violations[0]
    return ClaimReport(f"{tag}.claim1", False, {
        "x": x, "z": z, "N_P(x)": _np_name(letters),
        "why": f"attachment of an A-vertex outside {[_np_name(s) for s in ALLOWED_NP[d.variant]]}"}, p4=d.p4)


def _claim2(g: Graph, d: Decomposition, tag: str) -> ClaimReport:
    for comp in d.components:
        if not is_homogeneous_set(g, comp):
            mixed = next(v for v in iter_bits(g.vertices & ~comp) if 0 != g.adj[v] & comp != comp)
            return ClaimReport(f"{tag}.claim2", False, {
                "component": _fmt(comp), "mixed_vertex": mixed,
                "why": "vertex mixed on a component of G[A]"}, p4=d.p4)
    return ClaimReport(f"{tag}.claim2", True, p4=d.p4, note=f"{len(d.components)} components")


def _bound_claim(d: Decomposition, claim: str, fam: list[int], k: int, label: str) -> ClaimReport:
    r = len(fam)
    if r <= k - 3:
        return ClaimReport(claim, True, p4=d.p4, note=f"r={r} <= {k - 3}")
    return ClaimReport(claim, False, {
        "components": [_fmt(d.components[i]) for i in fam],
        "why": f"{r} components of G[A] have a neighbour in {label}, more than k-3={k - 3}"}, p4=d.p4)


def _antichain_claims(g: Graph, d: Decomposition, k: int, tag: str, owner_name: str,
                      fam: list[int], claim_nb: str, claim_star: str) -> list[ClaimReport]:
    owner = d.sets[owner_name]
    out = []
    bad_nb = None
    bad_star = None
    notes = []
    for p in range(1, k):
        idx = [i for i in fam if d.component_chi[i] == p]
        nbs = [neighborhood(g, d.components[i]) for i in idx]
        if bad_nb is None and not is_antichain(nbs):
            bad_nb = {"p": p, "components": [_fmt(d.components[i]) for i in idx],
                      "neighbourhoods": [_fmt(nb) for nb in nbs],
                      "why": "two p-chromatic components with nested neighbourhoods"}
        star = vset(_greedy_star(d, owner, p))
        if idx:
            notes.append(f"{owner_name}_{p}*={_fmt(star)}")
        cut = [nb & star for nb in nbs]
        if bad_star is None and not is_antichain(cut):
            bad_star = {"p": p, "star": _fmt(star), "components": [_fmt(d.components[i]) for i in idx],
                        "restricted_neighbourhoods": [_fmt(c) for c in cut],
                        "why": "restricted neighbourhoods are not an antichain"}
    out.append(ClaimReport(claim_nb, bad_nb is None, bad_nb, p4=d.p4))
    out.append(ClaimReport(claim_star, bad_star is None, bad_star, p4=d.p4,
                           note="greedy ascending choice: " + ", ".join(notes) if notes else ""))
    return out


def _components_critical(g: Graph, d: Decomposition, k: int, claim: str) -> ClaimReport:
    for comp, m in zip(d.components, d.component_chi):
        adj = induced_subgraph(g, comp).adj
        if not (1 <= m < k and is_critical_raw(adj, m)):
            return ClaimReport(claim, False, {"component": _fmt(comp), "chi": m,
                                              "why": f"component is not m-vertex-critical for m < {k}"}, p4=d.p4)
    return ClaimReport(claim, True, p4=d.p4)


def _chair_claims(g: Graph, d: Decomposition, k: int) -> list[ClaimReport]:
    tag = "chair"
    out = [_claim1(g, d, tag), _claim2(g, d, tag)]
    out.append(_bound_claim(d, "chair.claim3", d.families["T"], k, "T"))
    U = d.sets["U"]
    leak = [i for i in d.families["U"] if neighborhood(g, d.components[i]) & ~U]
    if leak:
        i = leak[0]
        out.append(ClaimReport("chair.claim4.N_subset_U", False, {
            "component": _fmt(d.components[i]),
            "outside_U": _fmt(neighborhood(g, d.components[i]) & ~U),
            "why": "component without T-neighbour has a neighbour outside U"}, p4=d.p4))
    else:
        out.append(ClaimReport("chair.claim4.N_subset_U", True, p4=d.p4))
    out.extend(_antichain_claims(g, d, k, tag, "U", d.families["U"], "chair.claim4", "chair.claim5"))
    bound_bad = comp_bad = alpha_bad = None
    for p in range(1, k):
        star = _greedy_star(d, U, p)
        if bound_bad is None and len(star) > 2 * (k - 1):
            bound_bad = {"p": p, "star": star, "why": f"|U_p*|={len(star)} > 2(k-1)={2 * (k - 1)}"}
        for u, v in combinations(star, 2):
            if not g.has_edge(u, v) and not _comparable(d.Ip[(u, p)], d.Ip[(v, p)]) and comp_bad is None:
                comp_bad = {"p": p, "u": u, "v": v, "I_u": sorted(d.Ip[(u, p)]), "I_v": sorted(d.Ip[(v, p)]),
                            "why": "nonadjacent vertices of U_p* with incomparable I_p"}
        if alpha_bad is None and star:
            ind = maximum_independent_set(g, vset(star))
            if ind.bit_count() > 2:
                alpha_bad = {"p": p, "star": star, "independent": _fmt(ind), "why": "alpha(G[U_p*]) > 2"}
    out.append(ClaimReport("chair.claim6.comparable", comp_bad is None, comp_bad, p4=d.p4))
    out.append(ClaimReport("chair.claim6.alpha", alpha_bad is None, alpha_bad, p4=d.p4))
    out.append(ClaimReport("chair.claim6", bound_bad is None, bound_bad, p4=d.p4))
    out.append(_components_critical(g, d, k, "chair.claim7.components"))
    return out


def _cricket_claims(g: Graph, d: Decomposition, k: int) -> list[ClaimReport]:
    tag = "cricket"
    out = [_claim1(g, d, tag), _claim2(g, d, tag)]
    out.append(_bound_claim(d, "cricket.claim3", d.families["B"], k, "B"))
    L, R, B = d.sets["L"], d.sets["R"], d.sets["B"]
    stray = [i for i, c in enumerate(d.components)
             if not neighborhood(g, c) & B and neighborhood(g, c) & ~(L | R)]
    if stray:
        c = d.components[stray[0]]
        out.append(ClaimReport("cricket.remaining_in_L_or_R", False, {
            "component": _fmt(c), "neighbours": _fmt(neighborhood(g, c)),
            "why": "component without B-neighbour has a neighbour outside L | R"}, p4=d.p4))
    else:
        out.append(ClaimReport("cricket.remaining_in_L_or_R", True, p4=d.p4))
    if L and R and set_relation(g, L, R) != COMPLETE:
        miss = next((x, y) for x in iter_bits(L) for y in iter_bits(R) if not g.has_edge(x, y))
        out.append(ClaimReport("cricket.claim4", False, {"L": _fmt(L), "R": _fmt(R), "non_edge": list(miss),
                                                         "why": "L is not complete to R"}, p4=d.p4))
    else:
        out.append(ClaimReport("cricket.claim4", True, p4=d.p4))
    both = [c for c in d.components if neighborhood(g, c) & L and neighborhood(g, c) & R]
    if both:
        out.append(ClaimReport("cricket.claim5", False, {
            "component": _fmt(both[0]), "why": "component with neighbours in both L and R"}, p4=d.p4))
    else:
        out.append(ClaimReport("cricket.claim5", True, p4=d.p4))
    for side, owner in (("L", L), ("R", R)):
        out.extend(_antichain_claims(g, d, k, tag, side, d.families[side],
                                     f"cricket.claim6.{side}", f"cricket.claim7.{side}"))
    for side, owner in (("L", L), ("R", R)):
        c8 = c9 = None
        for p in range(1, k):
            star = _greedy_star(d, owner, p)
            for u, v in combinations(star, 2):
                iu, iv = d.Ip[(u, p)], d.Ip[(v, p)]
                if not g.has_edge(u, v):
                    if c8 is None and not _comparable(iu, iv):
                        c8 = {"p": p, "u": u, "v": v, "I_u": sorted(iu), "I_v": sorted(iv),
                              "why": "nonadjacent pair with incomparable I_p"}
                elif c9 is None and (len(iu - iv) > 1 or len(iv - iu) > 1):
                    c9 = {"p": p, "u": u, "v": v, "I_u": sorted(iu), "I_v": sorted(iv),
                          "why": "adjacent pair whose I_p differ by more than one index"}
        out.append(ClaimReport(f"cricket.claim8.{side}", c8 is None, c8, p4=d.p4))
        out.append(ClaimReport(f"cricket.claim9.{side}", c9 is None, c9, p4=d.p4))
    out.append(_components_critical(g, d, k, "cricket.claim10.components"))
    return out


def verify_proof_claims(g: Graph, k: int, variant: str, exhaustive_max_n: int = 10,
                        sample_size: int = 100, seed: int = 0,
                        check_preconditions: bool = True) -> list[ClaimReport]:
    """Check every proof claim of the variant on every induced P4 of ``g``.

    Graphs with more than ``exhaustive_max_n`` vertices are checked on a
    seeded sample of ``sample_size`` oriented P4s.  Both orientations of each
    path are used, since the proof may start from either.
    """
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    if check_preconditions:
        if not is_k_vertex_critical(g, k).verdict:
            raise ValueError(f"input graph is not {k}-vertex-critical")
        if not is_family_free(g, PatternFamily.from_names(["P5", variant])):
            raise ValueError(f"input graph is not (P5,{variant})-free")
    p4s = induced_p4s(g)
    if g.n > exhaustive_max_n and len(p4s) > sample_size:
        p4s = sorted(random.Random(seed).sample(p4s, sample_size))
    reports = []
    check = _chair_claims if variant == "chair" else _cricket_claims
    for p4 in p4s:
        reports.extend(check(g, decompose(g, k, p4, variant), k))
    return reports


# --- Lemma 5, degenerate case -------------------------------------------------------

@dataclass(frozen=True)
class RamseyInstance:
    q: int
    X: tuple[int, ...]
    Y: Graph
    I: tuple[frozenset[int], ...]

    def S(self, x: int) -> frozenset[int]:
        return frozenset(y for y in range(self.Y.n) if x in self.I[y])


def check_ramsey_lemma_degenerate(inst: RamseyInstance) -> ClaimReport:
    """Lemma 5 with q = 1: the S_x are nested, so an antichain has size <= 1."""
    if inst.q != 1:
        raise NotImplementedError("only q = 1 is checkable; the general Ramsey bound is out of reach")
    Y = inst.Y
    if Y.num_edges():
        raise ValueError("q = 1 requires an edgeless Y")
    if len(inst.I) != Y.n:
        raise ValueError("I must give one set per vertex of Y")
    xs = set(inst.X)
    for y, iy in enumerate(inst.I):
        if not iy <= xs:
            raise ValueError(f"I({y}) is not a subset of X")
    for y, y2 in combinations(range(Y.n), 2):
        if not Y.has_edge(y, y2) and not _comparable(inst.I[y], inst.I[y2]):
            raise ValueError(f"hypothesis fails: I({y}) and I({y2}) are incomparable")
    # Chain order on Y; every S_x must be an up-set of it.
    order = sorted(range(Y.n), key=lambda y: (len(inst.I[y]), y))
    S = {x: inst.S(x) for x in inst.X}
    for x, sx in S.items():
        ranks = sorted(order.index(y) for y in sx)
        if ranks and ranks != list(range(Y.n - len(ranks), Y.n)):
            return ClaimReport("lemma5.q1", False, {"x": x, "S_x": sorted(sx),
                                                    "why": "S_x is not a terminal segment of the chain"})
    for x, x2 in combinations(inst.X, 2):
        if not _comparable(S[x], S[x2]):
            return ClaimReport("lemma5.q1", False, {"x": x, "x2": x2, "why": "S_x and S_x' incomparable"})
    anti = is_antichain([vset(S[x]) for x in inst.X])
    if anti and len(inst.X) > 1:
        return ClaimReport("lemma5.q1", False, {"X": list(inst.X), "why": "antichain with |X| > 1"})
    return ClaimReport("lemma5.q1", True, note=f"|X|={len(inst.X)}, antichain={anti}")


def exhaustive_ramsey_degenerate(max_x: int = 4, max_y: int = 4) -> tuple[ClaimReport, dict]:
    """Run the q = 1 check over every instance with |X| <= max_x, |Y| <= max_y."""
    stats = {"instances": 0, "antichains": 0, "largest_antichain": 0}
    for nx in range(max_x + 1):
        X = tuple(range(nx))
        subsets = [frozenset(c) for r in range(nx + 1) for c in combinations(X, r)]
        for ny in range(max_y + 1):
            Y = Graph.empty(ny)
            for I in product(subsets, repeat=ny):
                if any(not _comparable(a, b) for a, b in combinations(I, 2)):
                    continue
                inst = RamseyInstance(1, X, Y, tuple(I))
                rep = check_ramsey_lemma_degenerate(inst)
                stats["instances"] += 1
                if not rep.holds:
                    return rep, stats
                if is_antichain([vset(inst.S(x)) for x in X]):
                    stats["antichains"] += 1
                    stats["largest_antichain"] = max(stats["largest_antichain"], nx)
    return ClaimReport("lemma5.q1.exhaustive", True,
                       note=f"{stats['instances']} instances, largest antichain {stats['largest_antichain']}"), stats


# --- P4 + lP1 -------------------------------------------------------------------------

def max_ell(g: Graph) -> int:
    """Largest l with P4 + lP1 induced in ``g``; -1 if ``g`` is P4-free."""
    best = -1
    seen = set()
    for p4 in induced_p4s(g, both_orientations=False):
        P = vset(p4)
        if P in seen:
            continue
        seen.add(P)
        A = 0
        for x in iter_bits(g.vertices & ~P):
            if not g.adj[x] & P:
                A |= 1 << x
        best = max(best, maximum_independent_set(g, A).bit_count() if A else 0)
    return best


def min_ell_for_P4_ellP1_freeness(corpus: Iterable[Graph]) -> int:
    """Smallest l >= 0 such that every graph of the corpus is (P4 + lP1)-free."""
    corpus = list(corpus)
    if not corpus:
        raise ValueError("corpus must be nonempty")
    return max(max_ell(g) + 1 for g in corpus)
