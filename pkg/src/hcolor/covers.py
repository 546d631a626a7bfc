"""Matchings, edge colorings, and cover structures on cubic multigraphs.

Covers come in four kinds, all represented by CoverList:

  PMCover         any number of perfect matchings whose union is E(G)
  BergeFulkerson  six perfect matchings, every edge in exactly two
  Even52          five even subgraphs, every edge in exactly two
  Parity4         four parity subgraphs, every edge in one or two

Searchers return verified witnesses or None; verification lives in
verify_cover so it can be re-run independently of any search.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, permutations

from .errors import (
    BadJoinConfiguration,
    BadK,
    EquivalenceViolation,
    NotADigon,
    NotAString,
    NotContractible,
    NoValidRenaming,
    PreconditionViolated,
    ProofAssertionFailed,
)
from .multigraph import MultiGraph, build_graph
from .transform import (
    DiamondString,
    EdgeCorrespondence,
    TriangleRef,
    contract_triangle,
    expand_vertices_to_triangles,
    expansion_triangle,
    is_contractible,
    opposite_edge,
)

COVER_KINDS = ("PMCover", "BergeFulkerson", "Even52", "Parity4")


def _subset_degrees(g: MultiGraph, s) -> list[int]:
    deg = [0] * g.vertex_count
    for e in s:
        u, v = g.endpoints(e)
        deg[u] += 1
        deg[v] += 1  # a loop hits the same entry twice
    return deg


def is_matching(g: MultiGraph, s) -> bool:
    """No two edges of s share a vertex; loops never qualify."""
    if any(g.is_loop(e) for e in s):
        return False
    return all(d <= 1 for d in _subset_degrees(g, s))


def is_perfect_matching(g: MultiGraph, s) -> bool:
    return all(d == 1 for d in _subset_degrees(g, s))


def is_even(g: MultiGraph, s) -> bool:
    """Every vertex has even degree in s."""
    return all(d % 2 == 0 for d in _subset_degrees(g, s))


def is_parity(g: MultiGraph, s) -> bool:
    """Degrees in s agree with degrees in g mod 2 (all odd when cubic)."""
    deg = _subset_degrees(g, s)
    return all(deg[v] % 2 == g.degree(v) % 2 for v in range(g.vertex_count))


def enumerate_perfect_matchings(g: MultiGraph) -> list[frozenset[int]]:
    """All perfect matchings, as edge-index sets.

    Backtracks on the lowest-index uncovered vertex, so the output order is
    deterministic and parallel edges yield distinct matchings.
    """
    n = g.vertex_count
    if n % 2:
        return []
    covered = [False] * n
    chosen: list[int] = []
    out: list[frozenset[int]] = []

    def extend() -> None:
        v = next((x for x in range(n) if not covered[x]), None)
        if v is None:
            out.append(frozenset(chosen))
            return
        for e in g.incident_edges(v):
            if g.is_loop(e):
                continue
            u = g.other_end(e, v)
            if covered[u]:
                continue
            covered[v] = covered[u] = True
            chosen.append(e)
            extend()
            chosen.pop()
            covered[v] = covered[u] = False

    if n:
        extend()
    else:
        out.append(frozenset())
    return out


def has_perfect_matching(g: MultiGraph) -> bool:
    n = g.vertex_count
    if n % 2:
        return False
    covered = [False] * n

    def extend() -> bool:
        v = next((x for x in range(n) if not covered[x]), None)
        if v is None:
            return True
        for e in g.incident_edges(v):
            if g.is_loop(e):
                continue
            u = g.other_end(e, v)
            if covered[u]:
                continue
            covered[v] = covered[u] = True
            if extend():
                return True
            covered[v] = covered[u] = False
        return False

    return extend()


def chromatic_index_cubic(g: MultiGraph) -> tuple[int, dict[int, int] | None]:
    """(3, witness) when a proper 3-edge-coloring exists, else (4, None).

    Only 3-colorability is decided by search; the 4 answer carries no
    certificate.  The witness maps edge index to color in {0, 1, 2}.
    """
    m = g.edge_count
    used = [0] * g.vertex_count
    assignment = [-1] * m

    def extend(i: int, introduced: int) -> bool:
        if i == m:
            return True
        u, v = g.endpoints(i)
        # colors are interchangeable: never skip past the first unused one
        for c in range(min(3, introduced + 1)):
            bit = 1 << c
            if used[u] & bit or used[v] & bit:
                continue
            used[u] |= bit
            used[v] |= bit
            assignment[i] = c
            if extend(i + 1, max(introduced, c + 1)):
                return True
            assignment[i] = -1
            used[u] &= ~bit
            used[v] &= ~bit
        return False

    if extend(0, 0):
        return 3, {e: assignment[e] for e in range(m)}
    return 4, None


@dataclass(frozen=True)
class CoverList:
    """An ordered list of edge subsets claimed to cover the graph."""

    graph: MultiGraph
    kind: str
    parts: tuple[frozenset[int], ...]


def verify_cover(c: CoverList) -> bool:
    """Exact re-check of the invariants for c.kind."""
    g = c.graph
    m = g.edge_count
    if c.kind not in COVER_KINDS:
        return False
    if any(not part <= frozenset(range(m)) for part in c.parts):
        return False
    count = [0] * m
    for part in c.parts:
        for e in part:
            count[e] += 1
    if c.kind == "PMCover":
        return all(is_perfect_matching(g, p) for p in c.parts) and all(
            x >= 1 for x in count
        )
    if c.kind == "BergeFulkerson":
        return (
            len(c.parts) == 6
            and all(is_perfect_matching(g, p) for p in c.parts)
            and all(x == 2 for x in count)
        )
    if c.kind == "Even52":
        return (
            len(c.parts) == 5
            and all(is_even(g, p) for p in c.parts)
            and all(x == 2 for x in count)
        )
    return (
        len(c.parts) == 4
        and all(is_parity(g, p) for p in c.parts)
        and all(x in (1, 2) for x in count)
    )


def pm_cover_number(g: MultiGraph, k_max: int) -> tuple[int, CoverList] | None:
    """Least k <= k_max such that k perfect matchings cover E(g), or None.

    None also covers the case of an edge lying in no perfect matching.
    """
    if k_max < 1:
        raise BadK(f"k_max must be >= 1, got {k_max}")
    pms = enumerate_perfect_matchings(g)
    m = g.edge_count
    coverable = frozenset().union(*pms) if pms else frozenset()
    if len(coverable) < m:
        return None
    by_edge: list[list[int]] = [[i for i, pm in enumerate(pms) if e in pm] for e in range(m)]
    times = [0] * m

    def extend(chosen: list[int], k: int) -> list[int] | None:
        e = next((x for x in range(m) if times[x] == 0), None)
        if e is None:
            return list(chosen)
        if len(chosen) == k:
            return None
        # wider matchings first: maximize fresh coverage
        cands = sorted(
            (i for i in by_edge[e] if i not in chosen),
            key=lambda i: (-sum(1 for x in pms[i] if times[x] == 0), i),
        )
        for i in cands:
            chosen.append(i)
            for x in pms[i]:
                times[x] += 1
            got = extend(chosen, k)
            for x in pms[i]:
                times[x] -= 1
            chosen.pop()
            if got is not None:
                return got
        return None

    for k in range(1, k_max + 1):
        got = extend([], k)
        if got is not None:
            cover = CoverList(g, "PMCover", tuple(pms[i] for i in got))
            if not verify_cover(cover):
                raise ProofAssertionFailed("perfect matching cover failed re-check")
            return k, cover
    return None


def find_berge_fulkerson(g: MultiGraph) -> CoverList | None:
    """Six perfect matchings covering every edge exactly twice, or None."""
    pms = enumerate_perfect_matchings(g)
    m = g.edge_count
    if not pms:
        return None if m else CoverList(g, "BergeFulkerson", (frozenset(),) * 6)
    need = [2] * m
    by_edge: list[list[int]] = [[i for i, pm in enumerate(pms) if e in pm] for e in range(m)]

    def extend(chosen: list[int]) -> list[int] | None:
        e = next((x for x in range(m) if need[x] > 0), None)
        if e is None:
            return list(chosen) if len(chosen) == 6 else None
        r = need[e]
        if len(chosen) + r > 6:
            return None
        # settle edge e completely: pick the whole multiset of parts covering it
        cands = [i for i in by_edge[e] if all(need[x] >= 1 for x in pms[i])]
        for combo in combinations_with_replacement(cands, r):
            for i in combo:
                for x in pms[i]:
                    need[x] -= 1
            if min(need) >= 0:
                chosen.extend(combo)
                got = extend(chosen)
                del chosen[len(chosen) - r:]
                if got is not None:
                    for i in combo:
                        for x in pms[i]:
                            need[x] += 1
                    return got
            for i in combo:
                for x in pms[i]:
                    need[x] += 1
        return None

    got = extend([])
    if got is None:
        return None
    cover = CoverList(g, "BergeFulkerson", tuple(pms[i] for i in got))
    if not verify_cover(cover):
        raise ProofAssertionFailed("Berge-Fulkerson witness failed re-check")
    return cover


def enumerate_even_subgraphs(g: MultiGraph) -> list[frozenset[int]]:
    """Every even edge subset, generated from fundamental cycles.

    The cycle space has dimension |E| - |V| + components, so the output has
    exactly 2**dim entries including the empty set.
    """
    n, m = g.vertex_count, g.edge_count
    parent_edge = [-1] * n
    seen = [False] * n
    tree: set[int] = set()
    for root in range(n):
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        while queue:
            v = queue.pop()
            for e in g.incident_edges(v):
                u = g.other_end(e, v)
                if not seen[u]:
                    seen[u] = True
                    parent_edge[u] = e
                    tree.add(e)
                    queue.append(u)

    def tree_path(u: int, v: int) -> set[int]:
        # walk both vertices to the root, then cancel the shared tail
        left: list[int] = []
        x = u
        while parent_edge[x] != -1:
            e = parent_edge[x]
            left.append(e)
            x = g.other_end(e, x)
        right: list[int] = []
        x = v
        while parent_edge[x] != -1:
            e = parent_edge[x]
            right.append(e)
            x = g.other_end(e, x)
        return set(left) ^ set(right)

    basis: list[frozenset[int]] = []
    for e in range(m):
        if e in tree:
            continue
        u, v = g.endpoints(e)
        basis.append(frozenset(tree_path(u, v) ^ {e}))
    out = [frozenset()]
    for cyc in basis:
        out.extend([s ^ cyc for s in out])
    return out


def _canonical_step(val, intro: int) -> int | None:
    """Symbol symmetry breaking: new symbols must appear in ascending order.

    Returns the updated count of introduced symbols, or None if val skips
    ahead of the next unused symbol.
    """
    nxt = intro
    for s in val:
        if s < nxt:
            continue
        if s == nxt:
            nxt += 1
            continue
        return None
    return nxt


def _cover_search(g: MultiGraph, values, vertex_filter, part_count: int):
    """Shared backtracking core for the symbol-assignment cover searches.

    values: candidate symbol sets per edge, each a sorted tuple.
    vertex_filter(assigned_vals, cand) -> bool: may cand join the already
    assigned incident values at a vertex and still extend to a valid star.
    """
    m = g.edge_count
    assigned: list[tuple[int, ...] | None] = [None] * m
    incident = [list(g.incident_edges(v)) for v in range(g.vertex_count)]

    def pick() -> int | None:
        best, score = None, -1
        for e in range(m):
            if assigned[e] is not None:
                continue
            u, v = g.endpoints(e)
            s = sum(1 for x in incident[u] if assigned[x] is not None) + sum(
                1 for x in incident[v] if assigned[x] is not None
            )
            if s > score:
                best, score = e, s
        return best

    def candidates(e: int) -> list[tuple[int, ...]]:
        u, v = g.endpoints(e)
        cands = values
        for w in (u, v):
            around = [assigned[x] for x in incident[w] if x != e and assigned[x] is not None]
            if around:
                cands = [c for c in cands if vertex_filter(around, c)]
        return cands

    def extend(intro: int) -> bool:
        e = pick()
        if e is None:
            return True
        for cand in candidates(e):
            nxt = _canonical_step(cand, intro)
            if nxt is None:
                continue
            assigned[e] = cand
            if extend(nxt):
                return True
            assigned[e] = None
        return False

    if not extend(0):
        return None
    parts = tuple(
        frozenset(e for e in range(m) if s in assigned[e]) for s in range(part_count)
    )
    return parts


def find_even_cover_5_2(g: MultiGraph) -> CoverList | None:
    """Five even subgraphs covering every edge exactly twice, or None.

    Assigns each edge an unordered pair of part symbols directly.  At a
    vertex the three incident pairs must read {ij, ik, jk} for three
    distinct symbols, which is exactly evenness of all five parts there;
    the search prunes with that local condition.
    """
    if g.has_loops():
        return None  # the lone non-loop edge at a loop vertex breaks parity
    pairs = [(i, j) for i in range(5) for j in range(i + 1, 5)]

    def ok(around, cand) -> bool:
        if len(around) == 1:
            return len(set(around[0]) & set(cand)) == 1
        forced = set(around[0]) ^ set(around[1])
        return len(forced) == 2 and set(cand) == forced

    parts = _cover_search(g, pairs, ok, 5)
    if parts is None:
        return None
    cover = CoverList(g, "Even52", parts)
    if not verify_cover(cover):
        raise ProofAssertionFailed("even cover witness failed re-check")
    return cover


def find_parity_cover_4(g: MultiGraph) -> CoverList | None:
    """Four parity subgraphs hitting every edge once or twice, or None.

    Each edge gets a set of one or two part symbols; at every vertex each
    of the four symbols must occur an odd number of times, leaving only two
    local configurations (sizes 2,1,1 on distinct symbols, or 2,2,2 through
    a common symbol).
    """
    if g.has_loops():
        return None
    subsets = [(i,) for i in range(4)] + [(i, j) for i in range(4) for j in range(i + 1, 4)]

    def forced_rest(a, b) -> set[int]:
        # symbols still even after a and b must all sit in the third edge
        return {s for s in range(4) if ((s in a) + (s in b)) % 2 == 0}

    def ok(around, cand) -> bool:
        if len(around) == 1:
            return len(forced_rest(around[0], cand)) in (1, 2)
        return set(cand) == forced_rest(around[0], around[1])

    parts = _cover_search(g, subsets, ok, 4)
    if parts is None:
        return None
    cover = CoverList(g, "Parity4", parts)
    if not verify_cover(cover):
        raise ProofAssertionFailed("parity cover witness failed re-check")
    return cover


def cq_equivalence_check(g: MultiGraph) -> tuple[CoverList | None, CoverList | None]:
    """Run both cover searches and insist their existence answers agree."""
    even = find_even_cover_5_2(g)
    parity = find_parity_cover_4(g)
    if (even is None) != (parity is None):
        raise EquivalenceViolation(
            f"even cover {'exists' if even else 'missing'} but parity cover "
            f"{'exists' if parity else 'missing'}"
        )
    return even, parity


def descend_even_cover_through_triangle(
    g: MultiGraph, t: TriangleRef, c: CoverList
) -> CoverList:
    """Restrict an Even52 cover of g to g with the triangle t contracted.

    Parts are first renamed so the three cut edges are covered by the part
    pairs {0,1}, {0,2}, {1,2} and the last two parts avoid the cut, then
    every part is pushed through the contraction correspondence.
    """
    if c.kind != "Even52" or c.graph != g or not verify_cover(c):
        raise PreconditionViolated("descent needs a valid Even52 cover of g")
    if not is_contractible(g, t):
        raise NotContractible(f"triangle {t.vertices} is not contractible")
    cut = sorted(opposite_edge(g, t, e) for e in t.edges)
    want = [frozenset({0, 1}), frozenset({0, 2}), frozenset({1, 2})]
    renamed = None
    for perm in permutations(range(5)):
        parts = tuple(c.parts[i] for i in perm)
        got = sorted(frozenset(i for i in range(5) if e in parts[i]) for e in cut)
        if got == want:
            renamed = parts
            break
    if renamed is None:
        raise NoValidRenaming("no part permutation puts the 3-cut in normal form")
    contracted, corr = contract_triangle(g, t)
    cmap = corr.as_dict()
    out = CoverList(
        contracted,
        "Even52",
        tuple(frozenset(cmap[e] for e in part if e in cmap) for part in renamed),
    )
    if not verify_cover(out):
        raise ProofAssertionFailed("descended cover failed re-check")
    return out


def lift_join_cover_to_triangle_expansion(h: MultiGraph, c: CoverList) -> CoverList:
    """Extend a Parity4 cover of h to a 4-part perfect matching cover of the
    expansion of h with every vertex replaced by a triangle.

    Inherited edges keep their parts; at each triangle, a part holding one
    inherited edge also takes the opposite triangle edge, and a part holding
    all three takes none.
    """
    if c.kind != "Parity4" or c.graph != h or not verify_cover(c):
        raise BadJoinConfiguration("lift needs a valid Parity4 cover of h")
    everything = tuple(range(h.vertex_count))
    expanded, corr = expand_vertices_to_triangles(h, everything)
    cmap = corr.as_dict()
    parts = [set(cmap[e] for e in part) for part in c.parts]
    for v in range(h.vertex_count):
        tri = expansion_triangle(h, expanded, everything, v)
        for i, part in enumerate(c.parts):
            inc = [e for e in h.incident_edges(v) if e in part]
            if len(inc) == 1:
                parts[i].add(opposite_edge(expanded, tri, cmap[inc[0]]))
            elif len(inc) != 3:
                raise BadJoinConfiguration(
                    f"part {i} holds {len(inc)} edges at vertex {v}"
                )
    out = CoverList(expanded, "PMCover", tuple(frozenset(p) for p in parts))
    if not (verify_cover(out) and len(out.parts) == 4):
        raise ProofAssertionFailed("lifted cover failed re-check")
    return out


def _edges_between(g: MultiGraph, a: int, b: int) -> list[int]:
    return [e for e in range(g.edge_count) if set(g.endpoints(e)) == {a, b}]


def _removed_reduction(g: MultiGraph, drop_vertices: frozenset[int], drop_edges: set[int],
                       a: int, b: int):
    """Delete drop_vertices and drop_edges, then join a and b by a new edge.

    Returns the reduced graph, the survivor index map old->new, and the new
    edge's index.  The result may carry a loop when a == b.
    """
    keep = [e for e in range(g.edge_count) if e not in drop_edges]
    stay = [x for x in range(g.vertex_count) if x not in drop_vertices]
    ren = {x: i for i, x in enumerate(stay)}
    edges = []
    for e in keep:
        u, v = g.endpoints(e)
        edges.append((ren[u], ren[v]))
    edges.append((ren[a], ren[b]))
    reduced = build_graph(
        len(stay), edges, allow_loops=any(u == v for u, v in edges)
    )
    fwd = {e: i for i, e in enumerate(keep)}
    return reduced, fwd, len(keep)


def _lift_cover(g: MultiGraph, reduced: MultiGraph, fwd: dict[int, int], new_idx: int,
                c: CoverList, with_new: frozenset[int], avoid_cycle):
    """Shared lift body: rewrite each part of a 4-part PM cover of the
    reduced graph into a part of g, adding with_new for parts holding the
    replacement edge and the next avoid_cycle entry otherwise."""
    if (
        c.kind != "PMCover"
        or len(c.parts) != 4
        or c.graph != reduced
        or not verify_cover(c)
    ):
        raise PreconditionViolated("lift needs a valid 4-part PM cover of the reduced graph")
    inv = {i: e for e, i in fwd.items()}
    out_parts = []
    alt = 0
    for part in c.parts:
        if new_idx in part:
            lifted = {inv[x] for x in part if x != new_idx} | with_new
        else:
            lifted = {inv[x] for x in part} | avoid_cycle(alt)
            alt += 1
        out_parts.append(frozenset(lifted))
    out = CoverList(g, "PMCover", tuple(out_parts))
    if not verify_cover(out):
        raise ProofAssertionFailed("lifted perfect matching cover failed re-check")
    return out


def digon_reduction(g: MultiGraph, u: int, v: int):
    """Remove a pair of vertices joined by exactly two parallel edges.

    The outside neighbors u' and v' are joined by a fresh edge (a loop when
    they coincide).  Returns (reduced graph, lift), where lift turns any
    4-part perfect matching cover of the reduced graph into one of g.
    """
    if u == v:
        raise NotADigon("digon endpoints must be distinct vertices")
    digon = _edges_between(g, u, v)
    if len(digon) != 2:
        raise NotADigon(f"vertices {u},{v} are joined by {len(digon)} edges, need 2")
    e1, e2 = digon
    (eu,) = [e for e in g.incident_edges(u) if e not in digon]
    (ev,) = [e for e in g.incident_edges(v) if e not in digon]
    u2, v2 = g.other_end(eu, u), g.other_end(ev, v)
    if u2 in (u, v) or v2 in (u, v):
        raise NotADigon("digon outside neighbors must leave the pair")
    reduced, fwd, new_idx = _removed_reduction(
        g, frozenset({u, v}), {e1, e2, eu, ev}, u2, v2
    )

    def lift(c: CoverList) -> CoverList:
        return _lift_cover(
            g, reduced, fwd, new_idx, c,
            with_new=frozenset({eu, ev}),
            avoid_cycle=lambda i: {e1 if i % 2 == 0 else e2},
        )

    return reduced, lift


def diamond_string_reduction(g: MultiGraph, s: DiamondString):
    """Remove a whole string of diamonds, joining the outside neighbors of
    its head and tail corners by a fresh edge.

    Returns (reduced graph, lift) with the same lift contract as the digon
    reduction.  The string need not be maximal: a chain sliced out of a
    ring of diamonds is accepted.
    """
    spine = list(s.vertices)
    inside: set[int] = set()
    mid_edges: list[int] = []
    patt_a: list[int] = []  # head-side corner to first mid, tail-side to second
    patt_b: list[int] = []
    for d, (h, t) in zip(s.diamonds, s.oriented_corners):
        m1, m2 = d.mids
        for a, b in ((h, m1), (h, m2), (t, m1), (t, m2), (m1, m2)):
            found = _edges_between(g, a, b)
            if len(found) != 1:
                raise NotAString(f"diamond edge {a},{b} missing or doubled")
        mid_edges.append(_edges_between(g, m1, m2)[0])
        patt_a += [_edges_between(g, h, m1)[0], _edges_between(g, t, m2)[0]]
        patt_b += [_edges_between(g, h, m2)[0], _edges_between(g, t, m1)[0]]
        inside.update(_edges_between(g, a, b)[0] for a, b in
                      ((h, m1), (h, m2), (t, m1), (t, m2), (m1, m2)))
    connectors: list[int] = []
    for (_, t), (h, _) in zip(s.oriented_corners, s.oriented_corners[1:]):
        found = _edges_between(g, t, h)
        if len(found) != 1:
            raise NotAString(f"missing connector between corners {t} and {h}")
        connectors.append(found[0])
    sv = s.vertices
    head_out = [e for e in g.incident_edges(s.head)
                if g.other_end(e, s.head) not in sv]
    tail_out = [e for e in g.incident_edges(s.tail)
                if g.other_end(e, s.tail) not in sv]
    if len(head_out) != 1 or len(tail_out) != 1:
        raise NotAString("head and tail must each have one neighbor outside the string")
    eu, ev = head_out[0], tail_out[0]
    u2, v2 = g.other_end(eu, s.head), g.other_end(ev, s.tail)
    drop = inside | set(connectors) | {eu, ev}
    for e in range(g.edge_count):
        a, b = g.endpoints(e)
        if (a in sv or b in sv) and e not in drop:
            raise NotAString(f"edge {e} enters the string unexpectedly")
    reduced, fwd, new_idx = _removed_reduction(g, sv, drop, u2, v2)
    chain = frozenset({eu, ev} | set(connectors) | set(mid_edges))

    def lift(c: CoverList) -> CoverList:
        return _lift_cover(
            g, reduced, fwd, new_idx, c,
            with_new=chain,
            avoid_cycle=lambda i: set(patt_a if i % 2 == 0 else patt_b),
        )

    return reduced, lift
