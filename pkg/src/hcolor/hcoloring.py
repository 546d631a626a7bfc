"""H-coloring solving, verification, and the fictive-edge constructions.

An H-coloring of a cubic graph G is a map f: E(G) -> E(H) such that around
every vertex x of G the edge images are pairwise distinct and form exactly
the star of some vertex of H.  When such a map exists we say H precedes G
(written H < G); preceding is transitive, and pulling the structure of H
back through f drives every derivation in this package.

For loopless graphs the pairwise-distinct reading agrees with plain image
set equality; a loop contributes two half-edges to its vertex, so a vertex
carrying one can only map onto a vertex of H that also carries one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from .catalog import catalog
from .covers import chromatic_index_cubic, enumerate_perfect_matchings
from .errors import (
    BadIndex,
    BudgetExceeded,
    ChainMismatch,
    EdgeInTriangle,
    NoSuchPMPair,
    NotProper,
    NotThreeColorable,
    PartialMap,
    PreconditionViolated,
)
from .isomorphism import edge_pair_orbits
from .multigraph import MultiGraph, bridges, build_graph, star
from .transform import find_triangles


@dataclass(frozen=True)
class EdgeMap:
    """A total assignment of target edge indices to the edges of a source."""

    source: MultiGraph
    target: MultiGraph
    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.assignment) != self.source.edge_count:
            raise PartialMap(
                f"assignment covers {len(self.assignment)} of "
                f"{self.source.edge_count} edges"
            )
        for e, d in enumerate(self.assignment):
            if not isinstance(d, int) or not 0 <= d < self.target.edge_count:
                raise PartialMap(f"edge {e} is mapped to invalid index {d!r}")


@dataclass(frozen=True)
class SolverOptions:
    """Knobs for solve_hcoloring.

    edge_order: explicit permutation of the source edges; None means a
    depth-first order seeded at the lowest edge index.
    triangle_free_shortcut: skip the final star re-check when the target has
    no triangle (adjacency preservation is then already sufficient).
    node_budget: maximum number of value assignments to try before raising
    BudgetExceeded; None means unlimited.
    seed: when set, value order is a seeded shuffle instead of ascending.
    symmetry_breaking: restrict the first edge to one representative per
    edge orbit of the target's automorphism group.
    bridge_filter: bridges of the source may only map to bridges of the
    target, so prune their candidate values accordingly.
    """

    edge_order: tuple[int, ...] | None = None
    triangle_free_shortcut: bool = True
    node_budget: int | None = None
    seed: int | None = None
    symmetry_breaking: bool = False
    bridge_filter: bool = True

    def __post_init__(self) -> None:
        if self.node_budget is not None and self.node_budget < 0:
            raise PreconditionViolated("node budget must be nonnegative")


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of verify_hcoloring; truthy exactly when the map is valid."""

    ok: bool
    failing_vertex: int | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


class Comparability(Enum):
    FIRST_PRECEDES = "first-precedes"
    SECOND_PRECEDES = "second-precedes"
    BOTH = "both"
    NEITHER = "neither"


def _assignment_of(f) -> tuple[int, ...]:
    if isinstance(f, EdgeMap):
        return f.assignment
    return tuple(f)


def verify_hcoloring(g: MultiGraph, h: MultiGraph, f) -> VerifyReport:
    """Check that f is an H-coloring of g, reporting the first bad vertex.

    f may be an EdgeMap or a plain sequence of target edge indices.  A
    non-total or out-of-range assignment raises PartialMap; a total map that
    violates the star condition yields a falsy report naming the vertex.
    """
    seq = _assignment_of(f)
    if len(seq) != g.edge_count:
        raise PartialMap(
            f"assignment covers {len(seq)} of {g.edge_count} edges"
        )
    for e, d in enumerate(seq):
        if not isinstance(d, int) or not 0 <= d < h.edge_count:
            raise PartialMap(f"edge {e} is mapped to invalid index {d!r}")
    stars = {star(h, y) for y in range(h.vertex_count)}
    for x in range(g.vertex_count):
        images = [seq[e] for e in g.incident_edges(x)]
        if len(set(images)) != len(images):
            return VerifyReport(False, x, "two edges at the vertex collide")
        if frozenset(images) not in stars:
            return VerifyReport(
                False, x, f"image {sorted(images)} is not a target star"
            )
    return VerifyReport(True)


def _edge_dfs_order(g: MultiGraph) -> list[int]:
    # depth-first over edges, lowest index explored first, one seed per
    # component so disconnected inputs are still covered
    m = g.edge_count
    seen = [False] * m
    order: list[int] = []
    for seed in range(m):
        if seen[seed]:
            continue
        stack = [seed]
        while stack:
            e = stack.pop()
            if seen[e]:
                continue
            seen[e] = True
            order.append(e)
            fresh: set[int] = set()
            for x in set(g.endpoints(e)):
                for d in g.incident_edges(x):
                    if not seen[d]:
                        fresh.add(d)
            stack.extend(sorted(fresh, reverse=True))
    return order


def _has_triangle(g: MultiGraph) -> bool:
    return bool(find_triangles(g))


def solve_hcoloring(
    g: MultiGraph, h: MultiGraph, opts: SolverOptions | None = None
) -> EdgeMap | None:
    """Decide whether g admits an h-coloring; a verified EdgeMap or None.

    Complete backtracking over the edges of g.  The propagation state is,
    per vertex of g, the set of target vertices whose star still contains
    all images assigned around it; a vertex whose edges are all assigned is
    matched against a star exactly.  None means exhaustion, never a budget
    stop: running out of budget raises BudgetExceeded instead.
    """
    opts = opts or SolverOptions()
    m_g, m_h = g.edge_count, h.edge_count
    n_g, n_h = g.vertex_count, h.vertex_count

    star_masks = [0] * n_h
    size_masks: dict[int, int] = {}
    exact_masks: dict[int, int] = {}
    for y in range(n_h):
        sm = 0
        for d in star(h, y):
            sm |= 1 << d
        star_masks[y] = sm
        size_masks[bin(sm).count("1")] = size_masks.get(
            bin(sm).count("1"), 0
        ) | (1 << y)
        exact_masks[sm] = exact_masks.get(sm, 0) | (1 << y)

    slots = [len(g.incident_edges(x)) for x in range(n_g)]
    cand = [size_masks.get(slots[x], 0) for x in range(n_g)]
    if any(c == 0 for c in cand):
        return None

    if opts.edge_order is not None:
        order = list(opts.edge_order)
        if sorted(order) != list(range(m_g)):
            raise PreconditionViolated(
                "edge_order must be a permutation of the source edges"
            )
    else:
        order = _edge_dfs_order(g)

    all_values = (1 << m_h) - 1
    static_allowed = [all_values] * m_g
    if opts.bridge_filter and m_g:
        src_bridges = bridges(g)
        if src_bridges:
            tgt_mask = 0
            for d in bridges(h):
                tgt_mask |= 1 << d
            for e in src_bridges:
                static_allowed[e] &= tgt_mask
    if opts.symmetry_breaking and m_g:
        reps = 0
        for orbit in edge_pair_orbits(h):
            reps |= 1 << min(orbit)
        static_allowed[order[0]] &= reps
    if any(mask == 0 for mask in static_allowed):
        return None

    if opts.seed is not None:
        template = list(range(m_h))
        random.Random(opts.seed).shuffle(template)
        rank = {d: i for i, d in enumerate(template)}
    else:
        rank = None

    assignment = [-1] * m_g
    used = [0] * n_g
    filled = [0] * n_g
    nodes = 0

    def union_mask(x: int) -> int:
        m = 0
        c = cand[x]
        while c:
            bit = c & -c
            m |= star_masks[bit.bit_length() - 1]
            c ^= bit
        return m

    def values_for(e: int, u: int, v: int) -> list[int]:
        mask = static_allowed[e] & union_mask(u) & ~used[u]
        if v != u:
            mask &= union_mask(v) & ~used[v]
        out = []
        while mask:
            bit = mask & -mask
            out.append(bit.bit_length() - 1)
            mask ^= bit
        if rank is not None:
            out.sort(key=rank.__getitem__)
        return out

    def place(i: int) -> bool:
        nonlocal nodes
        if i == m_g:
            return True
        e = order[i]
        u, v = g.endpoints(e)
        ends = (u,) if u == v else (u, v)
        for d in values_for(e, u, v):
            nodes += 1
            if opts.node_budget is not None and nodes > opts.node_budget:
                raise BudgetExceeded(
                    f"search stopped after {opts.node_budget} assignments"
                )
            assignment[e] = d
            undo: list[tuple[int, int]] = []
            alive = True
            for x in ends:
                used[x] |= 1 << d
                filled[x] += 1
                undo.append((x, cand[x]))
                need = used[x]
                narrowed = 0
                c = cand[x]
                while c:
                    bit = c & -c
                    if star_masks[bit.bit_length() - 1] & need == need:
                        narrowed |= bit
                    c ^= bit
                if filled[x] == slots[x]:
                    narrowed &= exact_masks.get(need, 0)
                cand[x] = narrowed
                if narrowed == 0:
                    alive = False
                    break
            if alive and place(i + 1):
                return True
            for x, old in undo:
                cand[x] = old
            for x in ends[: len(undo)]:
                used[x] &= ~(1 << d)
                filled[x] -= 1
            assignment[e] = -1
        return False

    if not place(0):
        return None
    found = EdgeMap(g, h, tuple(assignment))
    if not (opts.triangle_free_shortcut and not _has_triangle(h)):
        report = verify_hcoloring(g, h, found)
        assert report, f"search produced an invalid map at vertex {report.failing_vertex}"
    return found


def preimage(f: EdgeMap, subset) -> tuple[int, ...]:
    """Source edges whose image lies in the given set of target edges."""
    wanted = set(subset)
    for d in wanted:
        if not 0 <= d < f.target.edge_count:
            raise BadIndex(f"target has no edge {d}")
    return tuple(e for e, d in enumerate(f.assignment) if d in wanted)


def unused_edges(f: EdgeMap) -> tuple[int, ...]:
    """Target edges with empty preimage (the fictive edges of the map)."""
    hit = set(f.assignment)
    return tuple(d for d in range(f.target.edge_count) if d not in hit)


def compose(first: EdgeMap, second: EdgeMap) -> EdgeMap:
    """The map e -> second(first(e)); sources and targets must chain."""
    if first.target != second.source:
        raise ChainMismatch(
            "target of the first map is not the source of the second"
        )
    return EdgeMap(
        first.source,
        second.target,
        tuple(second.assignment[d] for d in first.assignment),
    )


def comparable(
    g: MultiGraph, h: MultiGraph, opts: SolverOptions | None = None
) -> Comparability:
    """Which of g < h and h < g hold; runs the solver in both directions.

    g < h means h admits a g-coloring.  FIRST_PRECEDES reports exactly
    that; SECOND_PRECEDES the mirror image; BOTH and NEITHER as expected.
    """
    g_precedes = solve_hcoloring(h, g, opts) is not None
    h_precedes = solve_hcoloring(g, h, opts) is not None
    if g_precedes and h_precedes:
        return Comparability.BOTH
    if g_precedes:
        return Comparability.FIRST_PRECEDES
    if h_precedes:
        return Comparability.SECOND_PRECEDES
    return Comparability.NEITHER


def three_coloring_from_deficient_p10_coloring(
    g: MultiGraph, f: EdgeMap, e: int
) -> dict[int, int]:
    """A proper 3-edge-coloring of g from an unused edge of its Petersen map.

    Among the six perfect matchings of the Petersen graph, exactly two
    contain e, and they meet exactly in e.  Their preimages under f are
    disjoint perfect matchings of g because e has none; together with the
    leftover edges they split E(g) into three classes.
    """
    p10 = catalog("P10")
    if f.target != p10:
        raise PreconditionViolated("the map does not target the Petersen graph")
    if f.source != g:
        raise PreconditionViolated("the map was built for a different source")
    report = verify_hcoloring(g, p10, f)
    if not report:
        raise PreconditionViolated(
            f"map is not an H-coloring (vertex {report.failing_vertex})"
        )
    if e in set(f.assignment):
        raise PreconditionViolated(f"edge {e} of the target is used by the map")
    if not 0 <= e < p10.edge_count:
        raise BadIndex(f"target has no edge {e}")

    matchings = enumerate_perfect_matchings(p10)
    pair = None
    for i in range(len(matchings)):
        for j in range(i + 1, len(matchings)):
            if matchings[i] & matchings[j] == {e}:
                pair = (matchings[i], matchings[j])
                break
        if pair:
            break
    if pair is None:
        raise NoSuchPMPair(f"no two perfect matchings meet exactly in edge {e}")

    first = set(preimage(f, pair[0]))
    second = set(preimage(f, pair[1]))
    assert not first & second, "preimages of the matching pair overlap"
    coloring = {}
    for idx in range(g.edge_count):
        coloring[idx] = 0 if idx in first else 1 if idx in second else 2
    for x in range(g.vertex_count):
        seen = [coloring[d] for d in g.incident_edges(x)]
        assert len(set(seen)) == len(seen), f"classes collide at vertex {x}"
    return coloring


def p12_pm_pair_for_edge(e: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Two perfect matchings of the triangle-bearing Petersen expansion
    meeting exactly in the given edge.

    Valid for every edge outside the unique triangle: edges away from its
    3-cut inherit the pair from the Petersen graph, cut edges pair one
    matching crossing the cut once with one crossing it three times.
    """
    p12 = catalog("P12")
    if not 0 <= e < p12.edge_count:
        raise BadIndex(f"target has no edge {e}")
    tri = find_triangles(p12)[0]
    if e in set(tri.edges):
        raise EdgeInTriangle(f"edge {e} lies in the triangle")
    matchings = enumerate_perfect_matchings(p12)
    for i in range(len(matchings)):
        for j in range(i + 1, len(matchings)):
            if matchings[i] & matchings[j] == {e}:
                return (
                    tuple(sorted(matchings[i])),
                    tuple(sorted(matchings[j])),
                )
    raise NoSuchPMPair(f"no two perfect matchings meet exactly in edge {e}")


def _validate_witness(h: MultiGraph, witness: dict[int, int]) -> None:
    if sorted(witness) != list(range(h.edge_count)):
        raise NotProper("witness does not color every edge exactly once")
    if any(witness[e] not in (0, 1, 2) for e in witness):
        raise NotProper("witness uses colors outside 0..2")
    for x in range(h.vertex_count):
        seen = [witness[d] for d in h.incident_edges(x)]
        if len(set(seen)) != len(seen):
            raise NotProper(f"adjacent edges share a color at vertex {x}")


def construct_prop10b(
    h: MultiGraph, witness: dict[int, int] | None = None
) -> tuple[MultiGraph, EdgeMap]:
    """Blow every vertex of a 3-edge-colorable cubic graph up into a
    Petersen graph minus a vertex; the result carries a P12-coloring whose
    fictive edges are exactly the triangle.

    Each copy keeps one attachment vertex per removed Petersen edge, and
    the connector replacing an h-edge of color c joins the two copies at
    the attachment for c, mapped to the corresponding 3-cut edge of the
    expansion.  Copy edges come first, one copy at a time, then the
    connectors, so searches localize failures inside a single copy.
    """
    if h.has_loops():
        raise NotThreeColorable("a loop lies in no matching")
    if any(h.degree(x) != 3 for x in range(h.vertex_count)):
        raise NotThreeColorable("input graph is not cubic")
    if witness is None:
        chi, witness = chromatic_index_cubic(h)
        if chi != 3:
            raise NotThreeColorable("input graph has chromatic index 4")
    else:
        _validate_witness(h, witness)

    p10 = catalog("P10")
    p12 = catalog("P12")
    hub = p10.vertex_count - 1
    removed = list(p10.incident_edges(hub))
    attach = [p10.other_end(d, hub) for d in removed]
    kept = [i for i in range(p10.edge_count) if i not in set(removed)]

    edges: list[tuple[int, int]] = []
    targets: list[int] = []
    for copy in range(h.vertex_count):
        base = 9 * copy
        for i in kept:
            a, b = p10.endpoints(i)
            edges.append((base + a, base + b))
            targets.append(i)
    for idx in range(h.edge_count):
        x, y = h.endpoints(idx)
        c = witness[idx]
        edges.append((9 * x + attach[c], 9 * y + attach[c]))
        targets.append(removed[c])

    big = build_graph(9 * h.vertex_count, edges)
    f = EdgeMap(big, p12, tuple(targets))
    report = verify_hcoloring(big, p12, f)
    assert report, f"construction broke at vertex {report.failing_vertex}"
    tri = set(find_triangles(p12)[0].edges)
    assert set(unused_edges(f)) == tri, "fictive edges are not the triangle"
    return big, f
