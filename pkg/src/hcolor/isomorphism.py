"""Multigraph isomorphism by color refinement plus backtracking.

Works for the small graphs this package handles (up to a few dozen
vertices).  Multiplicities of parallel edges and loop counts take part in
both the refinement and the backtracking consistency checks.
"""

from __future__ import annotations

from .multigraph import MultiGraph


def _neighbor_profile(g: MultiGraph) -> list[dict[int, int]]:
    """For each vertex, multiplicity per distinct neighbor (loops excluded)."""
    prof: list[dict[int, int]] = [dict() for _ in range(g.vertex_count)]
    for u, v in g.edges:
        if u == v:
            continue
        prof[u][v] = prof[u].get(v, 0) + 1
        prof[v][u] = prof[v].get(u, 0) + 1
    return prof


def _loop_counts(g: MultiGraph) -> list[int]:
    loops = [0] * g.vertex_count
    for u, v in g.edges:
        if u == v:
            loops[u] += 1
    return loops


def refine_colors(g: MultiGraph) -> list[int]:
    """Stable vertex coloring: iterated neighbor-multiset refinement.

    Color ids are assigned by sorting the distinct signature keys at each
    round, so they are canonical: isomorphic graphs receive identical ids
    regardless of vertex numbering.
    """
    prof = _neighbor_profile(g)
    loops = _loop_counts(g)
    keys: list[tuple] = [
        (g.degree(v), loops[v], tuple(sorted(prof[v].values())))
        for v in range(g.vertex_count)
    ]
    rank = {k: i for i, k in enumerate(sorted(set(keys)))}
    colors = [rank[k] for k in keys]
    while True:
        keys = [
            (colors[v], tuple(sorted((colors[u], m) for u, m in prof[v].items())))
            for v in range(g.vertex_count)
        ]
        rank = {k: i for i, k in enumerate(sorted(set(keys)))}
        nxt = [rank[k] for k in keys]
        if len(set(nxt)) == len(set(colors)):
            return nxt
        colors = nxt


def invariant_key(g: MultiGraph) -> tuple:
    """A cheap isomorphism-invariant fingerprint used for bucketing."""
    colors = refine_colors(g)
    hist = tuple(sorted((colors.count(c) for c in set(colors))))
    prof = _neighbor_profile(g)
    shape = tuple(sorted(tuple(sorted(p.values())) for p in prof))
    loops = tuple(sorted(_loop_counts(g)))
    # color multiset refined with per-color neighbor color multisets
    sig = tuple(
        sorted(
            (colors[v], tuple(sorted((colors[u], m) for u, m in prof[v].items())))
            for v in range(g.vertex_count)
        )
    )
    return (g.vertex_count, len(g.edges), loops, shape, hist, sig)


def _search(
    g1: MultiGraph, g2: MultiGraph, collect_all: bool
) -> list[dict[int, int]]:
    n = g1.vertex_count
    if n != g2.vertex_count or len(g1.edges) != len(g2.edges):
        return []
    prof1, prof2 = _neighbor_profile(g1), _neighbor_profile(g2)
    c1, c2 = refine_colors(g1), refine_colors(g2)
    # refinement colors are canonical, so they are comparable across graphs
    if sorted(c1) != sorted(c2):
        return []
    k1 = c1
    k2v: dict[int, list[int]] = {}
    for v in range(n):
        k2v.setdefault(c2[v], []).append(v)

    # order g1's vertices: rarest class first, then grow connectively
    order: list[int] = []
    placed = [False] * n
    remaining = set(range(n))
    while remaining:
        best = min(
            remaining,
            key=lambda v: (
                -sum(1 for u in prof1[v] if placed[u]),
                len(k2v.get(k1[v], ())),
                v,
            ),
        )
        order.append(best)
        placed[best] = True
        remaining.discard(best)

    mapping: dict[int, int] = {}
    used: set[int] = set()
    found: list[dict[int, int]] = []

    def extend(i: int) -> bool:
        if i == n:
            found.append(dict(mapping))
            return not collect_all
        v = order[i]
        for u in k2v[k1[v]]:
            if u in used:
                continue
            ok = True
            for w, m in prof1[v].items():
                if w in mapping and prof2[u].get(mapping[w], 0) != m:
                    ok = False
                    break
            if ok:
                # reverse direction: mapped neighbors of u must match back
                for x, m in prof2[u].items():
                    if x in used:
                        w1 = next(w for w, img in mapping.items() if img == x)
                        if prof1[v].get(w1, 0) != m:
                            ok = False
                            break
            if not ok:
                continue
            mapping[v] = u
            used.add(u)
            if extend(i + 1):
                return True
            del mapping[v]
            used.discard(u)
        return False

    extend(0)
    return found


def isomorphism(g1: MultiGraph, g2: MultiGraph) -> dict[int, int] | None:
    """A vertex bijection witnessing isomorphism, or None."""
    res = _search(g1, g2, collect_all=False)
    return res[0] if res else None


def is_isomorphic(g1: MultiGraph, g2: MultiGraph) -> bool:
    return isomorphism(g1, g2) is not None


def automorphisms(g: MultiGraph) -> list[dict[int, int]]:
    """All vertex automorphisms of g."""
    return _search(g, g, collect_all=True)


def edge_pair_orbits(g: MultiGraph) -> list[list[int]]:
    """Orbits of edge indices under the automorphism group.

    A vertex automorphism sends an edge to the parallel class over the image
    endpoint pair; edges of one parallel class are mutually interchangeable.
    """
    autos = automorphisms(g)
    pair_of = {idx: pair for idx, pair in enumerate(g.edges)}
    classes: dict[tuple[int, int], list[int]] = {}
    for idx, pair in pair_of.items():
        classes.setdefault(pair, []).append(idx)
    parent: dict[tuple[int, int], tuple[int, int]] = {p: p for p in classes}

    def find(p):
        while parent[p] != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    def union(p, q):
        rp, rq = find(p), find(q)
        if rp != rq:
            parent[rp] = rq

    for a in autos:
        for (u, v) in classes:
            x, y = a[u], a[v]
            img = (x, y) if x <= y else (y, x)
            union((u, v), img)
    orbits: dict[tuple[int, int], list[int]] = {}
    for pair, ids in classes.items():
        orbits.setdefault(find(pair), []).extend(ids)
    return [sorted(ids) for _, ids in sorted(orbits.items())]
