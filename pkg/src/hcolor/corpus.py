"""Generation of all small connected cubic multigraphs up to isomorphism.

The generator works in the universe of connected cubic pseudo-graphs (loops
allowed, counting two toward degree) and grows level by level, two vertices at
a time, from the two-vertex base cases:

  THETA     two vertices joined by three parallel edges
  DUMBBELL  two vertices, a loop at each, joined by an edge

Three growth moves are applied to every representative:

  A. pick any edge, subdivide it once, and hang a new loop vertex there;
  B. pick any edge and replace it by a path through a new parallel pair
     (a loop turns into a pendant parallel pair);
  C. pick two distinct non-loop edges, subdivide each once, and join the
     two new vertices.

Every connected cubic pseudo-graph on n + 2 >= 4 vertices reduces to one on
n vertices by undoing one of these moves: a graph with a loop undoes A (remove
the loop vertex and suppress its neighbor), a loopless graph with a parallel
pair undoes B (suppress the pair; if its outside neighbors coincide a loop
appears, which the pseudo-graph universe absorbs), and a simple graph undoes
C on any non-bridge edge (a cubic graph always has one, and removing it
cannot disconnect precisely because it is not a bridge).  So the sweep is
exhaustive.  Results are deduplicated by an invariant fingerprint plus exact
isomorphism, and the loop-free / simple / bridgeless slices are filters.
The two-vertex level and the reduction argument are cross-checked against a
brute-force enumeration of labeled graphs in the test suite.
"""

from __future__ import annotations

from functools import lru_cache

from .isomorphism import invariant_key, is_isomorphic
from .multigraph import MultiGraph, bridges, build_graph, is_simple

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


def _grow(g: MultiGraph) -> list[MultiGraph]:
    """All one-move extensions of g (n + 2 vertices each)."""
    n = g.vertex_count
    base = list(g.edges)
    out: list[MultiGraph] = []

    def emit(edge_list: list[Edge], verts: int) -> None:
        out.append(
            build_graph(verts, edge_list, allow_loops=any(u == v for u, v in edge_list))
        )

    # Move A: subdivide edge e at x = n, attach loop vertex w = n + 1.
    for e, (a, b) in enumerate(base):
        rest = base[:e] + base[e + 1 :]
        if a == b:
            new = rest + [(a, n), (a, n), (n, n + 1), (n + 1, n + 1)]
        else:
            new = rest + [(a, n), (b, n), (n, n + 1), (n + 1, n + 1)]
        emit(new, n + 2)

    # Move B: replace edge e by a path through a parallel pair u = n, v = n+1.
    for e, (a, b) in enumerate(base):
        rest = base[:e] + base[e + 1 :]
        if a == b:
            new = rest + [(a, n), (a, n + 1), (n, n + 1), (n, n + 1)]
        else:
            new = rest + [(a, n), (b, n + 1), (n, n + 1), (n, n + 1)]
        emit(new, n + 2)

    # Move C: subdivide distinct non-loop edges e (at u = n) and f (at v = n+1),
    # then join the two new vertices.
    for e in range(len(base)):
        a, b = base[e]
        if a == b:
            continue
        for f in range(e + 1, len(base)):
            c, d = base[f]
            if c == d:
                continue
            rest = [base[i] for i in range(len(base)) if i not in (e, f)]
            new = rest + [(a, n), (b, n), (c, n + 1), (d, n + 1), (n, n + 1)]
            emit(new, n + 2)
    return out


def _dedupe(graphs: list[MultiGraph]) -> list[MultiGraph]:
    buckets: dict[tuple, list[MultiGraph]] = {}
    reps: list[MultiGraph] = []
    for g in graphs:
        key = invariant_key(g)
        bucket = buckets.setdefault(key, [])
        if not any(is_isomorphic(g, h) for h in bucket):
            bucket.append(g)
            reps.append(g)
    return reps


@lru_cache(maxsize=None)
def connected_cubic_pseudographs(max_vertices: int) -> dict[int, tuple[MultiGraph, ...]]:
    """Representatives of all connected cubic pseudo-graphs, keyed by order."""
    theta = build_graph(2, [(0, 1)] * 3)
    dumbbell = build_graph(2, [(0, 0), (1, 1), (0, 1)], allow_loops=True)
    levels: dict[int, tuple[MultiGraph, ...]] = {2: (theta, dumbbell)}
    n = 2
    while n + 2 <= max_vertices:
        candidates: list[MultiGraph] = []
        for g in levels[n]:
            candidates.extend(_grow(g))
        levels[n + 2] = tuple(_dedupe(candidates))
        n += 2
    return levels


@lru_cache(maxsize=None)
def cubic_multigraph_corpus(
    max_vertices: int, simple: bool = False, bridgeless: bool = False
) -> tuple[MultiGraph, ...]:
    """All connected cubic multigraphs (no loops) up to max_vertices.

    With simple=True only graphs without parallel edges are kept; with
    bridgeless=True only bridgeless ones.  Within each order the ordering is
    the deterministic generation order.
    """
    levels = connected_cubic_pseudographs(max_vertices)
    out: list[MultiGraph] = []
    for n in sorted(levels):
        for g in levels[n]:
            if g.has_loops():
                continue
            if simple and not is_simple(g):
                continue
            if bridgeless and bridges(g):
                continue
            out.append(MultiGraph(g.vertex_count, g.edges, is_pseudo=False))
    return tuple(out)
