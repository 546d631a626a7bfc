"""Claw-freeness and the structure of claw-free bridgeless cubic graphs.

Every connected simple bridgeless claw-free cubic graph is the complete
graph on four vertices, a ring of diamonds, or arises from a connected
bridgeless cubic base graph by replacing some edges with strings of
diamonds and every vertex with a triangle.  oum_decompose recovers that
description and rebuilds the input from it as a checked witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import catalog
from .errors import PreconditionViolated
from .isomorphism import is_isomorphic
from .multigraph import MultiGraph, bridges, build_graph, is_connected, is_simple
from .transform import (
    expand_vertices_to_triangles,
    find_diamond_strings,
    find_diamonds,
    find_triangles,
    replace_edge_with_diamond_string,
)


def is_claw_free(g: MultiGraph) -> bool:
    """No vertex has three pairwise non-adjacent neighbors.

    Parallel edges reduce the distinct-neighbor count below three, so a
    vertex carrying one can never center a claw; loops likewise.
    """
    adjacent = {frozenset(g.endpoints(e)) for e in range(g.edge_count)}
    for v in range(g.vertex_count):
        others = {g.other_end(e, v) for e in g.incident_edges(v)} - {v}
        if len(others) < 3:
            continue
        a, b, c = sorted(others)
        if (
            frozenset((a, b)) not in adjacent
            and frozenset((a, c)) not in adjacent
            and frozenset((b, c)) not in adjacent
        ):
            return False
    return True


@dataclass(frozen=True)
class OumDecomposition:
    """Which of the three structural cases holds, with its witness data.

    case 1: the complete graph on four vertices.
    case 2: a ring of diamond_count diamonds.
    case 3: base graph plus per-base-edge diamond string lengths (0 for a
    plain edge); rebuilt is the graph regrown from that data, isomorphic
    to the input.
    """

    case: int
    diamond_count: int | None = None
    base: MultiGraph | None = None
    string_lengths: tuple[int, ...] | None = None
    rebuilt: MultiGraph | None = None


def _require(condition: bool, reason: str) -> None:
    if not condition:
        raise PreconditionViolated(reason)


def oum_decompose(g: MultiGraph) -> OumDecomposition:
    """Classify a connected simple bridgeless claw-free cubic graph.

    The diamonds and the triangles disjoint from them are structurally
    forced, so the decomposition is read off directly: no diamonds or
    triangles at all means K4, everything inside diamonds means a ring,
    and otherwise the outside-of-diamond triangles become base vertices
    while maximal diamond strings and direct triangle-triangle edges
    become base edges.
    """
    _require(is_connected(g), "graph is not connected")
    _require(is_simple(g), "graph has parallel edges or loops")
    _require(not bridges(g), "graph has a bridge")
    _require(is_claw_free(g), "graph has an induced claw")

    if is_isomorphic(g, catalog("K4")):
        return OumDecomposition(case=1)

    diamonds = find_diamonds(g)
    in_diamond: set[int] = set()
    for d in diamonds:
        in_diamond |= d.vertices
    if len(in_diamond) == g.vertex_count:
        assert len(diamonds) >= 2, "a ring of diamonds has at least two"
        return OumDecomposition(case=2, diamond_count=len(diamonds))

    # base vertices: triangles fully outside the diamonds; each remaining
    # vertex lies in exactly one of them
    outside = [
        t
        for t in find_triangles(g)
        if not set(t.vertices) & in_diamond
    ]
    owner: dict[int, int] = {}
    for i, t in enumerate(outside):
        for v in t.vertices:
            assert v not in owner, "triangles outside the diamonds overlap"
            owner[v] = i
    assert set(owner) | in_diamond == set(range(g.vertex_count)), (
        "a vertex lies in no triangle and no diamond"
    )

    base_edges: list[tuple[int, int]] = []
    lengths: list[int] = []
    for e in range(g.edge_count):
        u, v = g.endpoints(e)
        if u in owner and v in owner and owner[u] != owner[v]:
            base_edges.append((owner[u], owner[v]))
            lengths.append(0)
    for s in find_diamond_strings(g):
        body = s.vertices
        ends = []
        for corner in (s.head, s.tail):
            attach = [
                g.other_end(d, corner)
                for d in g.incident_edges(corner)
                if g.other_end(d, corner) not in body
            ]
            assert len(attach) == 1, "string end attaches ambiguously"
            assert attach[0] in owner, "string attaches to a non-triangle vertex"
            ends.append(owner[attach[0]])
        base_edges.append((ends[0], ends[1]))
        lengths.append(len(s.diamonds))

    base = build_graph(len(outside), base_edges)
    assert not bridges(base), "base graph is not bridgeless"
    assert is_connected(base), "base graph is not connected"

    rebuilt = base
    for e in sorted(range(len(lengths)), reverse=True):
        if lengths[e]:
            rebuilt, _ = replace_edge_with_diamond_string(rebuilt, e, lengths[e])
    rebuilt, _ = expand_vertices_to_triangles(
        rebuilt, tuple(range(base.vertex_count))
    )
    assert is_isomorphic(rebuilt, g), "reconstruction does not match the input"
    return OumDecomposition(
        case=3,
        base=base,
        string_lengths=tuple(lengths),
        rebuilt=rebuilt,
    )
