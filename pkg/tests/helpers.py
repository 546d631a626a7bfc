"""Independent brute-force oracle for H-colorability of tiny graphs.

Used to cross-check the backtracking solver on an exhaustive corpus of
small instances. Deliberately shares no code with the solver: it assigns
edge images in index order and prunes only on completed vertices.
"""

from __future__ import annotations

from hcolor.multigraph import MultiGraph


def brute_force_hcolorable(g: MultiGraph, h: MultiGraph) -> bool:
    """Does any map E(g) -> E(h) send every g-star onto an h-star?"""
    m = len(g.edges)
    stars = [frozenset(h.incident_edges(y)) for y in range(h.vertex_count)]
    star_set = set(stars)
    incident = [tuple(g.incident_edges(x)) for x in range(g.vertex_count)]
    assignment: list[int | None] = [None] * m

    def vertex_ok(x: int) -> bool:
        images = [assignment[e] for e in incident[x]]
        if any(i is None for i in images):
            return True
        if len(set(images)) != len(images):
            return False
        return frozenset(images) in star_set

    def extend(e: int) -> bool:
        if e == m:
            return True
        u, v = g.endpoints(e)
        for image in range(len(h.edges)):
            assignment[e] = image
            if vertex_ok(u) and vertex_ok(v) and extend(e + 1):
                return True
        assignment[e] = None
        return False

    return extend(0)
