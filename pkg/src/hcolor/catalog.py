"""The named graphs used throughout the package, with frozen numberings.

Canonical numberings (a repo convention, documented in the README):

P10   Petersen graph.  Vertices 0-4: outer 5-cycle; 5-9: inner pentagram
      (i adjacent to i +/- 2 within the inner labels); spokes i -- i+5.
      Edges 0-4 outer, 5-9 spokes, 10-14 inner.

S10   Three pendant blocks on a central vertex.  Block i (i = 0, 1, 2):
      apex 3i attached to 3i+1 and 3i+2, which are joined by a parallel
      pair; the center is vertex 9.  Edges 4i..4i+3 per block in the order
      (apex, lo), (apex, hi), (lo, hi), (lo, hi); bridges 12, 13, 14 join
      the apexes 0, 3, 6 to the center.  S10 has no perfect matching.

S12   S10 with its central vertex expanded to a triangle: exactly the value
      of expand_vertices_to_triangles(S10, {9}).  Vertices 0-8 as in S10;
      triangle 9, 10, 11; edges 0-14 as in S10 (bridges now end at distinct
      triangle vertices), triangle edges 15, 16, 17.  Contracting the
      central triangle returns S10 label-for-label.

P12   P10 with vertex 9 expanded to a triangle, numbered the same way:
      expand_vertices_to_triangles(P10, {9}).  Its unique triangle is
      (9, 10, 11) with edges (15, 16, 17).

S16   Like S10 but each parallel pair grown into a diamond.  Block i:
      apex 5i adjacent to corners 5i+1 and 5i+2; mids 5i+3 and 5i+4 each
      adjacent to both corners and to each other; center 15.  Edges
      7i..7i+6 per block, bridges 21, 22, 23.  Simple, three bridges.

K4    Complete graph on 4 vertices; edges in lexicographic order.

THETA Two vertices joined by three parallel edges.
"""

from __future__ import annotations

from .errors import UnknownName
from .multigraph import MultiGraph, build_graph
from .transform import expand_vertices_to_triangles

CATALOG_NAMES = ("P10", "S10", "S12", "P12", "S16", "K4", "THETA")


def _petersen() -> MultiGraph:
    outer = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]
    spokes = [(0, 5), (1, 6), (2, 7), (3, 8), (4, 9)]
    inner = [(5, 7), (7, 9), (6, 9), (6, 8), (5, 8)]
    return build_graph(10, outer + spokes + inner)


def _sylvester10() -> MultiGraph:
    edges: list[tuple[int, int]] = []
    for i in range(3):
        a, lo, hi = 3 * i, 3 * i + 1, 3 * i + 2
        edges.extend([(a, lo), (a, hi), (lo, hi), (lo, hi)])
    edges.extend([(0, 9), (3, 9), (6, 9)])
    return build_graph(10, edges)


def _k4() -> MultiGraph:
    return build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def _theta() -> MultiGraph:
    return build_graph(2, [(0, 1), (0, 1), (0, 1)])


def _sylvester16() -> MultiGraph:
    edges: list[tuple[int, int]] = []
    for i in range(3):
        a, c1, c2, m1, m2 = (5 * i + j for j in range(5))
        edges.extend(
            [(a, c1), (a, c2), (c1, m1), (c1, m2), (c2, m1), (c2, m2), (m1, m2)]
        )
    edges.extend([(0, 15), (5, 15), (10, 15)])
    return build_graph(16, edges)


_CACHE: dict[str, MultiGraph] = {}


def catalog(name: str) -> MultiGraph:
    """Return the named graph; raises UnknownName otherwise."""
    if name not in CATALOG_NAMES:
        raise UnknownName(f"unknown catalog graph {name!r}")
    if name not in _CACHE:
        _CACHE["P10"] = _petersen()
        _CACHE["S10"] = _sylvester10()
        _CACHE["S12"] = expand_vertices_to_triangles(_CACHE["S10"], {9})[0]
        _CACHE["P12"] = expand_vertices_to_triangles(_CACHE["P10"], {9})[0]
        _CACHE["S16"] = _sylvester16()
        _CACHE["K4"] = _k4()
        _CACHE["THETA"] = _theta()
    return _CACHE[name]


def catalog_name(g: MultiGraph) -> str | None:
    """The catalog name of g if it equals a catalog graph label-for-label."""
    for name in CATALOG_NAMES:
        if catalog(name) == g:
            return name
    return None
