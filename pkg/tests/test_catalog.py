"""Structural facts about the named fixed graphs.

Counts below were frozen from independent exhaustive enumeration over the
stored edge lists.
"""

from __future__ import annotations

import pytest

from hcolor.catalog import CATALOG_NAMES, catalog, catalog_name
from hcolor.covers import enumerate_perfect_matchings
from hcolor.errors import UnknownName
from hcolor.multigraph import adjacency_count, bridges, is_connected, is_simple

SIZES = {
    "P10": (10, 15),
    "S10": (10, 15),
    "S12": (12, 18),
    "P12": (12, 18),
    "S16": (16, 24),
    "K4": (4, 6),
    "THETA": (2, 3),
}

PM_COUNTS = {
    "P10": 6,
    "S10": 0,
    "S12": 8,
    "P12": 8,
    "S16": 0,
    "K4": 3,
    "THETA": 3,
}

BRIDGE_COUNTS = {
    "P10": 0,
    "S10": 3,
    "S12": 3,
    "P12": 0,
    "S16": 3,
    "K4": 0,
    "THETA": 0,
}


def test_every_entry_is_connected_cubic():
    for name in CATALOG_NAMES:
        g = catalog(name)
        assert is_connected(g)
        assert all(g.degree(v) == 3 for v in range(g.vertex_count))
        assert not g.has_loops()


def test_sizes():
    for name, (n, m) in SIZES.items():
        g = catalog(name)
        assert (g.vertex_count, g.edge_count) == (n, m)


def test_perfect_matching_counts():
    for name, count in PM_COUNTS.items():
        assert len(enumerate_perfect_matchings(catalog(name))) == count


def test_bridge_counts():
    for name, count in BRIDGE_COUNTS.items():
        assert len(bridges(catalog(name))) == count


def test_simplicity_split():
    for name in ("P10", "P12", "S16", "K4"):
        assert is_simple(catalog(name))
    for name in ("S10", "S12", "THETA"):
        assert not is_simple(catalog(name))


def test_petersen_layout():
    # outer cycle 0..4, spokes i to i+5, inner 5-cycle with step two
    g = catalog("P10")
    for i in range(5):
        assert adjacency_count(g, i, (i + 1) % 5) == 1
        assert adjacency_count(g, i, i + 5) == 1
        assert adjacency_count(g, 5 + i, 5 + (i + 2) % 5) == 1
    assert g.edges[:5] == tuple(
        tuple(sorted((i, (i + 1) % 5))) for i in range(5)
    )
    assert g.edges[5:10] == tuple((i, i + 5) for i in range(5))


def test_s10_layout():
    # three digon blocks hanging off a degree-3 center, vertex 9
    g = catalog("S10")
    assert bridges(g) == frozenset({12, 13, 14})
    for i in range(3):
        apex, d1, d2 = 3 * i, 3 * i + 1, 3 * i + 2
        assert adjacency_count(g, d1, d2) == 2
        assert adjacency_count(g, apex, d1) == 1
        assert adjacency_count(g, apex, d2) == 1
        assert adjacency_count(g, 9, apex) == 1


def test_expanded_entries_extend_their_bases():
    # S12 and P12 add one triangle (two vertices, three edges) to their bases
    for base_name, ext_name in (("S10", "S12"), ("P10", "P12")):
        base, ext = catalog(base_name), catalog(ext_name)
        assert ext.vertex_count == base.vertex_count + 2
        assert ext.edge_count == base.edge_count + 3


def test_catalog_name_lookup(p10, s10, theta):
    assert catalog_name(p10) == "P10"
    assert catalog_name(s10) == "S10"
    assert catalog_name(theta) == "THETA"
    from hcolor.multigraph import build_graph

    # the 4-cycle of two digons is cubic but not a named entry
    other = build_graph(4, [(0, 1), (0, 1), (2, 3), (2, 3), (0, 2), (1, 3)])
    assert catalog_name(other) is None


def test_unknown_name():
    with pytest.raises(UnknownName):
        catalog("Q10")
