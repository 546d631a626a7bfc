from __future__ import annotations

import pytest

from hcolor.errors import BadIndex, LoopNotAllowed, NotCubic
from hcolor.multigraph import (
    adjacency_count,
    bridges,
    build_graph,
    connected_components,
    is_connected,
    is_simple,
    parallel_classes,
    star,
)


def triple_edge():
    return build_graph(2, [(0, 1), (0, 1), (0, 1)])


def dumbbell():
    # one loop at each end of a single bridge
    return build_graph(2, [(0, 0), (1, 1), (0, 1)], allow_loops=True)


def test_build_and_accessors():
    g = triple_edge()
    assert g.vertex_count == 2
    assert g.edge_count == 3
    assert g.endpoints(0) == (0, 1)
    assert g.incident_edges(0) == (0, 1, 2)
    assert g.degree(0) == 3
    assert g.other_end(0, 0) == 1
    assert g.other_end(0, 1) == 0
    assert not g.is_loop(0)
    assert not g.has_loops()


def test_edges_are_normalized_and_frozen():
    g = build_graph(2, [(1, 0), (0, 1), (1, 0)])
    assert g.edges == ((0, 1), (0, 1), (0, 1))
    with pytest.raises(AttributeError):
        g.edges = ()


def test_loops_count_twice_toward_degree():
    g = dumbbell()
    assert g.degree(0) == 3
    assert g.degree(1) == 3
    assert g.is_loop(0)
    assert g.has_loops()
    assert g.other_end(0, 0) == 0
    # the loop contributes a single incident index
    assert g.incident_edges(0) == (0, 2)
    assert star(g, 0) == frozenset({0, 2})


def test_build_rejects_bad_input():
    with pytest.raises(NotCubic):
        build_graph(2, [(0, 1), (0, 1)])
    with pytest.raises(BadIndex):
        build_graph(2, [(0, 2), (0, 1), (0, 1)])
    with pytest.raises(LoopNotAllowed):
        build_graph(2, [(0, 0), (1, 1), (0, 1)])
    with pytest.raises(BadIndex):
        triple_edge().endpoints(3)
    with pytest.raises(BadIndex):
        triple_edge().incident_edges(2)
    g = triple_edge()
    with pytest.raises(BadIndex):
        g.other_end(0, 5)


def test_simplicity():
    assert not is_simple(triple_edge())
    assert not is_simple(dumbbell())
    k4 = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert is_simple(k4)


def test_connectivity():
    g = triple_edge()
    assert is_connected(g)
    assert connected_components(g) == [[0, 1]]
    two = build_graph(
        4, [(0, 1), (0, 1), (0, 1), (2, 3), (2, 3), (2, 3)]
    )
    assert not is_connected(two)
    assert connected_components(two) == [[0, 1], [2, 3]]


def test_bridges_on_a_bridged_graph():
    g = dumbbell()
    assert bridges(g) == frozenset({2})


def test_bridges_ignore_parallel_edges():
    # two digons joined by a pair of disjoint edges: no bridge anywhere
    g = build_graph(4, [(0, 1), (0, 1), (2, 3), (2, 3), (0, 2), (1, 3)])
    assert bridges(g) == frozenset()


def test_bridgeless_catalog_entries_have_no_bridges(p10, k4, theta):
    for g in (p10, k4, theta):
        assert bridges(g) == frozenset()


def test_parallel_classes_and_adjacency_count():
    g = triple_edge()
    assert parallel_classes(g) == {(0, 1): [0, 1, 2]}
    assert adjacency_count(g, 0, 1) == 3
    assert adjacency_count(g, 1, 0) == 3
    k4 = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert adjacency_count(k4, 0, 1) == 1
    assert adjacency_count(k4, 0, 0) == 0
