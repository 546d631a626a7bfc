"""Exhaustive small-corpus generation.

Per-size counts were frozen from an independent enumeration pass and
cross-checked against hand counts for the tiny sizes: the unique cubic
multigraph on 2 vertices is the triple edge, and on 4 vertices exactly
K4 and the double-digon 4-cycle exist.
"""

from __future__ import annotations

from collections import Counter

from hcolor.corpus import connected_cubic_pseudographs, cubic_multigraph_corpus
from hcolor.isomorphism import is_isomorphic
from hcolor.multigraph import bridges, is_connected, is_simple

LOOPLESS_BY_SIZE = {2: 1, 4: 2, 6: 6, 8: 20, 10: 91}
BRIDGELESS_BY_SIZE = {2: 1, 4: 2, 6: 5, 8: 16, 10: 66}
SIMPLE_BY_SIZE = {4: 1, 6: 2, 8: 5, 10: 19}
PSEUDO_BY_SIZE = {2: 2, 4: 5, 6: 17, 8: 71}


def by_size(graphs):
    return dict(Counter(g.vertex_count for g in graphs))


def test_loopless_counts(corpus10):
    assert by_size(corpus10) == LOOPLESS_BY_SIZE


def test_bridgeless_counts(bridgeless10):
    assert by_size(bridgeless10) == BRIDGELESS_BY_SIZE


def test_simple_counts():
    assert by_size(cubic_multigraph_corpus(10, simple=True)) == SIMPLE_BY_SIZE


def test_pseudograph_counts():
    sizes = connected_cubic_pseudographs(8)
    assert {n: len(gs) for n, gs in sizes.items()} == PSEUDO_BY_SIZE


def test_members_are_connected_cubic(corpus8):
    for g in corpus8:
        assert is_connected(g)
        assert all(g.degree(v) == 3 for v in range(g.vertex_count))
        assert not g.has_loops()


def test_bridgeless_filter_is_exact(corpus10, bridgeless10):
    want = [g.edges for g in corpus10 if not bridges(g)]
    assert [g.edges for g in bridgeless10] == want


def test_simple_filter_is_exact(corpus10):
    simple = cubic_multigraph_corpus(10, simple=True)
    want = [g.edges for g in corpus10 if is_simple(g)]
    assert [g.edges for g in simple] == want


def test_no_two_members_isomorphic(corpus6):
    for i, g in enumerate(corpus6):
        for h in corpus6[i + 1:]:
            assert not is_isomorphic(g, h)


def test_deterministic_order(corpus8):
    again = cubic_multigraph_corpus(8)
    assert [g.edges for g in again] == [g.edges for g in corpus8]


def test_catalog_members_appear(corpus10, p10, s10, k4, theta):
    for target in (p10, s10, k4, theta):
        assert any(is_isomorphic(g, target) for g in corpus10)


def test_corpus_contains_exactly_one_pm_free_graph(corpus10, s10):
    from hcolor.covers import has_perfect_matching

    pm_free = [g for g in corpus10 if not has_perfect_matching(g)]
    assert len(pm_free) == 1
    assert is_isomorphic(pm_free[0], s10)


def test_odd_bound_floors_to_even():
    assert cubic_multigraph_corpus(7) == cubic_multigraph_corpus(6)
    assert cubic_multigraph_corpus(2) == cubic_multigraph_corpus(3)
