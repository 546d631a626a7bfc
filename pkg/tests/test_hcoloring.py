from __future__ import annotations

import pytest

from hcolor.catalog import CATALOG_NAMES, catalog
from hcolor.covers import chromatic_index_cubic, enumerate_perfect_matchings
from hcolor.errors import (
    BadIndex,
    BudgetExceeded,
    ChainMismatch,
    EdgeInTriangle,
    NotThreeColorable,
    PartialMap,
    PreconditionViolated,
)
from hcolor.hcoloring import (
    Comparability,
    EdgeMap,
    SolverOptions,
    comparable,
    compose,
    construct_prop10b,
    p12_pm_pair_for_edge,
    preimage,
    solve_hcoloring,
    three_coloring_from_deficient_p10_coloring,
    unused_edges,
    verify_hcoloring,
)
from helpers import brute_force_hcolorable


def identity_map(g):
    return EdgeMap(g, g, tuple(range(g.edge_count)))


def star_collapse(g, h, y):
    """Map a 3-edge-colorable g onto the star of vertex y in h."""
    k, colors = chromatic_index_cubic(g)
    assert k == 3
    target_star = sorted(h.incident_edges(y))
    return EdgeMap(g, h, tuple(target_star[colors[e]] for e in range(g.edge_count)))


def test_identity_is_a_coloring():
    for name in CATALOG_NAMES:
        g = catalog(name)
        assert verify_hcoloring(g, g, identity_map(g))


def test_verify_rejects_collapsed_star(p10):
    # sending everything to one star breaks every source vertex
    f = EdgeMap(p10, p10, (0,) * 15)
    report = verify_hcoloring(p10, p10, f)
    assert not report
    assert report.failing_vertex is not None
    assert report.reason


def test_verify_accepts_plain_sequences(k4, theta):
    f = star_collapse(k4, theta, 0)
    assert verify_hcoloring(k4, theta, tuple(f.assignment))
    assert verify_hcoloring(k4, theta, list(f.assignment))


def test_edge_map_validation(k4, theta):
    with pytest.raises(PartialMap):
        EdgeMap(k4, theta, (0, 1))
    with pytest.raises(PartialMap):
        EdgeMap(k4, theta, (0, 1, 2, 0, 1, 7))


def test_star_collapse_onto_petersen(k4, p10):
    f = star_collapse(k4, p10, 0)
    assert verify_hcoloring(k4, p10, f)
    assert len(unused_edges(f)) == 12


def test_solver_finds_petersen_coloring_of_p12(p12, p10):
    f = solve_hcoloring(p12, p10)
    assert f is not None
    assert f.source == p12 and f.target == p10
    assert verify_hcoloring(p12, p10, f)


def test_solver_finds_s10_coloring_of_s12(s12, s10):
    f = solve_hcoloring(s12, s10)
    assert f is not None
    assert verify_hcoloring(s12, s10, f)


def test_solver_exhausts_impossible_instances(p10, p12, theta):
    assert solve_hcoloring(p10, theta) is None
    assert solve_hcoloring(p10, p12) is None


def test_self_coloring(p10):
    f = solve_hcoloring(p10, p10)
    assert f is not None
    assert verify_hcoloring(p10, p10, f)


def test_budget_raises(p10):
    with pytest.raises(BudgetExceeded):
        solve_hcoloring(p10, p10, SolverOptions(node_budget=3))
    with pytest.raises(PreconditionViolated):
        SolverOptions(node_budget=-1)


def test_budget_large_enough_still_succeeds(p12, p10):
    f = solve_hcoloring(p12, p10, SolverOptions(node_budget=10_000_000))
    assert f is not None


def test_seeded_value_order(p12, p10):
    for seed in (0, 1, 7):
        f = solve_hcoloring(p12, p10, SolverOptions(seed=seed))
        assert f is not None
        assert verify_hcoloring(p12, p10, f)


def test_symmetry_breaking_preserves_answers(p10, p12, theta):
    on = SolverOptions(symmetry_breaking=True)
    assert solve_hcoloring(p12, p10, on) is not None
    assert solve_hcoloring(p10, theta, on) is None


def test_triangle_free_shortcut_agrees(p12, p10, s12, s10):
    # P10 is triangle-free so the shortcut applies; S10 has triangles
    for g, h in ((p12, p10), (s12, s10)):
        fast = solve_hcoloring(g, h, SolverOptions(triangle_free_shortcut=True))
        slow = solve_hcoloring(g, h, SolverOptions(triangle_free_shortcut=False))
        assert verify_hcoloring(g, h, fast)
        assert verify_hcoloring(g, h, slow)


def test_bridge_filter_agrees(s10, p10, s12):
    # bridged source, bridgeless target: refuted with or without the filter
    for opts in (SolverOptions(bridge_filter=True), SolverOptions(bridge_filter=False)):
        assert solve_hcoloring(s10, p10, opts) is None
    # bridged source and target
    f = solve_hcoloring(s12, s10, SolverOptions(bridge_filter=False))
    assert verify_hcoloring(s12, s10, f)


def test_explicit_edge_order(p12, p10):
    order = tuple(reversed(range(18)))
    f = solve_hcoloring(p12, p10, SolverOptions(edge_order=order))
    assert f is not None
    assert verify_hcoloring(p12, p10, f)
    with pytest.raises(PreconditionViolated):
        solve_hcoloring(p12, p10, SolverOptions(edge_order=(0, 1, 2)))


def test_preimage_and_unused(p12, p10):
    f = solve_hcoloring(p12, p10)
    hit = set(f.assignment)
    for d in range(15):
        pre = preimage(f, {d})
        assert all(f.assignment[e] == d for e in pre)
        assert (len(pre) == 0) == (d not in hit)
    assert set(unused_edges(f)) == set(range(15)) - hit
    with pytest.raises(BadIndex):
        preimage(f, {40})


def test_compose_chains_maps(k4, p10, p12):
    f = star_collapse(k4, p10, 0)
    g = solve_hcoloring(p12, p10)
    # p12 -> p10 then p10 -> ... cannot chain with k4 -> p10
    with pytest.raises(ChainMismatch):
        compose(f, g)
    ident = EdgeMap(p10, p10, tuple(range(15)))
    assert compose(g, ident).assignment == g.assignment
    assert verify_hcoloring(p12, p10, compose(g, ident))


def test_compose_transitivity(s12, s10, k4):
    # k4 onto a star of s12, then s12 onto s10
    f1 = star_collapse(k4, s12, 9)
    f2 = solve_hcoloring(s12, s10)
    chained = compose(f1, f2)
    assert chained.source == k4 and chained.target == s10
    assert verify_hcoloring(k4, s10, chained)


COMPARABLE_TABLE = [
    ("P10", "P12", Comparability.FIRST_PRECEDES),
    ("P10", "S10", Comparability.SECOND_PRECEDES),
    ("P10", "S12", Comparability.SECOND_PRECEDES),
    ("P12", "S12", Comparability.SECOND_PRECEDES),
    ("S10", "S12", Comparability.FIRST_PRECEDES),
    ("K4", "P10", Comparability.SECOND_PRECEDES),
    ("K4", "THETA", Comparability.BOTH),
    ("P10", "THETA", Comparability.FIRST_PRECEDES),
    ("S10", "S16", Comparability.FIRST_PRECEDES),
    ("P10", "S16", Comparability.NEITHER),
]


def test_comparability_table():
    for a, b, want in COMPARABLE_TABLE:
        assert comparable(catalog(a), catalog(b)) == want


def test_p12_pm_pairs():
    p12 = catalog("P12")
    pms = set(enumerate_perfect_matchings(p12))
    cut = {9, 11, 12}
    for e in range(15):
        first, second = p12_pm_pair_for_edge(e)
        a, b = frozenset(first), frozenset(second)
        assert a in pms and b in pms
        assert a & b == {e}
        if e in cut:
            assert sorted((len(a & cut), len(b & cut))) == [1, 3]
    for e in (15, 16, 17):
        with pytest.raises(EdgeInTriangle):
            p12_pm_pair_for_edge(e)
    with pytest.raises(BadIndex):
        p12_pm_pair_for_edge(18)


def test_deficient_coloring_recovers_three_coloring(k4, p10):
    f = star_collapse(k4, p10, 0)
    for e in unused_edges(f):
        colors = three_coloring_from_deficient_p10_coloring(k4, f, e)
        for v in range(4):
            around = sorted(colors[x] for x in k4.incident_edges(v))
            assert around == [0, 1, 2]


def test_deficient_coloring_rejects_used_edges(k4, p10):
    f = star_collapse(k4, p10, 0)
    used = f.assignment[0]
    with pytest.raises(PreconditionViolated):
        three_coloring_from_deficient_p10_coloring(k4, f, used)


def test_prop10b_construction(k4, theta, p12):
    big, f = construct_prop10b(k4)
    assert big.vertex_count == 36
    assert big.edge_count == 54
    assert f.source == big and f.target == p12
    assert verify_hcoloring(big, p12, f)
    assert unused_edges(f) == (15, 16, 17)

    small, f2 = construct_prop10b(theta)
    assert small.vertex_count == 18
    assert verify_hcoloring(small, p12, f2)
    assert unused_edges(f2) == (15, 16, 17)


def test_prop10b_accepts_explicit_witness(k4):
    _, colors = chromatic_index_cubic(k4)
    big, f = construct_prop10b(k4, witness=colors)
    assert verify_hcoloring(big, f.target, f)


def test_prop10b_rejects_uncolorable(p10, s10):
    for g in (p10, s10):
        with pytest.raises(NotThreeColorable):
            construct_prop10b(g)


def test_solver_agrees_with_brute_force(corpus6):
    # exhaustive cross-check on all ordered pairs of 6-vertex multigraphs
    for g in corpus6:
        for h in corpus6:
            found = solve_hcoloring(g, h)
            if found is not None:
                assert verify_hcoloring(g, h, found)
            assert (found is not None) == brute_force_hcolorable(g, h)
