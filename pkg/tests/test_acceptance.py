"""Acceptance gate: eleven go/no-go checks over the whole library.

Run with `pytest tests/test_acceptance.py -v -s`; each check prints
exactly one line of the form

    criterion NN PASS: label (X.Xs)

so a log scrape recovers the full scoreboard.  Every check also
enforces its own wall-clock ceiling.
"""

from __future__ import annotations

import time

import pytest

from helpers import brute_force_hcolorable
from hcolor.catalog import CATALOG_NAMES, catalog
from hcolor.conjectures import derive_s10_from_s12, rigidity_scan
from hcolor.corpus import cubic_multigraph_corpus
from hcolor.covers import (
    chromatic_index_cubic,
    cq_equivalence_check,
    descend_even_cover_through_triangle,
    enumerate_perfect_matchings,
    find_berge_fulkerson,
    find_even_cover_5_2,
    find_parity_cover_4,
    has_perfect_matching,
    lift_join_cover_to_triangle_expansion,
    pm_cover_number,
    verify_cover,
)
from hcolor.hcoloring import (
    EdgeMap,
    SolverOptions,
    construct_prop10b,
    solve_hcoloring,
    three_coloring_from_deficient_p10_coloring,
    unused_edges,
    verify_hcoloring,
)
from hcolor.isomorphism import is_isomorphic
from hcolor.multigraph import bridges, star
from hcolor.normal import jaeger_check, normal_chromatic_index
from hcolor.preservation import run_preservation_suite
from hcolor.transform import (
    expand_vertices_to_triangles,
    find_triangles,
    is_contractible,
)


def _criterion(num, label, limit_seconds, body):
    t0 = time.perf_counter()
    ok = False
    try:
        body()
        ok = True
    finally:
        elapsed = time.perf_counter() - t0
        print(f"criterion {num:02d} {'PASS' if ok else 'FAIL'}: "
              f"{label} ({elapsed:.1f}s)")
    assert elapsed < limit_seconds, f"criterion {num} exceeded {limit_seconds}s"


@pytest.fixture(scope="module")
def corpus10():
    return cubic_multigraph_corpus(10)


@pytest.fixture(scope="module")
def bridgeless10(corpus10):
    return [g for g in corpus10 if not bridges(g)]


def test_criterion_01_catalog_structure():
    def body():
        p10, s10, s12, s16 = (catalog(n) for n in ("P10", "S10", "S12", "S16"))
        assert (p10.vertex_count, p10.edge_count) == (10, 15)
        assert len(enumerate_perfect_matchings(p10)) == 6
        assert len(enumerate_perfect_matchings(s10)) == 0
        assert len(enumerate_perfect_matchings(s12)) >= 1
        assert len(bridges(s12)) == 3
        assert len(bridges(s16)) == 3

    _criterion(1, "catalog structure", 1.0, body)


def test_criterion_02_chromatic_index():
    def body():
        for name, want in (("K4", 3), ("P10", 4), ("P12", 4), ("S12", 4)):
            assert chromatic_index_cubic(catalog(name))[0] == want, name

    _criterion(2, "chromatic index facts", 1.0, body)


def test_criterion_03_cover_numbers():
    def body():
        for name, want in (("K4", 3), ("P10", 5), ("P12", 4)):
            found = pm_cover_number(catalog(name), 6)
            assert found is not None and found[0] == want, name
            assert verify_cover(found[1])
        bf = find_berge_fulkerson(catalog("P10"))
        assert bf is not None and verify_cover(bf)

    _criterion(3, "perfect-matching cover numbers", 10.0, body)


def test_criterion_04_hcoloring_milestones():
    def body():
        p10, p12, theta = catalog("P10"), catalog("P12"), catalog("THETA")
        f = solve_hcoloring(p12, p10, SolverOptions())
        assert f is not None and verify_hcoloring(p12, p10, f).ok
        assert run_preservation_suite(f).ok
        assert solve_hcoloring(p10, theta, SolverOptions()) is None
        for name in CATALOG_NAMES:
            g = catalog(name)
            identity = EdgeMap(g, g, tuple(range(g.edge_count)))
            assert verify_hcoloring(g, g, identity).ok, name

    _criterion(4, "h-coloring milestones", 30.0, body)


def test_criterion_05_rigidity_scans(corpus10, bridgeless10):
    def body():
        s10_report = rigidity_scan(catalog("S10"), corpus10)
        assert not s10_report.counterexamples
        assert not s10_report.budget_exhausted
        hits = s10_report.positives()
        assert len(hits) == 1
        assert is_isomorphic(corpus10[hits[0]], catalog("S10"))

        p10_report = rigidity_scan(catalog("P10"), bridgeless10)
        assert not p10_report.counterexamples
        assert not p10_report.budget_exhausted
        hits = p10_report.positives()
        assert len(hits) == 1
        assert is_isomorphic(bridgeless10[hits[0]], catalog("P10"))

    _criterion(5, "rigidity scans at ten vertices", 600.0, body)


def test_criterion_06_normal_colorings(bridgeless10):
    def body():
        assert normal_chromatic_index(catalog("K4")) == 3
        assert normal_chromatic_index(catalog("P10")) == 5
        assert normal_chromatic_index(catalog("S10")) is None
        p10 = catalog("P10")
        for g in bridgeless10:
            index, witness = jaeger_check(g)
            if witness is not None:
                assert index is not None and index <= 5
                assert verify_hcoloring(g, p10, witness).ok

    _criterion(6, "normal colorings and the five-color law", 300.0, body)


def test_criterion_07_even_vs_parity_covers():
    def body():
        for g in cubic_multigraph_corpus(12):
            even, parity = cq_equivalence_check(g)
            assert (even is None) == (parity is None)
            if even is not None:
                assert verify_cover(even) and verify_cover(parity)

    _criterion(7, "even covers match parity covers", 600.0, body)


def test_criterion_08_lift_and_descent():
    def body():
        for name in ("K4", "P10"):
            base = catalog(name)
            parity = find_parity_cover_4(base)
            assert parity is not None
            lifted = lift_join_cover_to_triangle_expansion(base, parity)
            assert lifted.kind == "PMCover" and len(lifted.parts) == 4
            assert verify_cover(lifted)
            assert lifted.graph.vertex_count == 3 * base.vertex_count

            expansion, _ = expand_vertices_to_triangles(
                base, set(range(base.vertex_count))
            )
            cover = find_even_cover_5_2(expansion)
            assert cover is not None
            g = expansion
            while g.vertex_count > base.vertex_count:
                t = next(t for t in find_triangles(g) if is_contractible(g, t))
                cover = descend_even_cover_through_triangle(g, t, cover)
                g = cover.graph
                assert verify_cover(cover)
            assert is_isomorphic(g, base)

    _criterion(8, "cover lifts and descents through triangles", 60.0, body)


def test_criterion_09_blowup_pipeline():
    def body():
        k4, p10, p12 = catalog("K4"), catalog("P10"), catalog("P12")
        g36, f = construct_prop10b(k4)
        assert g36.vertex_count == 36
        assert verify_hcoloring(g36, p12, f).ok
        assert set(unused_edges(f)) == {15, 16, 17}
        assert chromatic_index_cubic(g36)[0] == 4

        colors = chromatic_index_cubic(k4)[1]
        target_star = sorted(star(p10, 0))
        collapse = EdgeMap(
            k4, p10, tuple(target_star[colors[e]] for e in range(6))
        )
        assert verify_hcoloring(k4, p10, collapse).ok
        spare = unused_edges(collapse)[0]
        recovered = three_coloring_from_deficient_p10_coloring(k4, collapse, spare)
        assert set(recovered.values()) <= {0, 1, 2}
        for v in range(4):
            around = {recovered[e] for e in k4.incident_edges(v)}
            assert len(around) == 3

    _criterion(9, "triangle blow-up pipeline", 120.0, body)


def test_criterion_10_no_pm_derivations(corpus10):
    def body():
        s10 = catalog("S10")
        targets = [s10] + [g for g in corpus10 if not has_perfect_matching(g)]
        assert len(targets) >= 2
        for g in targets:
            f = derive_s10_from_s12(g)
            assert verify_hcoloring(g, s10, f).ok

    _criterion(10, "colorings of matching-free graphs", 600.0, body)


def test_criterion_11_solver_vs_oracle():
    def body():
        mini = cubic_multigraph_corpus(6)
        assert len(mini) == 9
        for g in mini:
            for h in mini:
                f = solve_hcoloring(g, h, SolverOptions())
                expected = brute_force_hcolorable(g, h)
                assert (f is not None) == expected
                if f is not None:
                    assert verify_hcoloring(g, h, f).ok

    _criterion(11, "solver agrees with assignment oracle", 300.0, body)
