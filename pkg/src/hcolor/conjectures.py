"""Derivation pipelines, hereditary graph classes, and desk-scale scans.

Two constructive pipelines convert colorings of the 12-vertex catalog
graphs into colorings of their 10-vertex contractions: one routes any
cubic graph to the three-bridge target through a perfect matching or a
minimal triangle expansion, the other routes bridgeless graphs to the
triangle-free target through a four-part perfect matching cover.  Both
verify every intermediate step and fail loudly if a step contradicts the
argument they implement.

Scans run a decided question over a corpus graph by graph: rigidity
scans ask which corpus members color a fixed catalog target, conjecture
scans ask whether every hypothesis-satisfying member has the conjectured
structure.  Reports carry a certificate for every positive verdict, and
a search that hits its node budget is recorded as exhausted, never as a
refutation.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .catalog import catalog, catalog_name
from .certificates import Certificate, certificate_for_cover, certificate_for_map
from .clawfree import is_claw_free
from .covers import (
    chromatic_index_cubic,
    enumerate_perfect_matchings,
    find_parity_cover_4,
    has_perfect_matching,
    lift_join_cover_to_triangle_expansion,
    pm_cover_number,
    verify_cover,
)
from .errors import (
    BudgetExceeded,
    HasPerfectMatching,
    OracleFailed,
    PreconditionViolated,
    ProofAssertionFailed,
)
from .hcoloring import EdgeMap, SolverOptions, compose, solve_hcoloring, verify_hcoloring
from .isomorphism import is_isomorphic
from .multigraph import MultiGraph, bridges, is_connected, star
from .normal import solve_normal
from .transform import expand_vertices_to_triangles, expansion_triangle, opposite_edge

from itertools import combinations


@dataclass(frozen=True)
class GraphClassId:
    """A hereditary class of connected cubic graphs.

    kind is one of "all", "bridgeless", "three-edge-colorable",
    "perfect-matching", "cover-4", or "normal"; the last carries the
    color count k with 3 <= k <= 7.
    """

    kind: str
    k: int | None = None

    def __post_init__(self):
        kinds = (
            "all",
            "bridgeless",
            "three-edge-colorable",
            "perfect-matching",
            "cover-4",
            "normal",
        )
        if self.kind not in kinds:
            raise PreconditionViolated(f"unknown class kind {self.kind!r}")
        if self.kind == "normal":
            if self.k is None or not 3 <= self.k <= 7:
                raise PreconditionViolated("normal classes need 3 <= k <= 7")
        elif self.k is not None:
            raise PreconditionViolated(f"class {self.kind!r} takes no k")


ALL_CUBIC = GraphClassId("all")
BRIDGELESS = GraphClassId("bridgeless")
THREE_EDGE_COLORABLE = GraphClassId("three-edge-colorable")
WITH_PERFECT_MATCHING = GraphClassId("perfect-matching")
COVERED_BY_FOUR = GraphClassId("cover-4")


def normally_colorable(k: int) -> GraphClassId:
    return GraphClassId("normal", k)


def class_membership(g: MultiGraph, c: GraphClassId):
    """(member, witness) for g against class c.

    The witness is a positive artifact where one exists: an edge coloring,
    a perfect matching, a four-part cover, or a normal coloring; classes
    defined by absence (bridgelessness) and the all-class witness None.
    """
    if not is_connected(g):
        raise PreconditionViolated("class membership is for connected graphs")
    if c.kind == "all":
        return True, None
    if c.kind == "bridgeless":
        return not bridges(g), None
    if c.kind == "three-edge-colorable":
        chi, colors = chromatic_index_cubic(g)
        return (True, colors) if chi == 3 else (False, None)
    if c.kind == "perfect-matching":
        pms = enumerate_perfect_matchings(g)
        return (True, pms[0]) if pms else (False, None)
    if c.kind == "cover-4":
        covered = pm_cover_number(g, 4)
        return (True, covered[1]) if covered is not None else (False, None)
    coloring = solve_normal(g, c.k)
    return (True, coloring) if coloring is not None else (False, None)


def minimal_expansion_set(g: MultiGraph) -> frozenset[int]:
    """Smallest vertex set whose triangle expansion has a perfect matching.

    Searched breadth-first by cardinality, lexicographically within each
    size, so the answer is deterministic.  Expanding every vertex always
    works (the surviving original edges form a perfect matching of the
    full expansion), so the search terminates.  Raises HasPerfectMatching
    when there is nothing to repair.
    """
    if g.has_loops():
        raise PreconditionViolated("loop vertices cannot be expanded")
    if has_perfect_matching(g):
        raise HasPerfectMatching("graph already has a perfect matching")
    n = g.vertex_count
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            expanded, _ = expand_vertices_to_triangles(g, set(combo))
            if has_perfect_matching(expanded):
                return frozenset(combo)
    raise ProofAssertionFailed("full expansion lacks a perfect matching")


def _oracle_coloring(graph: MultiGraph, target: MultiGraph, oracle) -> EdgeMap:
    result = oracle(graph)
    if result is None:
        raise OracleFailed("oracle produced no coloring")
    if not isinstance(result, EdgeMap):
        result = EdgeMap(graph, target, tuple(result))
    if result.source != graph or result.target != target:
        raise OracleFailed("oracle returned a map for the wrong graphs")
    report = verify_hcoloring(graph, target, result)
    if not report:
        raise OracleFailed(
            f"oracle returned an invalid map (vertex {report.failing_vertex})"
        )
    return result


_STEP_CACHE: dict[tuple[str, str], EdgeMap] = {}


def _catalog_step(source_name: str, target_name: str) -> EdgeMap:
    # maps between fixed catalog graphs are solved once and cached
    key = (source_name, target_name)
    if key not in _STEP_CACHE:
        step = solve_hcoloring(catalog(source_name), catalog(target_name))
        assert step is not None, f"no {target_name}-coloring of {source_name}"
        _STEP_CACHE[key] = step
    return _STEP_CACHE[key]


def derive_s10_from_s12(g: MultiGraph, s12_oracle=None) -> EdgeMap:
    """A verified S10-coloring of g, built from S12-colorings.

    With a perfect matching, g's S12-coloring composes with the fixed
    S12-to-S10 step.  Without one, the minimal triangle expansion of g is
    S12-colored instead; each added triangle must then map onto the
    central triangle of S12 (anything else contradicts the minimality of
    the expansion set and raises ProofAssertionFailed), so undoing the
    expansion and recoloring each central-triangle edge to its opposite
    bridge lands on S10.

    The oracle defaults to the exact solver; a custom one must return an
    S12-coloring of whatever graph it is handed, or None (OracleFailed).
    """
    if not is_connected(g):
        raise PreconditionViolated("the pipeline needs a connected graph")
    s10 = catalog("S10")
    s12 = catalog("S12")
    if s12_oracle is None:
        s12_oracle = lambda graph: solve_hcoloring(graph, s12)

    if has_perfect_matching(g):
        f = _oracle_coloring(g, s12, s12_oracle)
        out = compose(f, _catalog_step("S12", "S10"))
        assert verify_hcoloring(g, s10, out)
        return out

    chosen = minimal_expansion_set(g)
    expanded, _ = expand_vertices_to_triangles(g, chosen)
    f = _oracle_coloring(expanded, s12, s12_oracle)

    central = expansion_triangle(s10, s12, {9}, 9)
    central_edges = frozenset(central.edges)
    for u in sorted(chosen):
        tri = expansion_triangle(g, expanded, chosen, u)
        images = frozenset(f.assignment[e] for e in tri.edges)
        if images != central_edges:
            if any(images == star(s12, y) for y in range(s12.vertex_count)):
                shape = "a vertex star"
            else:
                shape = "a non-central triangle"
            raise ProofAssertionFailed(
                f"triangle for vertex {u} maps onto {shape}; "
                "this contradicts the minimality of the expansion set"
            )

    to_bridge = {e: opposite_edge(s12, central, e) for e in central.edges}
    assignment = tuple(
        to_bridge.get(f.assignment[e], f.assignment[e]) for e in range(g.edge_count)
    )
    out = EdgeMap(g, s10, assignment)
    report = verify_hcoloring(g, s10, out)
    if not report:
        raise ProofAssertionFailed(
            f"contracted coloring fails at vertex {report.failing_vertex}"
        )
    return out


def derive_p10_via_p12(g: MultiGraph, opts: SolverOptions | None = None):
    """A verified P10-coloring of a bridgeless g routed through P12, or None.

    When g has a four-part perfect matching cover, its P12-coloring
    composes with the fixed P12-to-P10 step.  Otherwise every vertex is
    expanded to a triangle; the expansion always has a four-part cover
    (a four-part join cover of g lifts to one), its P12-coloring is
    composed down to P10, and restricting to the original edges undoes
    the expansion because no three edges of P10 form a triangle.

    Returns None when an exhaustive search step finds nothing; raises
    BudgetExceeded when a budgeted one gives up early.
    """
    if not is_connected(g):
        raise PreconditionViolated("the pipeline needs a connected graph")
    if bridges(g):
        raise PreconditionViolated("the pipeline needs a bridgeless graph")
    p10 = catalog("P10")
    p12 = catalog("P12")
    step = _catalog_step("P12", "P10")

    if pm_cover_number(g, 4) is not None:
        f = solve_hcoloring(g, p12, opts)
        if f is None:
            return None
        out = compose(f, step)
        assert verify_hcoloring(g, p10, out)
        return out

    expanded, _ = expand_vertices_to_triangles(g, set(range(g.vertex_count)))
    joins = find_parity_cover_4(g)
    if joins is None:
        return None
    lifted = lift_join_cover_to_triangle_expansion(g, joins)
    assert verify_cover(lifted) and lifted.graph == expanded

    f = solve_hcoloring(expanded, p12, opts)
    if f is None:
        return None
    comp = compose(f, step)
    out = EdgeMap(g, p10, tuple(comp.assignment[e] for e in range(g.edge_count)))
    report = verify_hcoloring(g, p10, out)
    if not report:
        raise ProofAssertionFailed(
            f"contracted coloring fails at vertex {report.failing_vertex}"
        )
    return out


POSITIVE = "positive"
NEGATIVE = "negative"
SKIPPED = "skipped"
BUDGET = "budget"
COUNTEREXAMPLE = "counterexample"


@dataclass(frozen=True)
class ScanVerdict:
    index: int
    outcome: str
    certificate: Certificate | None = None
    detail: str | None = None
    seconds: float = 0.0


@dataclass(frozen=True)
class ScanReport:
    """Per-graph verdicts over a corpus slice.

    Positive verdicts always carry a certificate.  Budget exhaustions are
    listed separately and never counted as refutations; counterexamples
    are the only refutations.
    """

    corpus: str
    verdicts: tuple[ScanVerdict, ...]
    counterexamples: tuple[int, ...]
    budget_exhausted: tuple[int, ...]
    total_seconds: float
    halted_at: int | None = None

    def __post_init__(self):
        for v in self.verdicts:
            if v.outcome == POSITIVE and v.certificate is None:
                raise PreconditionViolated(
                    f"positive verdict {v.index} lacks a certificate"
                )
        assert self.counterexamples == tuple(
            v.index for v in self.verdicts if v.outcome == COUNTEREXAMPLE
        )
        assert self.budget_exhausted == tuple(
            v.index for v in self.verdicts if v.outcome == BUDGET
        )

    def positives(self) -> tuple[int, ...]:
        return tuple(v.index for v in self.verdicts if v.outcome == POSITIVE)


def _finish_report(corpus_label, verdicts, started, halted_at=None) -> ScanReport:
    return ScanReport(
        corpus=corpus_label,
        verdicts=tuple(verdicts),
        counterexamples=tuple(
            v.index for v in verdicts if v.outcome == COUNTEREXAMPLE
        ),
        budget_exhausted=tuple(v.index for v in verdicts if v.outcome == BUDGET),
        total_seconds=time.time() - started,
        halted_at=halted_at,
    )


RIGIDITY_TARGETS = {
    "P10": ("P10",),
    "S10": ("S10",),
    "P12": ("P10", "P12"),
    "S12": ("S10", "S12"),
    "S16": ("S16",),
}


def rigidity_scan(
    target: MultiGraph,
    corpus,
    opts: SolverOptions | None = None,
    offset: int = 0,
    descriptor: str | None = None,
) -> ScanReport:
    """Which corpus members color the target, checked against the allowed set.

    For each graph G in corpus[offset:] the solver decides whether the
    target admits a G-coloring.  A positive outside the target's allowed
    set of graphs is reported as a counterexample; for the catalog targets
    the allowed sets are known exactly, so counterexamples indicate a
    defect somewhere.  Verdict indices are absolute corpus positions.
    """
    name = catalog_name(target)
    if name not in RIGIDITY_TARGETS:
        raise PreconditionViolated("rigidity targets are the five catalog graphs")
    allowed = [(a, catalog(a)) for a in RIGIDITY_TARGETS[name]]
    started = time.time()
    verdicts: list[ScanVerdict] = []
    for i in range(offset, len(corpus)):
        g = corpus[i]
        t0 = time.time()
        try:
            f = solve_hcoloring(target, g, opts)
        except BudgetExceeded as exc:
            verdicts.append(ScanVerdict(i, BUDGET, None, str(exc), time.time() - t0))
            continue
        if f is None:
            verdicts.append(ScanVerdict(i, NEGATIVE, None, None, time.time() - t0))
            continue
        cert = certificate_for_map(f, opts)
        match = next((a for a, gr in allowed if is_isomorphic(g, gr)), None)
        if match is None:
            verdicts.append(
                ScanVerdict(i, COUNTEREXAMPLE, cert,
                            "colors the target but is outside the allowed set",
                            time.time() - t0)
            )
        else:
            verdicts.append(ScanVerdict(i, POSITIVE, cert, match, time.time() - t0))
    return _finish_report(descriptor or f"{len(verdicts)} graphs", verdicts, started)


def _solver_conjecture(target_name: str, hypothesis):
    def run(g: MultiGraph, opts):
        f = solve_hcoloring(g, catalog(target_name), opts)
        if f is None:
            return False, None, f"no {target_name}-coloring (exhaustive)"
        return True, certificate_for_map(f, opts), None

    return hypothesis, run


def _berge_four(g: MultiGraph, opts):
    covered = pm_cover_number(g, 4)
    if covered is None:
        return False, None, "no cover by four perfect matchings (exhaustive)"
    return True, certificate_for_cover(covered[1]), None


def _no_bridge(g):
    return (False, "has a bridge") if bridges(g) else (True, None)


def _always(g):
    return True, None


def _has_pm(g):
    if has_perfect_matching(g):
        return True, None
    return False, "no perfect matching"


def _cover_four_hyp(g):
    if pm_cover_number(g, 4) is not None:
        return True, None
    return False, "no cover by four perfect matchings"


def _clawfree_hyp(g):
    if bridges(g):
        return False, "has a bridge"
    if not is_claw_free(g):
        return False, "has an induced claw"
    return True, None


CONJECTURES = {
    "P10conj": _solver_conjecture("P10", _no_bridge),
    "S10conj": _solver_conjecture("S10", _always),
    "S12conj": _solver_conjecture("S12", _has_pm),
    "P12conj": _solver_conjecture("P12", _cover_four_hyp),
    "ClawFreeBerge": (_clawfree_hyp, _berge_four),
}


def conjecture_scan(
    conjecture: str,
    corpus,
    opts: SolverOptions | None = None,
    offset: int = 0,
    descriptor: str | None = None,
) -> ScanReport:
    """Check one conjecture over corpus[offset:]; the first refutation halts.

    Graphs failing the hypothesis are skipped with the reason recorded.
    Budget exhaustions are recorded and scanning continues.  Verdict
    indices are absolute corpus positions, so a halted or budgeted scan
    can be resumed by passing the next offset.
    """
    if conjecture not in CONJECTURES:
        raise PreconditionViolated(f"unknown conjecture {conjecture!r}")
    hypothesis, run = CONJECTURES[conjecture]
    started = time.time()
    verdicts: list[ScanVerdict] = []
    halted_at = None
    for i in range(offset, len(corpus)):
        g = corpus[i]
        t0 = time.time()
        ok, reason = hypothesis(g)
        if not ok:
            verdicts.append(ScanVerdict(i, SKIPPED, None, reason, time.time() - t0))
            continue
        try:
            holds, cert, detail = run(g, opts)
        except BudgetExceeded as exc:
            verdicts.append(ScanVerdict(i, BUDGET, None, str(exc), time.time() - t0))
            continue
        if holds:
            verdicts.append(ScanVerdict(i, POSITIVE, cert, detail, time.time() - t0))
        else:
            verdicts.append(
                ScanVerdict(i, COUNTEREXAMPLE, cert, detail, time.time() - t0)
            )
            halted_at = i
            break
    return _finish_report(
        descriptor or f"{len(corpus)} graphs from offset {offset}",
        verdicts,
        started,
        halted_at,
    )
