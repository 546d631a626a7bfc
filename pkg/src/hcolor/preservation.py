"""What an H-coloring transports from its target back to its source.

Preimages under a verified map carry structure backwards: matchings stay
matchings, perfect matchings stay perfect, even subgraphs stay even, whole
covers stay covers of the same kind, bridges map onto bridges, and normal
colorings pull back at the same color count.  This module bundles those
laws into one report so any map found anywhere in the system can be put
through the full battery.
"""

from __future__ import annotations

from dataclasses import dataclass

from .covers import (
    CoverList,
    chromatic_index_cubic,
    enumerate_even_subgraphs,
    enumerate_perfect_matchings,
    find_berge_fulkerson,
    is_even,
    is_matching,
    is_perfect_matching,
    pm_cover_number,
    verify_cover,
)
from .errors import PreconditionViolated
from .hcoloring import EdgeMap, preimage, verify_hcoloring
from .multigraph import MultiGraph, bridges
from .normal import induced_normal_coloring, normal_chromatic_index, solve_normal


@dataclass(frozen=True)
class PreservationReport:
    """Named pass/fail verdicts; vacuously true checks count as passes."""

    checks: tuple[tuple[str, bool], ...]

    @property
    def ok(self) -> bool:
        return all(passed for _, passed in self.checks)

    def failed(self) -> tuple[str, ...]:
        return tuple(name for name, passed in self.checks if not passed)


def _all_matchings(g: MultiGraph) -> list[frozenset[int]]:
    # include/exclude recursion over edge indices; loops never qualify
    out: list[frozenset[int]] = []
    chosen: list[int] = []
    blocked = [False] * g.vertex_count

    def extend(e: int) -> None:
        if e == g.edge_count:
            out.append(frozenset(chosen))
            return
        extend(e + 1)
        u, v = g.endpoints(e)
        if u != v and not blocked[u] and not blocked[v]:
            blocked[u] = blocked[v] = True
            chosen.append(e)
            extend(e + 1)
            chosen.pop()
            blocked[u] = blocked[v] = False

    extend(0)
    return out


def _checked(f: EdgeMap) -> None:
    report = verify_hcoloring(f.source, f.target, f)
    if not report:
        raise PreconditionViolated(
            f"map is not an H-coloring (vertex {report.failing_vertex})"
        )


def matchings_pull_back(f: EdgeMap) -> bool:
    """Every matching of the target has a matching preimage."""
    return all(
        is_matching(f.source, frozenset(preimage(f, m)))
        for m in _all_matchings(f.target)
    )


def perfect_matchings_pull_back(f: EdgeMap) -> bool:
    """Every perfect matching of the target has a perfect matching preimage."""
    return all(
        is_perfect_matching(f.source, frozenset(preimage(f, m)))
        for m in enumerate_perfect_matchings(f.target)
    )


def even_subgraphs_pull_back(f: EdgeMap) -> bool:
    """Every even subgraph of the target has an even preimage."""
    return all(
        is_even(f.source, frozenset(preimage(f, s)))
        for s in enumerate_even_subgraphs(f.target)
    )


def bridges_map_to_bridges(f: EdgeMap) -> bool:
    """The image of every bridge of the source is a bridge of the target."""
    target_bridges = bridges(f.target)
    return all(f.assignment[e] in target_bridges for e in bridges(f.source))


def pull_back_cover(f: EdgeMap, cover: CoverList) -> CoverList:
    """Transport a cover of the target to one of the source, same kind.

    Each part is replaced by its preimage; membership multiplicities are
    inherited edge by edge, so every cover kind survives the trip.
    """
    if cover.graph != f.target:
        raise PreconditionViolated("cover belongs to a different graph")
    parts = tuple(frozenset(preimage(f, part)) for part in cover.parts)
    return CoverList(f.source, cover.kind, parts)


def run_preservation_suite(f: EdgeMap, k_max: int = 6) -> PreservationReport:
    """All pullback laws against one verified map.

    Checks without material on the target side (no Berge-Fulkerson cover,
    no normal coloring, no perfect matching cover within k_max) pass
    vacuously.  An invalid map raises PreconditionViolated instead of
    reporting failures.
    """
    _checked(f)
    checks: list[tuple[str, bool]] = [
        ("matching-pullback", matchings_pull_back(f)),
        ("perfect-matching-pullback", perfect_matchings_pull_back(f)),
        ("even-pullback", even_subgraphs_pull_back(f)),
        ("bridge-image", bridges_map_to_bridges(f)),
    ]

    bf = find_berge_fulkerson(f.target)
    checks.append(
        ("berge-fulkerson-pullback", bf is None or verify_cover(pull_back_cover(f, bf)))
    )

    chi_src = chromatic_index_cubic(f.source)[0]
    chi_tgt = chromatic_index_cubic(f.target)[0]
    checks.append(("chromatic-index-monotone", chi_src <= chi_tgt))

    covered = pm_cover_number(f.target, k_max)
    if covered is None:
        checks.append(("cover-number-monotone", True))
    else:
        pulled = pull_back_cover(f, covered[1])
        mine = pm_cover_number(f.source, k_max)
        checks.append(
            (
                "cover-number-monotone",
                verify_cover(pulled) and mine is not None and mine[0] <= covered[0],
            )
        )

    index = normal_chromatic_index(f.target)
    if index is None:
        checks.append(("normal-pullback", True))
    else:
        coloring = solve_normal(f.target, index)
        pulled_normal = induced_normal_coloring(f, coloring)
        checks.append(("normal-pullback", pulled_normal.k == index))

    return PreservationReport(tuple(checks))
