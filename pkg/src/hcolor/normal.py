"""Normal edge colorings: poor and rich edges, the normal chromatic index,
and the pullback of normal colorings through H-colorings.

In a proper edge coloring, look at an edge together with the edges meeting
its endpoints: in a loopless cubic graph that is a set of at most five
edges.  The edge is poor when the set carries exactly three distinct
colors, rich when it carries exactly five.  A proper coloring in which
every edge is poor or rich is normal, and the least number of colors
admitting one is the normal chromatic index.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import catalog
from .errors import BadK, EquivalenceViolation, NotProper, PreconditionViolated
from .hcoloring import EdgeMap, SolverOptions, solve_hcoloring, verify_hcoloring
from .multigraph import MultiGraph

POOR = "poor"
RICH = "rich"
NEITHER = "neither"


@dataclass(frozen=True)
class NormalColoring:
    """A proper k-edge-coloring in which every edge is poor or rich."""

    graph: MultiGraph
    k: int
    assignment: tuple[int, ...]
    classification: tuple[str, ...]


def _closed_neighborhood(g: MultiGraph, e: int) -> tuple[int, ...]:
    u, v = g.endpoints(e)
    around = {e}
    for x in {u, v}:
        around.update(g.incident_edges(x))
    return tuple(sorted(around))


def _check_proper(g: MultiGraph, colors) -> tuple[int, ...]:
    seq = tuple(colors[e] for e in range(g.edge_count)) if not isinstance(
        colors, tuple
    ) else colors
    if len(seq) != g.edge_count:
        raise NotProper("coloring does not cover every edge")
    for x in range(g.vertex_count):
        seen = [seq[d] for d in g.incident_edges(x)]
        if len(set(seen)) != len(seen):
            raise NotProper(f"adjacent edges share a color at vertex {x}")
    return seq


def classify_edge(g: MultiGraph, colors, e: int) -> str:
    """POOR, RICH, or NEITHER for one edge of a proper coloring.

    Counts distinct colors over the edge and everything meeting its
    endpoints; parallel endpoints collapse the five-edge neighborhood to
    fewer edges, in which case rich may be unreachable.
    """
    seq = _check_proper(g, colors)
    around = _closed_neighborhood(g, e)
    distinct = len({seq[d] for d in around})
    if distinct == 3:
        return POOR
    if distinct == 5:
        return RICH
    return NEITHER


def solve_normal(g: MultiGraph, k: int) -> NormalColoring | None:
    """A normal k-edge-coloring found by exhaustive backtracking, or None.

    Colors are introduced in canonical order (edge i may only use one color
    beyond those already on edges before it), and every closed edge
    neighborhood is kept able to finish on exactly 3 or exactly 5 distinct
    colors; a neighborhood forced elsewhere prunes the branch.
    """
    if k < 3:
        raise BadK("a proper edge coloring of a cubic graph needs 3 colors")
    m = g.edge_count
    hoods = [_closed_neighborhood(g, e) for e in range(m)]
    # edges whose neighborhood contains e, i.e. the ones to re-check
    watchers: list[list[int]] = [[] for _ in range(m)]
    for e in range(m):
        for d in hoods[e]:
            watchers[d].append(e)
    order: list[int] = []
    seen = [False] * m
    for seed in range(m):
        if seen[seed]:
            continue
        stack = [seed]
        while stack:
            e = stack.pop()
            if seen[e]:
                continue
            seen[e] = True
            order.append(e)
            fresh = {d for d in hoods[e] if not seen[d]}
            stack.extend(sorted(fresh, reverse=True))
    colors = [-1] * m

    def feasible(d: int) -> bool:
        got: set[int] = set()
        blank = 0
        for x in hoods[d]:
            if colors[x] < 0:
                blank += 1
            else:
                got.add(colors[x])
        have = len(got)
        if have > 5 or have + blank < 3:
            return False
        if blank == 0 and have not in (3, 5):
            return False
        return True

    def conflict(e: int, c: int) -> bool:
        u, v = g.endpoints(e)
        for x in {u, v}:
            for d in g.incident_edges(x):
                if d != e and colors[d] == c:
                    return True
        return False

    def place(i: int, introduced: int) -> bool:
        if i == m:
            return True
        e = order[i]
        for c in range(min(k, introduced + 1)):
            if conflict(e, c):
                continue
            colors[e] = c
            if all(feasible(d) for d in watchers[e]) and place(
                i + 1, max(introduced, c + 1)
            ):
                return True
            colors[e] = -1
        return False

    if not place(0, 0):
        return None
    assignment = tuple(colors)
    tags = tuple(classify_edge(g, assignment, e) for e in range(m))
    assert all(t in (POOR, RICH) for t in tags), "search left a neither edge"
    return NormalColoring(g, k, assignment, tags)


def normal_chromatic_index(g: MultiGraph) -> int | None:
    """Least k in 3..7 admitting a normal k-edge-coloring, else None.

    The upper end of the range is justified by a known bound: a cubic graph
    admitting any normal coloring admits one with at most seven colors, so
    an empty 3..7 sweep means no normal coloring exists at all.
    """
    for k in range(3, 8):
        if solve_normal(g, k) is not None:
            return k
    return None


def jaeger_check(g: MultiGraph) -> tuple[int | None, EdgeMap | None]:
    """Assert that normal 5-colorability coincides with Petersen
    colorability, returning both witnesses.

    Raises EquivalenceViolation on disagreement; that would contradict a
    classical equivalence, so it is a test failure and never an expected
    outcome.
    """
    index = normal_chromatic_index(g)
    witness = solve_hcoloring(g, catalog("P10"), SolverOptions())
    small = index is not None and index <= 5
    if small != (witness is not None):
        raise EquivalenceViolation(
            f"normal index {index} disagrees with Petersen map "
            f"{'found' if witness else 'absent'}"
        )
    return index, witness


def induced_normal_coloring(f: EdgeMap, c: NormalColoring) -> NormalColoring:
    """Pull a normal coloring of the target back through an H-coloring.

    Around any source vertex the map is a bijection onto a target star, so
    the closed neighborhood of an edge maps onto the closed neighborhood of
    its image and the distinct-color count is preserved: poor stays poor,
    rich stays rich, and the color count k is unchanged.
    """
    if c.graph != f.target:
        raise PreconditionViolated("coloring belongs to a different graph")
    report = verify_hcoloring(f.source, f.target, f)
    if not report:
        raise PreconditionViolated(
            f"map is not an H-coloring (vertex {report.failing_vertex})"
        )
    assignment = tuple(c.assignment[d] for d in f.assignment)
    tags = tuple(
        classify_edge(f.source, assignment, e)
        for e in range(f.source.edge_count)
    )
    assert all(t in (POOR, RICH) for t in tags), "pullback left a neither edge"
    return NormalColoring(f.source, c.k, assignment, tags)
