"""Cubic multigraphs with positional edge identity.

Edges are identified by their position in the edge list, never by their
endpoint pair: parallel edges are distinct objects, and every cover, coloring
and edge map in this package is expressed in edge indices.  Loops are allowed
only when a graph is built as a pseudo-graph; a loop contributes two to the
degree of its vertex and appears once in the vertex's incidence list.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BadIndex, LoopNotAllowed, NotCubic


@dataclass(frozen=True)
class MultiGraph:
    """An undirected multigraph with all degrees equal to three.

    Fields
    ------
    vertex_count : number of vertices, labeled 0 .. vertex_count - 1.
    edges        : tuple of (u, v) pairs with u <= v; index = edge identity.
    is_pseudo    : True if loops are permitted (a loop is a pair (u, u)).
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    is_pseudo: bool = False

    # Derived incidence structure, excluded from equality and hashing.
    _incidence: tuple[tuple[int, ...], ...] = field(
        init=False, repr=False, compare=False, hash=False, default=()
    )

    def __post_init__(self) -> None:
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for idx, (u, v) in enumerate(self.edges):
            inc[u].append(idx)
            if v != u:
                inc[v].append(idx)
        object.__setattr__(self, "_incidence", tuple(tuple(x) for x in inc))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def endpoints(self, e: int) -> tuple[int, int]:
        if not 0 <= e < len(self.edges):
            raise BadIndex(f"edge index {e} out of range")
        return self.edges[e]

    def incident_edges(self, v: int) -> tuple[int, ...]:
        """Edge indices incident to v; a loop appears once."""
        if not 0 <= v < self.vertex_count:
            raise BadIndex(f"vertex index {v} out of range")
        return self._incidence[v]

    def degree(self, v: int) -> int:
        """Degree of v, counting each loop twice."""
        d = 0
        for e in self.incident_edges(v):
            u, w = self.edges[e]
            d += 2 if u == w else 1
        return d

    def is_loop(self, e: int) -> bool:
        u, v = self.endpoints(e)
        return u == v

    def other_end(self, e: int, v: int) -> int:
        u, w = self.endpoints(e)
        if v == u:
            return w
        if v == w:
            return u
        raise BadIndex(f"vertex {v} is not an endpoint of edge {e}")

    def has_loops(self) -> bool:
        return any(u == v for u, v in self.edges)


def build_graph(
    vertex_count: int,
    edge_list: list[tuple[int, int]] | tuple[tuple[int, int], ...],
    allow_loops: bool = False,
) -> MultiGraph:
    """Validate and freeze a cubic multigraph.

    Raises BadIndex for out-of-range endpoints, LoopNotAllowed for a loop
    when allow_loops is false, and NotCubic if any vertex degree differs
    from three (loops counting twice).
    """
    if vertex_count < 0:
        raise BadIndex("vertex_count must be nonnegative")
    norm: list[tuple[int, int]] = []
    deg = [0] * vertex_count
    for pos, pair in enumerate(edge_list):
        try:
            u, v = pair
        except (TypeError, ValueError):
            raise BadIndex(f"edge {pos} is not a pair") from None
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise BadIndex(f"edge {pos} = ({u}, {v}) out of range")
        if u == v:
            if not allow_loops:
                raise LoopNotAllowed(f"edge {pos} is a loop at vertex {u}")
            deg[u] += 2
        else:
            deg[u] += 1
            deg[v] += 1
        norm.append((u, v) if u <= v else (v, u))
    for v, d in enumerate(deg):
        if d != 3:
            raise NotCubic(f"vertex {v} has degree {d}, expected 3")
    return MultiGraph(vertex_count, tuple(norm), is_pseudo=bool(allow_loops))


def star(g: MultiGraph, v: int) -> frozenset[int]:
    """The set of edge indices incident to v (a loop contributes one index)."""
    return frozenset(g.incident_edges(v))


def is_simple(g: MultiGraph) -> bool:
    """No loops and no parallel edges."""
    seen: set[tuple[int, int]] = set()
    for u, v in g.edges:
        if u == v or (u, v) in seen:
            return False
        seen.add((u, v))
    return True


def connected_components(g: MultiGraph) -> list[list[int]]:
    """Vertex lists of the connected components, each sorted ascending."""
    seen = [False] * g.vertex_count
    comps: list[list[int]] = []
    for s in range(g.vertex_count):
        if seen[s]:
            continue
        stack = [s]
        seen[s] = True
        comp = []
        while stack:
            x = stack.pop()
            comp.append(x)
            for e in g.incident_edges(x):
                y = g.other_end(e, x)
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(g: MultiGraph) -> bool:
    if g.vertex_count == 0:
        return True
    return len(connected_components(g)) == 1


def bridges(g: MultiGraph) -> frozenset[int]:
    """Edge indices of all bridges, found by an iterative low-link traversal.

    The traversal tracks the edge index used to enter each vertex, so a
    parallel copy of the entering edge is an ordinary back edge and parallel
    edges are never reported as bridges.  Loops are never bridges.
    """
    n = g.vertex_count
    disc = [-1] * n
    low = [0] * n
    out: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        # Stack entries: (vertex, entering edge id, iterator position).
        stack: list[list[int]] = [[root, -1, 0]]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            frame = stack[-1]
            x, in_edge, i = frame
            inc = g.incident_edges(x)
            if i < len(inc):
                frame[2] += 1
                e = inc[i]
                if e == in_edge or g.is_loop(e):
                    continue
                y = g.other_end(e, x)
                if disc[y] == -1:
                    disc[y] = low[y] = timer
                    timer += 1
                    stack.append([y, e, 0])
                else:
                    if disc[y] < low[x]:
                        low[x] = disc[y]
            else:
                stack.pop()
                if stack:
                    px = stack[-1][0]
                    if low[x] < low[px]:
                        low[px] = low[x]
                    if low[x] > disc[px]:
                        out.add(in_edge)
    return frozenset(out)


def parallel_classes(g: MultiGraph) -> dict[tuple[int, int], list[int]]:
    """Group edge indices by endpoint pair."""
    classes: dict[tuple[int, int], list[int]] = {}
    for idx, pair in enumerate(g.edges):
        classes.setdefault(pair, []).append(idx)
    return classes


def adjacency_count(g: MultiGraph, u: int, v: int) -> int:
    """Number of edges between u and v (loops when u == v)."""
    key = (u, v) if u <= v else (v, u)
    return sum(1 for pair in g.edges if pair == key)
