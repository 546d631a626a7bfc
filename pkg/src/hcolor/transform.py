"""Triangle contraction / expansion and diamond constructions.

All operations return fresh MultiGraph values plus an EdgeCorrespondence
mapping surviving edge indices of the input to edge indices of the output.
The numbering conventions are deterministic and chosen so that expanding the
last vertex and contracting the resulting triangle is the identity on both
vertex and edge labels; the catalog relies on this.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BadIndex,
    BadK,
    LoopAtExpandedVertex,
    NotATriangle,
    NotContractible,
)
from .multigraph import MultiGraph, build_graph, parallel_classes


@dataclass(frozen=True)
class TriangleRef:
    """Three edges pairwise sharing one vertex and spanning three vertices."""

    vertices: tuple[int, int, int]
    edges: tuple[int, int, int]


@dataclass(frozen=True)
class EdgeCorrespondence:
    """Partial map from edge indices of `source` to edge indices of `target`."""

    source: MultiGraph
    target: MultiGraph
    mapping: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict[int, int]:
        return dict(self.mapping)

    def __getitem__(self, e: int) -> int:
        for a, b in self.mapping:
            if a == e:
                return b
        raise BadIndex(f"edge {e} has no image under this correspondence")


def triangle_ref(g: MultiGraph, edges: tuple[int, int, int]) -> TriangleRef:
    """Validate three edge indices as a triangle and build the reference."""
    e1, e2, e3 = edges
    verts: set[int] = set()
    for e in (e1, e2, e3):
        u, v = g.endpoints(e)
        if u == v:
            raise NotATriangle(f"edge {e} is a loop")
        verts.update((u, v))
    if len({e1, e2, e3}) != 3 or len(verts) != 3:
        raise NotATriangle(f"edges {edges} do not span exactly 3 vertices")
    pairs = {g.endpoints(e) for e in (e1, e2, e3)}
    if len(pairs) != 3:
        raise NotATriangle(f"edges {edges} include a parallel pair")
    vs = tuple(sorted(verts))
    return TriangleRef(vs, tuple(sorted((e1, e2, e3))))


def find_triangles(g: MultiGraph) -> list[TriangleRef]:
    """All triangles of g; parallel edges yield one triangle per edge choice."""
    classes = parallel_classes(g)
    out: list[TriangleRef] = []
    n = g.vertex_count
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for (u, v), _ in classes.items():
        if u != v:
            adj[u].add(v)
            adj[v].add(u)
    for u in range(n):
        for v in sorted(adj[u]):
            if v <= u:
                continue
            for w in sorted(adj[u] & adj[v]):
                if w <= v:
                    continue
                for euv in classes[(u, v)]:
                    for euw in classes[(u, w)]:
                        for evw in classes[(v, w)]:
                            out.append(
                                TriangleRef((u, v, w), tuple(sorted((euv, euw, evw))))
                            )
    return out


def _internal_extras(g: MultiGraph, t: TriangleRef) -> list[int]:
    """Edges inside t.vertices other than the triangle's own three edges."""
    vs = set(t.vertices)
    return [
        idx
        for idx, (u, v) in enumerate(g.edges)
        if u in vs and v in vs and idx not in t.edges
    ]


def is_contractible(g: MultiGraph, t: TriangleRef) -> bool:
    """True when contracting t yields no loop.

    Contraction deletes the triangle's three edges and merges its vertices;
    a loop arises exactly when some further edge joins two triangle vertices
    (a parallel copy of a triangle side).  In that case the triangle hangs off
    a digon and the third vertex carries a bridge.
    """
    return not _internal_extras(g, t)


def contract_triangle(g: MultiGraph, t: TriangleRef) -> tuple[MultiGraph, EdgeCorrespondence]:
    """Contract triangle t: delete its three edges, merge its vertices.

    The merged vertex receives the largest vertex label of the result; the
    other vertices keep their relative order.  Surviving edges keep their
    relative order.  Any remaining edge inside the triangle becomes a loop and
    the result is flagged pseudo.
    """
    triangle_ref(g, t.edges)  # revalidate against g
    vs = set(t.vertices)
    survivors = [v for v in range(g.vertex_count) if v not in vs]
    remap = {v: i for i, v in enumerate(survivors)}
    merged = len(survivors)
    for v in vs:
        remap[v] = merged
    new_edges: list[tuple[int, int]] = []
    mapping: list[tuple[int, int]] = []
    has_loop = False
    for idx, (u, v) in enumerate(g.edges):
        if idx in t.edges:
            continue
        a, b = remap[u], remap[v]
        if a == b:
            has_loop = True
        mapping.append((idx, len(new_edges)))
        new_edges.append((a, b) if a <= b else (b, a))
    out = build_graph(merged + 1, new_edges, allow_loops=has_loop)
    return out, EdgeCorrespondence(g, out, tuple(mapping))


def expand_vertices_to_triangles(
    g: MultiGraph, vertices: frozenset[int] | set[int]
) -> tuple[MultiGraph, EdgeCorrespondence]:
    """Replace each selected vertex by a triangle.

    Each selected vertex u is replaced by three new vertices, one per edge of
    u in ascending edge-index order; each inherits one edge end, and the three
    are joined in a triangle.  Vertices outside the selection keep their
    relative order and come first; the triangles for selected vertices follow,
    in ascending order of the original vertex.  Original edges keep their
    indices; triangle edges are appended afterwards, grouped per vertex as
    (t0, t1), (t0, t2), (t1, t2).
    """
    sel = sorted(set(vertices))
    for u in sel:
        if not 0 <= u < g.vertex_count:
            raise BadIndex(f"vertex {u} out of range")
        for e in g.incident_edges(u):
            if g.is_loop(e):
                raise LoopAtExpandedVertex(f"vertex {u} carries a loop")
    keep = [v for v in range(g.vertex_count) if v not in sel]
    remap = {v: i for i, v in enumerate(keep)}
    slot_vertex: dict[tuple[int, int], int] = {}
    nxt = len(keep)
    for u in sel:
        for e in sorted(g.incident_edges(u)):
            slot_vertex[(u, e)] = nxt
            nxt += 1

    slot_vertex_owners = set(sel)
    new_edges: list[tuple[int, int]] = []
    for idx, (u, v) in enumerate(g.edges):
        a = slot_vertex[(u, idx)] if u in slot_vertex_owners else remap[u]
        b = slot_vertex[(v, idx)] if v in slot_vertex_owners else remap[v]
        new_edges.append((a, b) if a <= b else (b, a))
    for u in sel:
        t0, t1, t2 = (slot_vertex[(u, e)] for e in sorted(g.incident_edges(u)))
        new_edges.extend([(t0, t1), (t0, t2), (t1, t2)])
    out = build_graph(nxt, new_edges)
    mapping = tuple((i, i) for i in range(len(g.edges)))
    return out, EdgeCorrespondence(g, out, mapping)


def expansion_triangle(
    g: MultiGraph, expanded: MultiGraph, vertices: frozenset[int] | set[int], u: int
) -> TriangleRef:
    """The TriangleRef in `expanded` that replaced original vertex u."""
    sel = sorted(set(vertices))
    if u not in sel:
        raise BadIndex(f"vertex {u} was not expanded")
    keep = g.vertex_count - len(sel)
    base_v = keep + 3 * sel.index(u)
    base_e = len(g.edges) + 3 * sel.index(u)
    return TriangleRef(
        (base_v, base_v + 1, base_v + 2), (base_e, base_e + 1, base_e + 2)
    )


def opposite_edge(g: MultiGraph, t: TriangleRef, e: int) -> int:
    """The edge opposite to e relative to a contractible triangle t.

    For a triangle edge, this is the unique external edge at the triangle
    vertex e avoids; for an external (cut) edge at a triangle vertex, it is
    the triangle edge joining the other two vertices.
    """
    if not is_contractible(g, t):
        raise NotContractible("opposite edges need a contractible triangle")
    vs = set(t.vertices)
    external: dict[int, int] = {}
    for v in t.vertices:
        ext = [x for x in g.incident_edges(v) if x not in t.edges]
        external[v] = ext[0]
    u, v = g.endpoints(e)
    if e in t.edges:
        (w,) = vs - {u, v}
        return external[w]
    if e in external.values():
        inside = u if u in vs else v
        others = sorted(vs - {inside})
        for te in t.edges:
            if set(g.endpoints(te)) == set(others):
                return te
        raise NotATriangle("triangle edges inconsistent")
    raise BadIndex(f"edge {e} is neither a triangle edge nor a cut edge of t")


@dataclass(frozen=True)
class Diamond:
    """An induced K4-minus-an-edge: two corners (degree 2 in the diamond)
    and two mids (degree 3 in the diamond)."""

    corners: tuple[int, int]
    mids: tuple[int, int]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.corners) | frozenset(self.mids)


def find_diamonds(g: MultiGraph) -> list[Diamond]:
    """All induced diamonds of a simple graph section of g.

    Two vertices are adjacent here when joined by exactly one edge; subsets
    containing parallel pairs or loops never qualify as induced diamonds.
    """
    classes = parallel_classes(g)
    single = {pair for pair, ids in classes.items() if len(ids) == 1 and pair[0] != pair[1]}

    def simple_adjacent(a: int, b: int) -> bool:
        return ((a, b) if a <= b else (b, a)) in single

    out: list[Diamond] = []
    n = g.vertex_count
    for (m1, m2) in sorted(single):
        # mids are adjacent; corners attach to both mids but not each other
        commons = [
            w
            for w in range(n)
            if w not in (m1, m2)
            and simple_adjacent(w, m1)
            and simple_adjacent(w, m2)
        ]
        for i in range(len(commons)):
            for j in range(i + 1, len(commons)):
                c1, c2 = commons[i], commons[j]
                key = (c1, c2) if c1 <= c2 else (c2, c1)
                if key in classes:  # corners adjacent: K4 or parallels, not a diamond
                    continue
                out.append(Diamond((c1, c2), (m1, m2)))
    # deduplicate: a diamond is determined by its vertex set and mid pair
    seen: set[tuple[tuple[int, int], tuple[int, int]]] = set()
    uniq = []
    for d in out:
        key = (d.corners, d.mids)
        if key not in seen:
            seen.add(key)
            uniq.append(d)
    return uniq


@dataclass(frozen=True)
class DiamondString:
    """A chain of diamonds; consecutive diamonds joined corner to corner.

    head / tail are the free corners of the first and last diamond.  For each
    diamond the corner facing the head end comes first in `oriented_corners`.
    """

    diamonds: tuple[Diamond, ...]
    oriented_corners: tuple[tuple[int, int], ...]

    @property
    def head(self) -> int:
        return self.oriented_corners[0][0]

    @property
    def tail(self) -> int:
        return self.oriented_corners[-1][1]

    @property
    def vertices(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for d in self.diamonds:
            out |= d.vertices
        return out


def find_diamond_strings(g: MultiGraph) -> list[DiamondString]:
    """Maximal diamond strings of g (diamonds are vertex-disjoint in the
    claw-free cubic graphs this is used for; rings yield no strings)."""
    diamonds = find_diamonds(g)
    corner_of = {}
    for i, d in enumerate(diamonds):
        for c in d.corners:
            corner_of[c] = i
    # Diamond adjacency via corner-corner edges.
    links: dict[int, list[tuple[int, int, int]]] = {i: [] for i in range(len(diamonds))}
    for idx, (u, v) in enumerate(g.edges):
        if u in corner_of and v in corner_of and corner_of[u] != corner_of[v]:
            links[corner_of[u]].append((corner_of[v], u, v))
            links[corner_of[v]].append((corner_of[u], v, u))
    used = [False] * len(diamonds)
    strings: list[DiamondString] = []
    for i in range(len(diamonds)):
        if used[i] or len(links[i]) >= 2:
            continue
        # start of a maximal path (0 or 1 linked neighbors)
        chain = [i]
        used[i] = True
        cur = i
        while True:
            ext = [
                (j, mine, theirs)
                for (j, mine, theirs) in links[cur]
                if not used[j]
            ]
            if not ext:
                break
            j, mine, theirs = ext[0]
            chain.append(j)
            used[j] = True
            cur = j
        # orient corners along the chain
        oriented: list[tuple[int, int]] = []
        for pos, di in enumerate(chain):
            d = diamonds[di]
            c1, c2 = d.corners
            if pos + 1 < len(chain):
                nxt = diamonds[chain[pos + 1]]
                # the corner adjacent to the next diamond faces the tail
                if any(
                    corner_of.get(g.other_end(e, c1)) == chain[pos + 1]
                    for e in g.incident_edges(c1)
                    if g.other_end(e, c1) in corner_of
                ):
                    oriented.append((c2, c1))
                else:
                    oriented.append((c1, c2))
            elif pos > 0:
                prv = chain[pos - 1]
                if any(
                    corner_of.get(g.other_end(e, c1)) == prv
                    for e in g.incident_edges(c1)
                    if g.other_end(e, c1) in corner_of
                ):
                    oriented.append((c1, c2))
                else:
                    oriented.append((c2, c1))
            else:
                oriented.append((c1, c2))
        strings.append(
            DiamondString(tuple(diamonds[d] for d in chain), tuple(oriented))
        )
    return strings


def ring_of_diamonds(k: int) -> MultiGraph:
    """The ring of k >= 2 diamonds: 4k vertices, 6k edges, claw-free cubic.

    Diamond i occupies vertices 4i (head corner), 4i+1 (tail corner), 4i+2 and
    4i+3 (mids); connectors join tail i to head i+1 (mod k).
    """
    if k < 2:
        raise BadK("a ring of diamonds needs at least 2 diamonds")
    edges: list[tuple[int, int]] = []
    for i in range(k):
        h, t, m1, m2 = 4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3
        edges.extend([(h, m1), (h, m2), (m1, m2), (t, m1), (t, m2)])
    for i in range(k):
        edges.append((4 * i + 1, 4 * ((i + 1) % k)))
    return build_graph(4 * k, edges)


def replace_edge_with_diamond_string(
    g: MultiGraph, e: int, k: int
) -> tuple[MultiGraph, EdgeCorrespondence]:
    """Replace edge e by a string of k >= 1 diamonds.

    The edge (u, v) is removed; new vertices are appended in diamond order
    (head corner, tail corner, mid, mid per diamond); u attaches to the head
    of the first diamond and v to the tail of the last.  Surviving original
    edges keep their relative order and come first.
    """
    if k < 1:
        raise BadK("string length must be at least 1")
    u, v = g.endpoints(e)
    if u == v:
        raise BadIndex("cannot replace a loop with a diamond string")
    base = g.vertex_count
    new_edges: list[tuple[int, int]] = []
    mapping: list[tuple[int, int]] = []
    for idx, pair in enumerate(g.edges):
        if idx == e:
            continue
        mapping.append((idx, len(new_edges)))
        new_edges.append(pair)
    for i in range(k):
        h, t, m1, m2 = (base + 4 * i + j for j in range(4))
        new_edges.extend([(h, m1), (h, m2), (m1, m2), (t, m1), (t, m2)])
    new_edges.append((u, base))  # u -- head of first diamond
    for i in range(k - 1):
        new_edges.append((base + 4 * i + 1, base + 4 * (i + 1)))
    new_edges.append((min(v, base + 4 * (k - 1) + 1), max(v, base + 4 * (k - 1) + 1)))
    out = build_graph(base + 4 * k, new_edges)
    return out, EdgeCorrespondence(g, out, tuple(mapping))
