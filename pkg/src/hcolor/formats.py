"""Text formats for cubic multigraphs.

Two formats are supported.  graph6 is the usual one-line ASCII encoding
for simple graphs on at most 62 vertices; it cannot carry parallel edges
or loops.  The .mg format is a plain edge list: a header line "n m"
followed by m lines "u v" (0-based endpoints), where repeated lines mean
parallel edges and "u u" means a loop (rejected unless the pseudo flag is
set).  Edge indices follow line order, so emit and parse are mutually
inverse on edge lists.

Corpus files hold one entry per blank-line-separated block; a block is
either a single graph6 line or an .mg block.
"""

from __future__ import annotations

from .errors import MalformedInput
from .multigraph import MultiGraph, build_graph

GRAPH6_MAX_VERTICES = 62


def parse_graph6(line: str) -> MultiGraph:
    """Decode one graph6 line into a cubic graph.

    Only the single-byte order form (n <= 62) is accepted.  sparse6 and
    digraph6 prefixes are rejected; those formats exist precisely because
    graph6 cannot encode parallel edges or directions.
    """
    text = line.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise MalformedInput("empty graph6 line")
    if text[0] in ":;":
        raise MalformedInput("sparse6 input: graph6 cannot encode parallel edges")
    if text[0] == "&":
        raise MalformedInput("digraph6 input is not supported")
    values = []
    for ch in text:
        code = ord(ch) - 63
        if not 0 <= code <= 63:
            raise MalformedInput(f"byte {ch!r} outside the graph6 alphabet")
        values.append(code)
    n = values[0]
    if n == 63:
        raise MalformedInput(f"more than {GRAPH6_MAX_VERTICES} vertices")
    pair_count = n * (n - 1) // 2
    need = (pair_count + 5) // 6
    if len(values) - 1 != need:
        raise MalformedInput(
            f"expected {need} data bytes for {n} vertices, got {len(values) - 1}"
        )
    bits = []
    for code in values[1:]:
        for shift in range(5, -1, -1):
            bits.append((code >> shift) & 1)
    if any(bits[pair_count:]):
        raise MalformedInput("nonzero padding bits")
    edges = []
    k = 0
    # column-major upper triangle: pair (i, j) for j = 1..n-1, i = 0..j-1
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


def parse_mg(text: str, pseudo: bool = False) -> MultiGraph:
    """Parse an .mg block; loops need pseudo=True."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MalformedInput("empty .mg text")
    header = lines[0].split()
    if len(header) != 2:
        raise MalformedInput(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise MalformedInput(f"header must be two integers, got {lines[0]!r}")
    if len(lines) - 1 != m:
        raise MalformedInput(f"expected {m} edge lines, got {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise MalformedInput(f"edge line must be 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedInput(f"edge line must be two integers, got {ln!r}")
        edges.append((u, v))
    return build_graph(n, edges, allow_loops=pseudo)


def emit_mg(g: MultiGraph) -> str:
    """Render g in .mg form; parse_mg(emit_mg(g)) reproduces the edge list."""
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def _parse_block(block: str, pseudo: bool) -> MultiGraph:
    lines = [ln for ln in block.splitlines() if ln.strip()]
    if len(lines) == 1 and len(lines[0].split()) == 1:
        return parse_graph6(lines[0])
    return parse_mg(block, pseudo=pseudo)


def parse_corpus(text: str, pseudo: bool = False) -> list[MultiGraph]:
    """Parse a corpus file: blank-line-separated graph6 lines or .mg blocks."""
    out = []
    block: list[str] = []
    for raw in text.splitlines() + [""]:
        if raw.strip():
            block.append(raw)
            continue
        if block:
            out.append(_parse_block("\n".join(block), pseudo))
            block = []
    if not out:
        raise MalformedInput("corpus has no entries")
    return out


def emit_corpus(graphs) -> str:
    """Render graphs as an .mg corpus file."""
    return "\n".join(emit_mg(g) for g in graphs)
