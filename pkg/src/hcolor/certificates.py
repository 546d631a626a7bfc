"""Self-contained, re-checkable records of search results.

A certificate carries everything needed to re-run the relevant checker
with no other state: the source graph inline in .mg form, the target as
a catalog name or inline .mg, the witness payload, and an echo of the
solver options that produced it.  Serialization is JSON with sorted keys
and no timestamps, so identical inputs yield byte-identical files.

Kinds and payloads:
  hcoloring       payload = edge map as a list of target edge indices
  cover           payload = list of parts, each a sorted edge index list
  normal          payload = color list; k records the color count
  pipeline-trace  payload = final edge map; trace lists the stages taken
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .catalog import catalog, catalog_name
from .covers import CoverList, verify_cover
from .errors import NotProper, SchemaMismatch, VerificationFailed
from .formats import emit_mg, parse_mg
from .hcoloring import EdgeMap, SolverOptions, verify_hcoloring
from .multigraph import MultiGraph
from .normal import NEITHER, NormalColoring, classify_edge

SCHEMA_VERSION = 1
TOOL_VERSION = "0.1.0"

KINDS = ("hcoloring", "cover", "normal", "pipeline-trace")


@dataclass(frozen=True)
class Certificate:
    """One verifiable search result; see module docstring for payloads."""

    kind: str
    source_mg: str
    target_name: str | None
    target_mg: str | None
    payload: tuple
    cover_kind: str | None = None
    k: int | None = None
    options: tuple[tuple[str, object], ...] = ()
    trace: tuple[str, ...] = ()
    schema_version: int = SCHEMA_VERSION
    tool_version: str = TOOL_VERSION

    def __post_init__(self):
        if self.kind not in KINDS:
            raise SchemaMismatch(f"unknown certificate kind {self.kind!r}")
        if self.kind in ("hcoloring", "pipeline-trace"):
            if self.target_name is None and self.target_mg is None:
                raise SchemaMismatch("map certificates need a target")


def _options_echo(opts: SolverOptions | None) -> tuple[tuple[str, object], ...]:
    if opts is None:
        return ()
    return (
        ("bridge_filter", opts.bridge_filter),
        ("node_budget", opts.node_budget),
        ("seed", opts.seed),
        ("symmetry_breaking", opts.symmetry_breaking),
        ("triangle_free_shortcut", opts.triangle_free_shortcut),
    )


def _target_fields(h: MultiGraph) -> tuple[str | None, str | None]:
    name = catalog_name(h)
    if name is not None:
        return name, None
    return None, emit_mg(h)


def certificate_for_map(
    f: EdgeMap, opts: SolverOptions | None = None, trace: tuple[str, ...] = ()
) -> Certificate:
    name, inline = _target_fields(f.target)
    return Certificate(
        kind="pipeline-trace" if trace else "hcoloring",
        source_mg=emit_mg(f.source),
        target_name=name,
        target_mg=inline,
        payload=tuple(f.assignment),
        options=_options_echo(opts),
        trace=trace,
    )


def certificate_for_cover(c: CoverList) -> Certificate:
    return Certificate(
        kind="cover",
        source_mg=emit_mg(c.graph),
        target_name=None,
        target_mg=None,
        payload=tuple(tuple(sorted(part)) for part in c.parts),
        cover_kind=c.kind,
    )


def certificate_for_normal(c: NormalColoring) -> Certificate:
    return Certificate(
        kind="normal",
        source_mg=emit_mg(c.graph),
        target_name=None,
        target_mg=None,
        payload=tuple(c.assignment),
        k=c.k,
    )


def _as_json_dict(c: Certificate) -> dict:
    return {
        "schema_version": c.schema_version,
        "tool_version": c.tool_version,
        "kind": c.kind,
        "source": c.source_mg,
        "target_name": c.target_name,
        "target_mg": c.target_mg,
        "payload": [list(p) if isinstance(p, tuple) else p for p in c.payload],
        "cover_kind": c.cover_kind,
        "k": c.k,
        "options": {key: value for key, value in c.options},
        "trace": list(c.trace),
    }


def serialize_certificate(c: Certificate) -> str:
    return json.dumps(_as_json_dict(c), sort_keys=True, indent=2) + "\n"


def write_certificate(c: Certificate, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(serialize_certificate(c))


def _field(data: dict, key: str, kinds) -> object:
    if key not in data:
        raise SchemaMismatch(f"missing field {key!r}")
    value = data[key]
    if not isinstance(value, kinds):
        raise SchemaMismatch(f"field {key!r} has the wrong type")
    return value


def deserialize_certificate(text: str) -> Certificate:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaMismatch(f"not JSON: {exc}")
    if not isinstance(data, dict):
        raise SchemaMismatch("certificate must be a JSON object")
    version = _field(data, "schema_version", int)
    if version != SCHEMA_VERSION:
        raise SchemaMismatch(f"schema version {version} is not supported")
    kind = _field(data, "kind", str)
    payload = _field(data, "payload", list)
    if kind == "cover":
        if not all(isinstance(p, list) and all(isinstance(e, int) for e in p)
                   for p in payload):
            raise SchemaMismatch("cover payload must be lists of integers")
        frozen = tuple(tuple(p) for p in payload)
    else:
        if not all(isinstance(e, int) for e in payload):
            raise SchemaMismatch("payload must be a list of integers")
        frozen = tuple(payload)
    options = data.get("options") or {}
    if not isinstance(options, dict):
        raise SchemaMismatch("options must be an object")
    trace = data.get("trace") or []
    if not isinstance(trace, list) or not all(isinstance(s, str) for s in trace):
        raise SchemaMismatch("trace must be a list of strings")
    for key, kinds in (
        ("target_name", str),
        ("target_mg", str),
        ("cover_kind", str),
        ("k", int),
    ):
        if data.get(key) is not None and not isinstance(data[key], kinds):
            raise SchemaMismatch(f"field {key!r} has the wrong type")
    return Certificate(
        kind=kind,
        source_mg=_field(data, "source", str),
        target_name=data.get("target_name"),
        target_mg=data.get("target_mg"),
        payload=frozen,
        cover_kind=data.get("cover_kind"),
        k=data.get("k"),
        options=tuple(sorted(options.items())),
        trace=tuple(trace),
        schema_version=version,
        tool_version=str(data.get("tool_version", "")),
    )


def _resolve_target(c: Certificate) -> MultiGraph:
    if c.target_name is not None:
        return catalog(c.target_name)
    if c.target_mg is None:
        raise SchemaMismatch("certificate has no target")
    return parse_mg(c.target_mg, pseudo=True)


def verify_certificate(c: Certificate) -> None:
    """Re-run the checker the certificate claims to have passed.

    Raises VerificationFailed with the failing detail; returns None on
    success.  Verification rebuilds everything from the certificate text
    alone, so a passing certificate is trustworthy in isolation.
    """
    g = parse_mg(c.source_mg, pseudo=True)
    if c.kind in ("hcoloring", "pipeline-trace"):
        h = _resolve_target(c)
        if len(c.payload) != g.edge_count:
            raise VerificationFailed(
                f"map length {len(c.payload)} != edge count {g.edge_count}"
            )
        if any(not 0 <= d < h.edge_count for d in c.payload):
            raise VerificationFailed("map entry out of range")
        report = verify_hcoloring(g, h, c.payload)
        if not report:
            raise VerificationFailed(
                f"not an H-coloring: vertex {report.failing_vertex} fails"
            )
        return
    if c.kind == "cover":
        if c.cover_kind is None:
            raise SchemaMismatch("cover certificate without cover_kind")
        parts = tuple(frozenset(p) for p in c.payload)
        if any(not 0 <= e < g.edge_count for p in parts for e in p):
            raise VerificationFailed("cover entry out of range")
        if not verify_cover(CoverList(g, c.cover_kind, parts)):
            raise VerificationFailed(f"not a valid {c.cover_kind} cover")
        return
    if c.k is None or c.k < 3:
        raise SchemaMismatch("normal certificate needs k >= 3")
    if len(c.payload) != g.edge_count:
        raise VerificationFailed(
            f"color list length {len(c.payload)} != edge count {g.edge_count}"
        )
    if any(not 0 <= col < c.k for col in c.payload):
        raise VerificationFailed("color out of range")
    colors = dict(enumerate(c.payload))
    for e in range(g.edge_count):
        try:
            verdict = classify_edge(g, colors, e)
        except NotProper as exc:
            raise VerificationFailed(f"coloring is not proper: {exc}")
        if verdict == NEITHER:
            raise VerificationFailed(f"edge {e} is neither poor nor rich")


def read_and_verify_certificate(path) -> Certificate:
    """Load, check schema, and re-verify; the certificate is returned on success."""
    with open(path, "r", encoding="ascii") as fh:
        c = deserialize_certificate(fh.read())
    verify_certificate(c)
    return c
