"""Command-line surface.

Every subcommand that reports a found witness or a held property also
emits a certificate that read_and_verify_certificate accepts, so shell
pipelines can re-check results independently.

Exit codes: 0 = property holds or witness found; 1 = refuted or no
witness, exhaustively; 2 = a node budget stopped a search early;
3 = input error.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .catalog import CATALOG_NAMES, catalog
from .certificates import (
    certificate_for_cover,
    certificate_for_map,
    certificate_for_normal,
    read_and_verify_certificate,
    serialize_certificate,
    write_certificate,
)
from .conjectures import (
    CONJECTURES,
    RIGIDITY_TARGETS,
    ScanReport,
    conjecture_scan,
    rigidity_scan,
)
from .covers import (
    CoverList,
    chromatic_index_cubic,
    find_berge_fulkerson,
    find_even_cover_5_2,
    find_parity_cover_4,
    pm_cover_number,
)
from .errors import BudgetExceeded, HcolorError, VerificationFailed
from .formats import emit_mg, parse_corpus, parse_graph6, parse_mg
from .hcoloring import EdgeMap, SolverOptions, construct_prop10b, solve_hcoloring
from .multigraph import MultiGraph
from .normal import normal_chromatic_index, solve_normal
from .preservation import run_preservation_suite
from .transform import expand_vertices_to_triangles, ring_of_diamonds

OK, REFUTED, EXHAUSTED, BAD_INPUT = 0, 1, 2, 3


def _fail(message: str, code: int = BAD_INPUT):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _load_graph(value: str) -> MultiGraph:
    """A catalog name, a graph6 line file, or an .mg file."""
    if value in CATALOG_NAMES:
        return catalog(value)
    path = Path(value)
    if not path.exists():
        _fail(f"{value!r} is neither a catalog name nor a file")
    text = path.read_text(encoding="ascii")
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) == 1 and len(lines[0].split()) == 1:
        return parse_graph6(lines[0])
    return parse_mg(text, pseudo=True)


def _guard(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except BudgetExceeded as exc:
        click.echo(f"budget exhausted: {exc}", err=True)
        sys.exit(EXHAUSTED)
    except HcolorError as exc:
        _fail(str(exc))


@click.group()
def main():
    """Exact H-colorings and cover structures for cubic multigraphs."""


@main.command()
@click.option("--graph", "graph_spec", required=True, help="source: file or name")
@click.option("--target", "target_spec", required=True, help="target: file or name")
@click.option("--budget", type=int, default=None, help="search node budget")
@click.option("--seed", type=int, default=None, help="value-order shuffle seed")
@click.option("--out", "out_path", required=True, help="certificate file to write")
def solve(graph_spec, target_spec, budget, seed, out_path):
    """Find an H-coloring of --graph into --target."""
    g = _guard(_load_graph, graph_spec)
    h = _guard(_load_graph, target_spec)
    opts = SolverOptions(node_budget=budget, seed=seed)
    f = _guard(solve_hcoloring, g, h, opts)
    if f is None:
        click.echo("no coloring (exhaustive)")
        sys.exit(REFUTED)
    write_certificate(certificate_for_map(f, opts), out_path)
    click.echo(f"coloring found; certificate written to {out_path}")


@main.command()
@click.option("--cert", "cert_path", required=True, help="certificate to re-check")
def verify(cert_path):
    """Re-verify a certificate from its own contents alone."""
    try:
        c = read_and_verify_certificate(cert_path)
    except VerificationFailed as exc:
        click.echo(f"verification failed: {exc}", err=True)
        sys.exit(REFUTED)
    except (HcolorError, OSError) as exc:
        _fail(str(exc))
    click.echo(f"certificate ok: {c.kind}")


@main.command()
@click.option("--graph", "graph_spec", required=True)
@click.option("--out", "out_path", default=None, help="certificate for chi' = 3")
def chi(graph_spec, out_path):
    """Chromatic index; exit 0 exactly when three colors suffice."""
    g = _guard(_load_graph, graph_spec)
    index, colors = _guard(chromatic_index_cubic, g)
    click.echo(f"chromatic index {index}")
    if index != 3:
        sys.exit(REFUTED)
    parts = tuple(
        frozenset(e for e in range(g.edge_count) if colors[e] == c) for c in range(3)
    )
    cert = certificate_for_cover(CoverList(g, "PMCover", parts))
    write_certificate(cert, out_path or "chi.cert.json")
    click.echo(f"certificate written to {out_path or 'chi.cert.json'}")


@main.command()
@click.option("--graph", "graph_spec", required=True)
@click.option("--max", "k_max", type=int, required=True, help="largest cover size tried")
@click.option("--out", "out_path", default=None)
def kcover(graph_spec, k_max, out_path):
    """Least number of perfect matchings covering every edge, up to --max."""
    g = _guard(_load_graph, graph_spec)
    found = _guard(pm_cover_number, g, k_max)
    if found is None:
        click.echo(f"no cover by at most {k_max} perfect matchings (exhaustive)")
        sys.exit(REFUTED)
    k, cover = found
    write_certificate(certificate_for_cover(cover), out_path or "kcover.cert.json")
    click.echo(f"cover number {k}; certificate written to "
               f"{out_path or 'kcover.cert.json'}")


@main.command()
@click.option("--graph", "graph_spec", required=True)
@click.option("--out", "out_path", default=None)
def normal(graph_spec, out_path):
    """Normal chromatic index, searched through seven colors."""
    g = _guard(_load_graph, graph_spec)
    index = _guard(normal_chromatic_index, g)
    if index is None:
        click.echo("no normal coloring with up to 7 colors (exhaustive)")
        sys.exit(REFUTED)
    coloring = solve_normal(g, index)
    write_certificate(certificate_for_normal(coloring),
                      out_path or "normal.cert.json")
    click.echo(f"normal chromatic index {index}; certificate written to "
               f"{out_path or 'normal.cert.json'}")


@main.command()
@click.option("--graph", "graph_spec", required=True)
@click.option("--kind", type=click.Choice(["bf", "even52", "parity4"]), required=True)
@click.option("--out", "out_path", default=None)
def covers(graph_spec, kind, out_path):
    """Search one cover structure: bf, even52, or parity4."""
    g = _guard(_load_graph, graph_spec)
    search = {
        "bf": find_berge_fulkerson,
        "even52": find_even_cover_5_2,
        "parity4": find_parity_cover_4,
    }[kind]
    cover = _guard(search, g)
    if cover is None:
        click.echo(f"no {kind} cover (exhaustive)")
        sys.exit(REFUTED)
    write_certificate(certificate_for_cover(cover), out_path or f"{kind}.cert.json")
    click.echo(f"{kind} cover found; certificate written to "
               f"{out_path or f'{kind}.cert.json'}")


@main.command()
@click.option("--name", "name", default=None, help="catalog graph to print")
@click.option("--expand", "expand_spec", default=None, help="graph to expand")
@click.option("--vertices", "vertices", default=None,
              help="comma-separated vertex list for --expand (default: all)")
@click.option("--prop10b", "prop10b_spec", default=None,
              help="3-edge-colorable graph to blow up")
@click.option("--ring", "ring_k", type=int, default=None, help="ring of K diamonds")
@click.option("--out", "out_path", default=None,
              help="certificate file for --prop10b")
def construct(name, expand_spec, vertices, prop10b_spec, ring_k, out_path):
    """Build a graph and print it in .mg form."""
    picked = [x for x in (name, expand_spec, prop10b_spec, ring_k) if x is not None]
    if len(picked) != 1:
        _fail("pick exactly one of --name, --expand, --prop10b, --ring")
    if name is not None:
        g = _guard(catalog, name)
    elif expand_spec is not None:
        base = _guard(_load_graph, expand_spec)
        if vertices is None:
            chosen = set(range(base.vertex_count))
        else:
            try:
                chosen = {int(tok) for tok in vertices.split(",") if tok.strip()}
            except ValueError:
                _fail(f"--vertices must be integers, got {vertices!r}")
        g, _ = _guard(expand_vertices_to_triangles, base, chosen)
    elif ring_k is not None:
        g = _guard(ring_of_diamonds, ring_k)
    else:
        base = _guard(_load_graph, prop10b_spec)
        g, f = _guard(construct_prop10b, base)
        if out_path is not None:
            write_certificate(
                certificate_for_map(f, trace=("prop10b",)), out_path
            )
    click.echo(emit_mg(g), nl=False)


def _report_dict(report: ScanReport) -> dict:
    return {
        "corpus": report.corpus,
        "counterexamples": list(report.counterexamples),
        "budget_exhausted": list(report.budget_exhausted),
        "total_seconds": report.total_seconds,
        "halted_at": report.halted_at,
        "verdicts": [
            {
                "index": v.index,
                "outcome": v.outcome,
                "detail": v.detail,
                "seconds": v.seconds,
                "certificate": (
                    None
                    if v.certificate is None
                    else json.loads(serialize_certificate(v.certificate))
                ),
            }
            for v in report.verdicts
        ],
    }


@main.command()
@click.option("--mode", type=click.Choice(["rigidity", "conjecture"]), required=True)
@click.option("--target", "target", required=True,
              help="catalog name (rigidity) or conjecture name")
@click.option("--corpus", "corpus_path", required=True, help="corpus file")
@click.option("--report", "report_path", required=True, help="report JSON to write")
@click.option("--resume", "offset", type=int, default=0, help="absolute start index")
def scan(mode, target, corpus_path, report_path, offset):
    """Scan a corpus; exit 1 on a counterexample, 2 on budget exhaustion."""
    path = Path(corpus_path)
    if not path.exists():
        _fail(f"corpus file {corpus_path!r} not found")
    graphs = _guard(parse_corpus, path.read_text(encoding="ascii"), True)
    if mode == "rigidity":
        if target not in RIGIDITY_TARGETS:
            _fail(f"rigidity target must be one of {sorted(RIGIDITY_TARGETS)}")
        report = _guard(rigidity_scan, catalog(target), graphs, offset=offset,
                        descriptor=f"{corpus_path}[{offset}:]")
    else:
        if target not in CONJECTURES:
            _fail(f"conjecture must be one of {sorted(CONJECTURES)}")
        report = _guard(conjecture_scan, target, graphs, offset=offset,
                        descriptor=f"{corpus_path}[{offset}:]")
    with open(report_path, "w", encoding="ascii") as fh:
        json.dump(_report_dict(report), fh, sort_keys=True, indent=2)
        fh.write("\n")
    positives = len(report.positives())
    click.echo(
        f"scanned {len(report.verdicts)} graphs: {positives} positive, "
        f"{len(report.counterexamples)} counterexamples, "
        f"{len(report.budget_exhausted)} budget-exhausted; report in {report_path}"
    )
    if report.counterexamples:
        sys.exit(REFUTED)
    if report.budget_exhausted:
        sys.exit(EXHAUSTED)


@main.command()
@click.option("--cert", "cert_path", required=True)
def invariants(cert_path):
    """Run every pullback law against a map certificate."""
    try:
        c = read_and_verify_certificate(cert_path)
    except VerificationFailed as exc:
        click.echo(f"verification failed: {exc}", err=True)
        sys.exit(REFUTED)
    except (HcolorError, OSError) as exc:
        _fail(str(exc))
    if c.kind not in ("hcoloring", "pipeline-trace"):
        _fail(f"{c.kind} certificates carry no map to test")
    g = parse_mg(c.source_mg, pseudo=True)
    h = catalog(c.target_name) if c.target_name else parse_mg(c.target_mg, pseudo=True)
    suite = _guard(run_preservation_suite, EdgeMap(g, h, c.payload))
    for check, passed in suite.checks:
        click.echo(f"{check}: {'pass' if passed else 'FAIL'}")
    if not suite.ok:
        sys.exit(REFUTED)


if __name__ == "__main__":
    main()
