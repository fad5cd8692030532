"""``lowdegst`` command line: solve, verify, dfs, gen, oracle, bench.

Exit codes: 0 success, 1 verification failure, 2 unreadable or malformed
input, 3 input violates a precondition (e.g. has a bridge), 4 internal
invariant failure.
"""

from __future__ import annotations

import sys

import click

from .builder import (
    BuildError,
    InvariantError,
    TreeFormatError,
    format_tree,
    low_degree_spanning_tree,
    parse_tree,
)
from .edge_dfs import EdgeDfsError, compute_edge_dfs, format_edge_dfs
from .generators import FAMILIES, GenSpec, gen_family
from .graph import Graph, GraphFormatError, parse_graph, serialize_graph
from .verify import InvalidTree, NotTwoEdgeConnected, check_degree_bound, validate_spanning_tree

EXIT_VERIFY_FAILED = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_INVARIANT = 4

DEFAULT_BENCH_SIZES = ",".join(str(1 << k) for k in range(17, 23))


def _die(code: int, message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _load_graph(path: str) -> Graph:
    try:
        with click.open_file(path, encoding="ascii") as fh:
            return parse_graph(fh.read())
    except (OSError, UnicodeDecodeError) as exc:
        _die(EXIT_PARSE, f"cannot read {path}: {exc}")
    except GraphFormatError as exc:
        _die(EXIT_PARSE, f"{path}: {exc}")


def _write(path: str, text: str):
    with click.open_file(path, "w", encoding="ascii") as fh:
        fh.write(text)


input_opt = click.option("--input", "-i", "input_path", required=True, help="Graph file ('-' for stdin).")
output_opt = click.option("--output", "-o", "output_path", default="-", show_default=True,
                          help="Output file ('-' for stdout).")


@click.group()
def main():
    """Low-degree spanning trees of 2-edge-connected graphs."""


@main.command()
@input_opt
@output_opt
@click.option("--start", default=0, show_default=True, help="Start vertex of the edge DFS.")
@click.option("--root", default=None, type=int, help="Initial tree vertex (default: --start).")
@click.option("--force", is_flag=True, help="Skip the 2-edge-connectivity test.")
@click.option("--checked", is_flag=True, help="Assert per-step invariants while building.")
def solve(input_path, output_path, start, root, force, checked):
    """Compute a spanning tree meeting deg_T(v) <= ceil(deg_G(v)/2) + 1."""
    g = _load_graph(input_path)
    for name, v in (("start", start), ("root", root)):
        if v is not None and not 0 <= v < max(g.n, 1):
            _die(EXIT_PRECONDITION, f"--{name} {v} out of range for n={g.n}")
    if g.n == 0:
        _die(EXIT_PRECONDITION, "graph has no vertices")
    try:
        tree, report = low_degree_spanning_tree(g, start, root, force=force, checked=checked)
    except NotTwoEdgeConnected as exc:
        _die(EXIT_PRECONDITION, f"not 2-edge-connected: {exc}")
    except EdgeDfsError as exc:
        _die(EXIT_PRECONDITION, str(exc))
    except (BuildError, InvariantError, InvalidTree) as exc:
        _die(EXIT_INVARIANT, str(exc))
    if not report.ok:
        _die(EXIT_INVARIANT, f"degree bound violated (worst slack {report.worst_slack})")
    _write(output_path, format_tree(g, tree))
    click.echo(f"c status: ok n={g.n} m={g.m} worst_slack={report.worst_slack}", err=True)


@main.command()
@input_opt
@click.option("--tree", "-t", "tree_path", required=True, help="Tree file written by 'solve'.")
@output_opt
def verify(input_path, tree_path, output_path):
    """Check a tree file against a graph; print the degree report as CSV."""
    g = _load_graph(input_path)
    try:
        with click.open_file(tree_path, encoding="ascii") as fh:
            tree = parse_tree(fh.read(), g)
    except (OSError, UnicodeDecodeError, TreeFormatError) as exc:
        _die(EXIT_PARSE, f"{tree_path}: {exc}")
    check = validate_spanning_tree(g, tree)
    if not check:
        _die(EXIT_VERIFY_FAILED, f"not a spanning tree: {check.reason}")
    report = check_degree_bound(g, tree)
    _write(output_path, report.to_csv())
    status = "ok" if report.ok else "FAIL"
    click.echo(f"c status: {status} worst_slack={report.worst_slack}", err=True)
    if not report.ok:
        sys.exit(EXIT_VERIFY_FAILED)


@main.command()
@input_opt
@output_opt
@click.option("--start", default=0, show_default=True)
def dfs(input_path, output_path, start):
    """Print the edge DFS as 'l <count>' followed by '<tail> <head> <edge>' lines."""
    g = _load_graph(input_path)
    try:
        L = compute_edge_dfs(g, start)
    except EdgeDfsError as exc:
        _die(EXIT_PRECONDITION, str(exc))
    _write(output_path, format_edge_dfs(L))


@main.command()
@click.option("--family", type=click.Choice(FAMILIES), required=True)
@click.option("--n", type=int, help="Vertices (cycle, complete, random-2ec) or rim size (wheel).")
@click.option("--d", type=int, help="Hypercube dimension.")
@click.option("--lengths", help="Theta path lengths, comma separated.")
@click.option("--extra", type=int, default=0, show_default=True, help="random-2ec chords.")
@click.option("--seed", type=click.IntRange(0, (1 << 64) - 1), default=0, show_default=True)
@output_opt
def gen(family, n, d, lengths, extra, seed, output_path):
    """Generate a graph in the edge-list format."""
    params = {"n": n, "d": d, "extra": extra}
    if lengths:
        params["lengths"] = [int(x) for x in lengths.split(",")]
    params = {k: v for k, v in params.items() if v is not None}
    try:
        g = gen_family(GenSpec(family, params, seed))
    except ValueError as exc:
        raise click.UsageError(str(exc))
    _write(output_path, serialize_graph(g))


@main.group()
def oracle():
    """Brute-force checks on small graphs."""


@oracle.command("sweep")
@click.option("--max-n", type=click.IntRange(0, 6), default=5, show_default=True)
@output_opt
def oracle_sweep(max_n, output_path):
    """Check every 2-edge-connected simple graph on <= MAX_N vertices."""
    from .oracle import VERDICT_HEADER, OracleFailure, exhaustive_small_sweep

    try:
        summary = exhaustive_small_sweep(max_n, keep_verdicts=True)
    except OracleFailure as exc:
        _die(EXIT_INVARIANT, str(exc))
    _write(output_path, "".join(f"{line}\n" for line in
                                [VERDICT_HEADER] + [v.csv() for v in summary.verdicts]))
    per_n = " ".join(f"n{n}={c}" for n, c in summary.graphs_by_n.items())
    click.echo(f"c sweep: graphs={summary.graphs} runs={summary.runs} failures=0 {per_n}", err=True)


@oracle.command("check")
@click.argument("graph_file")
@click.option("--start", default=0, show_default=True)
@output_opt
def oracle_check_cmd(graph_file, start, output_path):
    """Enumerate all spanning trees of GRAPH_FILE and compare with the algorithm."""
    from .oracle import VERDICT_HEADER, OracleFailure, TooLarge, oracle_check

    g = _load_graph(graph_file)
    try:
        verdict = oracle_check(g, start)
    except TooLarge as exc:
        _die(EXIT_PRECONDITION, str(exc))
    except OracleFailure as exc:
        _die(EXIT_INVARIANT, str(exc))
    _write(output_path, f"{VERDICT_HEADER}\n{verdict.csv()}\n")
    if not verdict.two_edge_connected:
        click.echo("c note: graph is not 2-edge-connected; algorithm not run", err=True)


@main.command()
@click.option("--sizes", default=DEFAULT_BENCH_SIZES, show_default=True,
              help="Ascending comma-separated edge-count targets.")
@click.option("--seed", type=click.IntRange(0, (1 << 64) - 1), default=7, show_default=True)
@click.option("--reps", type=click.IntRange(min=1), default=5, show_default=True)
@output_opt
def bench(sizes, seed, reps, output_path):
    """Time edge DFS + tree build on random 2-edge-connected graphs."""
    from .bench import run_bench

    try:
        targets = [int(s) for s in sizes.split(",")]
        result = run_bench(targets, seed, reps)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    _write(output_path, result.to_csv())
    for target, msg in result.errors:
        click.echo(f"c size {target}: {msg}", err=True)
    if result.slope is not None:
        click.echo(f"c slope={result.slope:.4f}", err=True)


if __name__ == "__main__":
    main()
