"""siltlab CLI: thin wrapper around the enumeration engine and the Schur layer.

The Explorer lives in siltlab.silting.explorer; this module adds:
- Click command groups for catalog, enumeration, verification and Schur
- Rich progress on stderr
- Signal handling for graceful shutdown
- Config-file / environment / flag resolution
"""

import asyncio
import datetime
import json
import signal
from collections.abc import Callable, Iterator
from contextlib import contextmanager
from pathlib import Path

import click
import yaml
from pydantic import ValidationError
from rich.console import Console, Group
from rich.live import Live
from rich.progress import Progress, SpinnerColumn, TextColumn
from rich.table import Table

from siltlab._version import __version__
from siltlab.algebra.based import BasedAlgebra
from siltlab.algebra.fileformat import dump_definition, load_algebra
from siltlab.catalog import registry
from siltlab.config import SearchOptions, load_config
from siltlab.errors import SiltlabError
from siltlab.logging import setup_logging
from siltlab.schur.appendix import appendix_rows, format_appendix, format_blocks
from siltlab.schur.cache import CountCache
from siltlab.schur.classify import BlockCounter, classify, schur2_blocks
from siltlab.schur.quiver import schur2_edges, schur_vertices
from siltlab.silting.checkpoint import (
    CHECKPOINT_FILE,
    ExplorerCheckpoint,
    load_checkpoint,
)
from siltlab.silting.explorer import EnumerationResult, Explorer, ProgressCallback
from siltlab.silting.export import (
    atomic_write_text,
    hasse_to_dot,
    orthant_table,
    result_table,
    schur_quiver_to_dot,
    to_json,
    write_table,
)
from siltlab.silting.signs import (
    format_sign,
    sign_decomposition_report,
    verify_tilting_bijection,
)
from siltlab.silting.verify import verify_algebra

_stderr = Console(stderr=True)

LOG_LEVELS = click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False)


@contextmanager
def _cli_errors() -> Iterator[None]:
    """Turn library, validation and I/O errors into a clean exit 1."""
    try:
        yield
    except SiltlabError as exc:
        raise click.ClickException(exc.message) from exc
    except ValidationError as exc:
        raise click.ClickException(f"Invalid input: {exc}") from exc
    except (yaml.YAMLError, json.JSONDecodeError) as exc:
        raise click.ClickException(f"Could not parse file: {exc}") from exc
    except OSError as exc:
        raise click.ClickException(str(exc)) from exc


def _options(ctx: click.Context, **cli_values) -> SearchOptions:
    """Merge the group's file config with this command's flags and set up logging."""
    obj = ctx.find_root().obj or {}
    opts = SearchOptions.from_sources(
        obj.get("file_config", {}),
        log_level=obj.get("log_level"),
        log_file=obj.get("log_file"),
        **cli_values,
    )
    setup_logging(opts.log_level, opts.log_file)
    return opts


def _load_target(algebra: str | None, algebra_file: Path | None, p: int | None):
    if (algebra is None) == (algebra_file is None):
        raise click.UsageError("Give exactly one of --algebra or --algebra-file")
    if algebra_file is not None:
        return load_algebra(algebra_file, p)
    assert algebra is not None
    return registry.get_by_spec(algebra, p)


def algebra_options(func):
    """--algebra / --algebra-file / --p, shared by the algebra commands."""
    func = click.option(
        "--p", "p", type=int, default=None,
        help="Characteristic of the ground field (default: the algebra's own).",
    )(func)
    func = click.option(
        "--algebra-file",
        type=click.Path(exists=True, dir_okay=False, path_type=Path),
        help="Algebra definition file (.json or .yaml).",
    )(func)
    func = click.option(
        "--algebra", "-a",
        help="Catalog algebra as NAME or NAME:m (e.g. D:6).",
    )(func)
    return func


def search_options(func):
    """--budget / --threads, shared by every command that enumerates."""
    func = click.option(
        "--threads", "-t", type=int, default=None,
        help="Worker threads (default: CPU count).",
    )(func)
    func = click.option(
        "--budget", "-b", type=int, default=None,
        help="Stop after this many objects (default: 500000).",
    )(func)
    return func


def _render_progress(explorer: Explorer, progress: Progress, task_id) -> Group:
    stats = explorer.stats
    progress.update(task_id, completed=stats["objects"])
    table = Table(box=None, padding=(0, 2), show_header=True, header_style="bold")
    table.add_column("Objects", style="green", justify="right")
    table.add_column("Mutations", justify="right")
    table.add_column("Hom hits", style="cyan", justify="right")
    table.add_column("Elapsed", justify="right")
    table.add_column("Speed", justify="right")
    table.add_row(
        str(stats["objects"]),
        str(stats["mutations"]),
        str(stats["hom_hits"]),
        str(datetime.timedelta(seconds=int(stats["elapsed"]))),
        f"{stats['objects_per_sec']:.1f} obj/s",
    )
    return Group(progress, table)


def _install_shutdown(explorer: Explorer) -> None:
    def handle_shutdown(signum, frame):
        _stderr.print("Stopping after the current batch...")
        explorer.shutdown()

    signal.signal(signal.SIGINT, handle_shutdown)
    signal.signal(signal.SIGTERM, handle_shutdown)


def _run_explorer(
    build: Callable[[ProgressCallback | None], Explorer], show_progress: bool
) -> EnumerationResult:
    """Build the explorer around a progress callback and run it to the end."""
    if not show_progress:
        explorer = build(None)
        _install_shutdown(explorer)
        return asyncio.run(explorer.run())

    progress = Progress(
        SpinnerColumn(),
        TextColumn("[bold blue]{task.description}"),
        TextColumn("{task.completed} objects"),
        console=_stderr,
    )
    task_id = progress.add_task("Enumerating", total=None)
    with Live(progress, console=_stderr, refresh_per_second=4, transient=True) as live:

        def on_progress(objects: int, pending: int) -> None:
            live.update(_render_progress(explorer, progress, task_id))

        explorer = build(on_progress)
        _install_shutdown(explorer)
        return asyncio.run(explorer.run())


def _text_report(result: EnumerationResult) -> str:
    lines = [
        f"algebra={result.algebra} p={result.p} count={result.count} "
        f"complete={str(result.complete).lower()}"
    ]
    for i, (g, dim) in enumerate(zip(result.g_vectors, result.dimension_vectors)):
        lines.append(f"{i:>6}  g={g}  dim={dim}")
    for a, b in result.hasse:
        lines.append(f"{a} -> {b}")
    return "\n".join(lines) + "\n"


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        click.echo(text, nl=False)
    else:
        atomic_write_text(output, text)
        _stderr.print(f"Wrote {output}")


@click.group()
@click.version_option(version=__version__, prog_name="siltlab")
@click.option(
    "--config", "-C", "config_file",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="Config file path.",
)
@click.option("--log-level", type=LOG_LEVELS, default=None, help="Logging level.")
@click.option("--log-file", default=None, help="Write logs to file.")
@click.pass_context
def cli(ctx, config_file, log_level, log_file):
    """siltlab - two-term silting enumeration and Schur algebra classification."""
    with _cli_errors():
        file_config = load_config(config_file)
    ctx.obj = {
        "file_config": file_config,
        "log_level": log_level,
        "log_file": log_file,
    }


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------


@cli.group()
def catalog():
    """Inspect the named algebras."""


@catalog.command("list")
@click.option("--json", "as_json", is_flag=True, help="Print JSON.")
def catalog_list(as_json: bool) -> None:
    """List catalog algebras."""
    entries = registry.list_entries()
    if as_json:
        click.echo(json.dumps(entries, indent=2))
        return
    click.echo(f"{'ID':<12} {'Params':<8} {'Description'}")
    click.echo("-" * 70)
    for entry in entries:
        click.echo(f"{entry['id']:<12} {entry['params']:<8} {entry['description']}")


@catalog.command("show")
@click.argument("name")
@click.option("--p", "p", type=int, default=None, help="Characteristic.")
@click.option("--json", "as_json", is_flag=True, help="Print the definition file.")
def catalog_show(name: str, p: int | None, as_json: bool) -> None:
    """Show the presentation, dimension and Cartan matrix of NAME[:m].

    \b
    Example:
      siltlab catalog show D:4
    """
    with _cli_errors():
        base, m = registry.parse_name(name)
        entry = registry.get_entry(base)
        defn = registry.definition(base, m, p)
        if as_json:
            click.echo(dump_definition(defn, "json"), nl=False)
            return
        algebra = registry.get(base, p, m)
    click.echo(f"{defn.name or entry.name}: {entry.description}")
    click.echo(f"p={algebra.p} vertices={defn.vertices} dimension={algebra.dimension}")
    click.echo("arrows:")
    for arrow in defn.arrows:
        click.echo(f"  {arrow.name}: {arrow.source} -> {arrow.target}")
    click.echo("relations:")
    for rel in defn.to_relations():
        click.echo(f"  {rel}")
    click.echo("cartan:")
    for row in algebra.cartan_matrix().tolist():
        click.echo("  " + " ".join(str(x) for x in row))
    expected = entry.expected_count(m if m is not None else entry.default_m)
    click.echo(f"expected count: {expected if expected is not None else 'unknown'}")


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


@cli.command("enumerate")
@algebra_options
@search_options
@click.option("--validate", is_flag=True, default=None, help="Re-check every object.")
@click.option(
    "--out", "output_format",
    type=click.Choice(["text", "json", "dot"]), default=None,
    help="Report format (default: text).",
)
@click.option(
    "--output", "-o", type=click.Path(dir_okay=False, path_type=Path),
    help="Write the report here instead of stdout.",
)
@click.option(
    "--table", "table_path", type=click.Path(dir_okay=False, path_type=Path),
    help="Also write one row per object (.csv or .parquet).",
)
@click.option("--with-complexes", is_flag=True, help="Include summand complexes.")
@click.option(
    "--checkpoint", "checkpoint_path",
    type=click.Path(dir_okay=False, path_type=Path), default=None,
    help=f"Checkpoint file (default: {CHECKPOINT_FILE} with --resume).",
)
@click.option("--checkpoint-interval", type=int, default=None, help="Levels per save.")
@click.option("--resume", is_flag=True, help="Resume from the checkpoint.")
@click.option("--no-progress", is_flag=True, help="Disable the progress display.")
@click.pass_context
def enumerate_cmd(
    ctx,
    algebra: str | None,
    algebra_file: Path | None,
    p: int | None,
    budget: int | None,
    threads: int | None,
    validate: bool | None,
    output_format: str | None,
    output: Path | None,
    table_path: Path | None,
    with_complexes: bool,
    checkpoint_path: Path | None,
    checkpoint_interval: int | None,
    resume: bool,
    no_progress: bool,
) -> None:
    """Enumerate two-term silting complexes by left mutation.

    Exits 0 when the enumeration is complete and 2 when the budget ran out.

    \b
    Examples:
      siltlab enumerate --algebra D:3
      siltlab enumerate --algebra example23 --out dot -o hasse.dot
      siltlab enumerate --algebra L5 --checkpoint run.json --resume
    """
    if resume and checkpoint_path is None:
        checkpoint_path = Path(CHECKPOINT_FILE)
    with _cli_errors():
        opts = _options(
            ctx,
            budget=budget,
            threads=threads,
            validate=validate,
            output_format=output_format,
            checkpoint_interval=checkpoint_interval,
            checkpoint_path=checkpoint_path,
        )
        config = opts.to_search_config()
        target = _load_target(algebra, algebra_file, p)

        resume_from: ExplorerCheckpoint | None = None
        if resume:
            assert checkpoint_path is not None
            resume_from = load_checkpoint(checkpoint_path)
            if resume_from is None:
                _stderr.print("No checkpoint found, starting fresh")

        result = _run_explorer(
            lambda callback: Explorer(
                target, config=config, resume_from=resume_from, on_progress=callback
            ),
            show_progress=not no_progress,
        )

        if config.output_format == "json":
            text = to_json(result.to_report(with_complexes), config.indent)
        elif config.output_format == "dot":
            text = hasse_to_dot(result)
        else:
            text = _text_report(result)
        _emit(text, output)
        if table_path is not None:
            write_table(result_table(result), table_path)

    if not result.complete:
        raise SystemExit(2)


@cli.command("sign-decompose")
@algebra_options
@search_options
@click.option("--json", "as_json", is_flag=True, help="Print JSON.")
@click.option(
    "--table", "table_path", type=click.Path(dir_okay=False, path_type=Path),
    help="Also write one row per orthant (.csv or .parquet).",
)
@click.pass_context
def sign_decompose(
    ctx,
    algebra: str | None,
    algebra_file: Path | None,
    p: int | None,
    budget: int | None,
    threads: int | None,
    as_json: bool,
    table_path: Path | None,
) -> None:
    """Count objects orthant by orthant and compare with a direct enumeration."""
    with _cli_errors():
        opts = _options(ctx, budget=budget, threads=threads)
        config = opts.to_search_config()
        target = _load_target(algebra, algebra_file, p)
        report = sign_decomposition_report(target, config.budget, config.threads)
        if as_json:
            click.echo(to_json(report, config.indent), nl=False)
        else:
            click.echo(f"algebra={report.algebra} p={report.p}")
            for row in report.orthants:
                click.echo(f"  {format_sign(tuple(row.sign))}  {row.count}")
            click.echo(
                f"total={report.total} direct={report.direct} "
                f"complete={str(report.complete).lower()} "
                f"consistent={str(report.consistent).lower()}"
            )
        if table_path is not None:
            write_table(orthant_table(report), table_path)

    if not report.complete:
        raise SystemExit(2)
    if not report.consistent:
        raise click.ClickException("orthant counts disagree with direct enumeration")


@cli.command()
@algebra_options
@search_options
@click.pass_context
def verify(
    ctx,
    algebra: str | None,
    algebra_file: Path | None,
    p: int | None,
    budget: int | None,
    threads: int | None,
) -> None:
    """Run the property checks (silting, injectivity, Hasse, orthants, duality)."""
    with _cli_errors():
        opts = _options(ctx, budget=budget, threads=threads)
        config = opts.to_search_config()
        target: BasedAlgebra = _load_target(algebra, algebra_file, p)
        report = verify_algebra(target, config.budget, config.threads)
    for check in report.checks:
        click.echo(f"{'PASS' if check.passed else 'FAIL'}  {check.name}")
    if not report.complete:
        click.echo(f"incomplete ({report.count} objects)")
        raise SystemExit(2)
    failure = report.first_failure()
    if failure is not None:
        raise click.ClickException(f"{failure.name}: {failure.counterexample}")
    click.echo(f"pass ({report.count} objects)")


@cli.command()
@click.option("--a", "name_a", required=True, help="Catalog algebra A.")
@click.option("--b", "name_b", required=True, help="Mutated algebra B.")
@click.option("--j", "vertices", required=True, help="Vertex set J, e.g. 1,3.")
@click.option("--p", "p", type=int, default=2, show_default=True)
@search_options
@click.pass_context
def bijection(
    ctx,
    name_a: str,
    name_b: str,
    vertices: str,
    p: int,
    budget: int | None,
    threads: int | None,
) -> None:
    """Compare A negative on J with B positive on J."""
    try:
        chosen = [int(v) for v in vertices.split(",") if v.strip()]
    except ValueError as exc:
        msg = f"Expected comma-separated integers: {vertices!r}"
        raise click.BadParameter(msg) from exc
    with _cli_errors():
        opts = _options(ctx, budget=budget, threads=threads)
        config = opts.to_search_config()
        report = verify_tilting_bijection(
            name_a, name_b, chosen, p, config.budget, config.threads
        )
    click.echo(
        f"{report.a}: {report.count_a}  {report.b}: {report.count_b}  "
        f"equal={str(report.equal).lower()}"
    )
    if not report.equal:
        raise SystemExit(1)


# ---------------------------------------------------------------------------
# schur
# ---------------------------------------------------------------------------


@cli.group()
def schur():
    """Tau-tilting finiteness of Schur algebras."""


def counter_options(func):
    func = click.option(
        "--cache-dir", type=click.Path(file_okay=False, path_type=Path), default=None,
        help="Block count cache directory (default: .siltlab_cache).",
    )(func)
    func = click.option(
        "--compute-counts", is_flag=True, default=None,
        help="Enumerate block counts missing from the built-in table.",
    )(func)
    return func


def _block_counter(opts: SearchOptions) -> BlockCounter:
    cache = None
    if opts.compute_counts or opts.cache_dir.exists():
        cache = CountCache(opts.cache_dir)
    return BlockCounter(
        cache=cache,
        compute=opts.compute_counts,
        budget=opts.budget,
        threads=opts.threads,
    )


@schur.command("classify")
@click.option("--p", "p", type=int, required=True)
@click.option("--n", "n", type=int, required=True)
@click.option("--r", "r", type=int, required=True)
@click.option("--json", "as_json", is_flag=True, help="Print JSON.")
@counter_options
@click.pass_context
def schur_classify(ctx, p, n, r, as_json, compute_counts, cache_dir) -> None:
    """Decide whether S(n,r) is tau-tilting finite.

    \b
    Example:
      siltlab schur classify --p 2 --n 2 --r 19
    """
    with _cli_errors():
        opts = _options(ctx, compute_counts=compute_counts, cache_dir=cache_dir)
        verdict = classify(n, r, p, _block_counter(opts))
    if as_json:
        click.echo(to_json(verdict), nl=False)
        return
    click.echo(f"S({n},{r}) p={p}: {'finite' if verdict.finite else 'infinite'}")
    if verdict.basic_algebra is not None:
        click.echo(f"basic algebra: {format_blocks(verdict.basic_algebra)}")
    if verdict.count is not None:
        click.echo(f"count: {verdict.count}")
    click.echo(f"representation type: {verdict.representation_type}")
    if verdict.note:
        click.echo(f"note: {verdict.note}")


@schur.command("quiver")
@click.option("--p", "p", type=int, required=True)
@click.option("--r", "r", type=int, required=True)
@click.option("--dot", "as_dot", is_flag=True, help="Print Graphviz DOT.")
@counter_options
@click.pass_context
def schur_quiver(ctx, p, r, as_dot, compute_counts, cache_dir) -> None:
    """Show the quiver of S(2,r) and its blocks."""
    with _cli_errors():
        opts = _options(ctx, compute_counts=compute_counts, cache_dir=cache_dir)
        report = schur2_blocks(r, p, _block_counter(opts))
        edges = schur2_edges(r, p)
        if as_dot:
            click.echo(
                schur_quiver_to_dot(
                    schur_vertices(r),
                    edges,
                    [b.vertices for b in report.blocks],
                    title=f"S(2,{r}) p={p}",
                ),
                nl=False,
            )
            return
    click.echo(f"S(2,{r}) p={p}: {len(edges)} double arrows")
    for s, t in edges:
        click.echo(f"  v^{s} <-> v^{t}")
    for block in report.blocks:
        count = block.count if block.count is not None else "-"
        square = "  square" if block.has_square else ""
        click.echo(
            f"  block {block.vertices}: {block.morita_class} count={count}{square}"
        )
    total = report.total_count if report.total_count is not None else "-"
    click.echo(f"finite={str(report.total_finite).lower()} count={total}")


@schur.command("report")
@click.option("--p", "p", type=click.Choice(["2", "3"]), required=True)
@click.option("--json", "as_json", is_flag=True, help="Print JSON.")
@click.pass_context
def schur_report(ctx, p: str, as_json: bool) -> None:
    """Table of every tau-tilting finite Schur algebra for p = 2 or 3."""
    with _cli_errors():
        _options(ctx)
        if as_json:
            rows = [row.model_dump(exclude_none=True) for row in appendix_rows(int(p))]
            click.echo(json.dumps(rows, indent=2, ensure_ascii=False))
        else:
            click.echo(format_appendix(int(p)), nl=False)


if __name__ == "__main__":
    cli()
