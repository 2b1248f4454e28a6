import typer
from pathlib import Path
from typing import Optional

from pydantic import ValidationError

from src.core.exceptions import (
    IncidenceColoringError,
    NotOuterplanarError,
    NotReducibleError,
)
from src.core.extension import IncidenceSolver
from src.core.incidence import verify_coloring
from src.core.logging import get_logger
from src.main import initialize
from src.oracle import exists_kl_coloring, min_incidence_k
from src.toolkit import suites
from src.toolkit.families import family
from src.toolkit.formats import emit_coloring, emit_graph, read_coloring, read_graph
from src.toolkit.generators import GENERATOR_ID, GeneratorParams, gen_outerplanar

# Get logger for CLI
logger = get_logger("src.cli")

EXIT_INVALID = 1
EXIT_NOT_OUTERPLANAR = 2
EXIT_MALFORMED = 3

# Create Typer app
app = typer.Typer(help="(Δ+2, 2)-incidence coloring of outerplanar graphs")


def exit_code_for(error: Exception) -> int:
    """Exit code for an error raised while handling a command."""
    if isinstance(error, (NotOuterplanarError, NotReducibleError)):
        return EXIT_NOT_OUTERPLANAR
    return EXIT_MALFORMED


def _abort(error: Exception) -> typer.Exit:
    logger.error(f"{error}")
    return typer.Exit(code=exit_code_for(error))


@app.callback()
def main(
    ctx: typer.Context,
    config: Optional[Path] = typer.Option(
        None,
        "--config", "-c",
        help="Path to config.toml file"
    ),
    log_level: Optional[str] = typer.Option(
        None,
        "--log-level",
        help="Override the configured log level"
    )
):
    """Color, verify and generate outerplanar graphs."""
    try:
        config_obj, metrics = initialize(config, log_level)
    except ValueError as e:
        raise _abort(e)
    ctx.obj = {"config": config_obj, "metrics": metrics}
    if metrics:
        ctx.call_on_close(metrics.close)


@app.command()
def color(
    ctx: typer.Context,
    graph_file: Path = typer.Argument(..., help="Graph edge list"),
    trace: bool = typer.Option(False, "--trace", help="Print the reduction trace to stderr")
):
    """Color a graph with Δ+2 colors and print the coloring as JSON."""
    try:
        g = read_graph(graph_file)
        result = IncidenceSolver(metrics=ctx.obj["metrics"]).solve(g)
    except (IncidenceColoringError, OSError) as e:
        raise _abort(e)

    if trace:
        for step in result.trace:
            typer.echo(step.describe(), err=True)
    typer.echo(emit_coloring(g, result.k, result.coloring), nl=False)


@app.command()
def verify(
    ctx: typer.Context,
    graph_file: Path = typer.Argument(..., help="Graph edge list"),
    coloring_file: Path = typer.Argument(..., help="Coloring document"),
    partial: bool = typer.Option(False, "--partial", help="Accept colorings that leave incidences uncolored")
):
    """Check a coloring; exit 0 iff it has no violations."""
    try:
        g = read_graph(graph_file)
        c = read_coloring(coloring_file)
    except (IncidenceColoringError, OSError) as e:
        raise _abort(e)

    report = verify_coloring(g, c, require_total=not partial)
    metrics = ctx.obj["metrics"]
    if metrics:
        for kind, count in report.counts().items():
            metrics.record_violations(kind, count)

    if report.is_valid:
        typer.echo("valid")
        return
    for line in report.describe():
        typer.echo(line)
    raise typer.Exit(code=EXIT_INVALID)


@app.command()
def oracle(
    ctx: typer.Context,
    graph_file: Path = typer.Argument(..., help="Graph edge list"),
    l: int = typer.Option(2, "--l", help="Bound on incoming colors per vertex"),
    unbounded: bool = typer.Option(False, "--unbounded", help="No bound on incoming colors"),
    min_k: bool = typer.Option(False, "--min-k", help="Print the least feasible palette size"),
    k: Optional[int] = typer.Option(None, "--k", help="Decide whether a (k, l)-coloring exists")
):
    """Exact (k, l)-incidence coloring search for small graphs."""
    if min_k == (k is not None):
        logger.error("Pass exactly one of --min-k and --k")
        raise typer.Exit(code=EXIT_MALFORMED)

    limit = ctx.obj["config"].oracle.max_incidences
    bound = None if unbounded else l
    try:
        g = read_graph(graph_file)
        if min_k:
            typer.echo(str(min_incidence_k(g, bound, max_incidences=limit)))
            return
        found = exists_kl_coloring(g, k, bound, max_incidences=limit)
    except (IncidenceColoringError, OSError) as e:
        raise _abort(e)

    if found is None:
        typer.echo(f"no ({k}, {'inf' if bound is None else bound})-incidence coloring")
        raise typer.Exit(code=EXIT_INVALID)
    typer.echo(emit_coloring(g, k, found), nl=False)


@app.command()
def gen(
    ctx: typer.Context,
    family_name: Optional[str] = typer.Option(None, "--family", help="path, cycle, star, fan, complete4 or k23"),
    n: Optional[int] = typer.Option(None, "--n", help="Number of vertices"),
    random_graph: bool = typer.Option(False, "--random", help="Random connected outerplanar graph"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Generator seed"),
    chord_keep: Optional[float] = typer.Option(None, "--chord-keep", help="Probability of keeping each chord"),
    hull_delete: Optional[float] = typer.Option(None, "--hull-delete", help="Probability of deleting each hull edge")
):
    """Print a named or random graph as an edge list."""
    if random_graph == (family_name is not None):
        logger.error("Pass exactly one of --family and --random")
        raise typer.Exit(code=EXIT_MALFORMED)

    defaults = ctx.obj["config"].generator
    try:
        if family_name is not None:
            typer.echo(emit_graph(family(family_name, n)), nl=False)
            return
        params = GeneratorParams(
            n=n if n is not None else 0,
            chord_keep_probability=defaults.chord_keep_probability if chord_keep is None else chord_keep,
            hull_delete_probability=defaults.hull_delete_probability if hull_delete is None else hull_delete,
            seed=defaults.seed if seed is None else seed,
        )
        g = gen_outerplanar(params)
    except (IncidenceColoringError, ValidationError) as e:
        raise _abort(e)

    typer.echo(f"# generator {GENERATOR_ID} seed={params.seed} "
               f"chord_keep={params.chord_keep_probability} hull_delete={params.hull_delete_probability}")
    typer.echo(emit_graph(g), nl=False)


@app.command("enumerate")
def enumerate_graphs(
    ctx: typer.Context,
    n: int = typer.Option(..., "--n", help="Largest number of vertices (2..7)"),
    check: str = typer.Option(..., "--check", help="lemma or theorem")
):
    """Run an exhaustive check over all small connected graphs."""
    runners = {"lemma": suites.run_lemma_check, "theorem": suites.run_theorem_check}
    if check not in runners:
        logger.error(f"Unknown check {check!r}, expected lemma or theorem")
        raise typer.Exit(code=EXIT_MALFORMED)

    try:
        result = runners[check](n, ctx.obj["config"].oracle, metrics=ctx.obj["metrics"])
    except (IncidenceColoringError, OSError) as e:
        raise _abort(e)

    typer.echo(result.summary())
    for failure in result.failures:
        typer.echo(f"  {failure}")
    if not result.passed:
        raise typer.Exit(code=EXIT_INVALID)


@app.command()
def selftest(ctx: typer.Context):
    """Run every acceptance suite at reduced scale."""
    config = ctx.obj["config"]
    try:
        results = suites.run_all(config.selftest(), config.oracle, metrics=ctx.obj["metrics"])
    except IncidenceColoringError as e:
        raise _abort(e)
    for result in results:
        typer.echo(result.summary())
        for failure in result.failures[:5]:
            typer.echo(f"  {failure}")
    if not all(result.passed for result in results):
        raise typer.Exit(code=EXIT_INVALID)


if __name__ == "__main__":
    app()
