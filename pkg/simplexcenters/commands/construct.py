from typing import Optional

import typer
from rich.table import Table

from simplexcenters.commands.common import get_state, stderr_console
from simplexcenters.config.settings import get_settings
from simplexcenters.models.constructions import ConstructionResult
from simplexcenters.services.construction_service import ConstructionService
from simplexcenters.services.simplex_io import dump_simplex
from simplexcenters.utils.decorators import handle_command_errors

app = typer.Typer()


def _summary(result: ConstructionResult) -> Table:
    table = Table(title=f"{result.name}: {result.description}")
    table.add_column("check")
    table.add_column("value", justify="right")
    table.add_column("threshold", justify="right")
    table.add_column("result")
    for check in result.checks:
        table.add_row(
            check.name,
            "" if check.value is None else f"{check.value:.3e}",
            "" if check.threshold is None else f"{check.threshold:.1e}",
            "[green]pass[/green]" if check.passed else "[red]FAIL[/red]",
        )
    return table


@app.command()
@handle_command_errors("construct")
def construct(
    ctx: typer.Context,
    name: str = typer.Argument(..., help="Registry name, e.g. thm4.1 or equifacetal"),
    x: Optional[float] = typer.Option(None, help="Gram recipe parameter"),
    d: Optional[int] = typer.Option(None, help="Dimension"),
    r: Optional[int] = typer.Option(None, help="Leading block size"),
    t: Optional[float] = typer.Option(None, help="Fold length BD"),
    a: Optional[float] = typer.Option(None, help="Triangle side a"),
    b: Optional[float] = typer.Option(None, help="Triangle side b"),
    c: Optional[float] = typer.Option(None, help="Triangle side c"),
    branch: Optional[str] = typer.Option(None, help="Apex-edge branch, '+' or '-'"),
    h_squared_scale: Optional[float] = typer.Option(None, help="Scale of the apex edge squared"),
    full: bool = typer.Option(False, "--full", help="Print parameters and checks with the simplex"),
):
    """Build a named example simplex and post-verify it.

    The simplex goes to stdout; the check summary goes to stderr. Exits 1
    when a post-verification check fails.
    """
    state = get_state(ctx)
    overrides = {
        key: value
        for key, value in {
            "x": x,
            "d": d,
            "r": r,
            "t": t,
            "a": a,
            "b": b,
            "c": c,
            "branch": branch,
            "h_squared_scale": h_squared_scale,
        }.items()
        if value is not None
    }

    service = ConstructionService(get_settings(), state.tolerance)
    result = service.build(name, overrides)

    typer.echo(result.model_dump_json(indent=2) if full else dump_simplex(result.simplex))
    if not state.quiet:
        stderr_console.print(_summary(result))
    if not result.passed:
        raise typer.Exit(code=1)
