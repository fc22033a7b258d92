import asyncio
import json
from typing import List, Optional

import typer
from rich.table import Table

from simplexcenters.commands.common import OutputFormat, get_state, stderr_console
from simplexcenters.config.settings import get_settings
from simplexcenters.models.verification import VerificationRun
from simplexcenters.services.verification_service import VerificationService
from simplexcenters.utils.decorators import handle_command_errors

app = typer.Typer()


def _summary(runs: List[VerificationRun]) -> Table:
    table = Table(title="Verification")
    table.add_column("theorem")
    table.add_column("samples", justify="right")
    table.add_column("checks", justify="right")
    table.add_column("verdict")
    for run in runs:
        passed = sum(check.passed for check in run.details)
        table.add_row(
            run.theorem_id,
            str(run.samples),
            f"{passed}/{len(run.details)}",
            "[green]pass[/green]" if run.verdict == "pass" else "[red]FAIL[/red]",
        )
    return table


@app.command()
@handle_command_errors("verify")
def verify(
    ctx: typer.Context,
    theorem_ids: List[str] = typer.Argument(..., help="Theorem ids such as T2.1 L4.5, or 'all'"),
    seed: int = typer.Option(0, help="Seed of the suite generator"),
    samples: Optional[int] = typer.Option(None, min=1, help="Override the registry sample count"),
    parallel: bool = typer.Option(False, "--parallel", help="Run suites on worker threads"),
    output_format: OutputFormat = typer.Option(OutputFormat.json, "--format", help="json or jsonl"),
):
    """Run theorem suites; exits 0 only when every suite passes."""
    state = get_state(ctx)
    service = VerificationService(get_settings(), state.tolerance)
    runs = asyncio.run(service.verify_many(theorem_ids, seed, samples, parallel))

    if output_format == OutputFormat.jsonl:
        for run in runs:
            typer.echo(run.model_dump_json())
    elif len(runs) == 1:
        typer.echo(runs[0].model_dump_json(indent=2))
    else:
        typer.echo(json.dumps([run.model_dump(mode="json") for run in runs], indent=2))

    if not state.quiet:
        stderr_console.print(_summary(runs))
    if any(run.verdict == "fail" for run in runs):
        raise typer.Exit(code=1)
