from enum import Enum
from typing import Optional

import typer
from pydantic import ValidationError

from simplexcenters.commands.common import OutputFormat, get_state
from simplexcenters.models.errors import InvalidInputError
from simplexcenters.models.verification import RandomCorpusSpec
from simplexcenters.services.corpus import iter_corpus
from simplexcenters.services.simplex_io import dump_simplex
from simplexcenters.utils.decorators import handle_command_errors

app = typer.Typer()


class Constraint(str, Enum):
    unit_circumradius = "unit_circumradius"
    centered = "centered"
    acute_base = "acute_base"
    balanced = "balanced"
    equiareal = "equiareal"


@app.command("random")
@handle_command_errors("random")
def random_corpus(
    ctx: typer.Context,
    dimension: int = typer.Option(..., "--dimension", "-d", help="Dimension of every simplex"),
    count: int = typer.Option(10, "--count", "-n", help="Number of simplices"),
    seed: int = typer.Option(0, help="Corpus seed"),
    low: float = typer.Option(-1.0, help="Lower coordinate bound"),
    high: float = typer.Option(1.0, help="Upper coordinate bound"),
    constraint: Optional[Constraint] = typer.Option(None, help="Shape constraint"),
    output_format: OutputFormat = typer.Option(OutputFormat.jsonl, "--format", help="json or jsonl"),
):
    """Emit a deterministic random corpus of simplices."""
    try:
        spec = RandomCorpusSpec(
            dimension=dimension,
            count=count,
            low=low,
            high=high,
            constraint=None if constraint is None else constraint.value,
            seed=seed,
        )
    except ValidationError as e:
        raise InvalidInputError(f"Invalid corpus request: {e.errors()[0]['msg']}")

    corpus = iter_corpus(spec, get_state(ctx).tolerance)
    if output_format == OutputFormat.jsonl:
        for simplex in corpus:
            typer.echo(dump_simplex(simplex))
    else:
        typer.echo("[" + ",\n".join(dump_simplex(simplex) for simplex in corpus) + "]")
