from enum import Enum
from typing import Optional
import logging

import typer

from simplexcenters.commands.common import get_state
from simplexcenters.models.reports import AnalysisReport
from simplexcenters.services.centers import all_centers
from simplexcenters.services.cevians import cevian_feet
from simplexcenters.services.classify import classify
from simplexcenters.services.simplex_io import loads_simplex
from simplexcenters.utils.decorators import handle_command_errors

logger = logging.getLogger(__name__)

app = typer.Typer()


class CevianPoint(str, Enum):
    centroid = "centroid"
    circumcenter = "circumcenter"
    incenter = "incenter"
    fermat_torricelli = "fermat_torricelli"


@app.command()
@handle_command_errors("analyze")
def analyze(
    ctx: typer.Context,
    source: typer.FileText = typer.Argument(
        ..., help="JSON Simplex, Gram or distance-matrix file ('-' for stdin)"
    ),
    cevians: Optional[CevianPoint] = typer.Option(
        None, "--cevians", help="Also report the cevians through this center"
    ),
):
    """Print every center and facial predicate of a simplex as JSON."""
    tol = get_state(ctx).tolerance
    simplex = loads_simplex(source.read(), tol)
    logger.info(f"Analyzing a {simplex.dimension}-simplex")

    centers = all_centers(simplex, tol)
    report = AnalysisReport(centers=centers, classification=classify(simplex, tol))
    if cevians is not None:
        through = getattr(centers, cevians.value)
        report.cevians = cevian_feet(simplex, through, tol)

    typer.echo(report.model_dump_json(indent=2))
