import logging
import sys
from typing import Optional

import typer
from pydantic import ValidationError

from simplexcenters.commands.analyze import app as analyze_app
from simplexcenters.commands.common import CliState
from simplexcenters.commands.construct import app as construct_app
from simplexcenters.commands.fixtures import app as fixtures_app
from simplexcenters.commands.random_corpus import app as random_app
from simplexcenters.commands.verify import app as verify_app
from simplexcenters.config.settings import get_settings
from simplexcenters.models.geometry import Tolerance

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def create_application() -> typer.Typer:
    # Initialize settings
    settings = get_settings()

    app = typer.Typer(
        name=settings.app_name,
        help=settings.app_description,
        no_args_is_help=True,
        add_completion=False,
    )

    @app.callback()
    def main(
        ctx: typer.Context,
        tol_abs: Optional[float] = typer.Option(
            None, "--tol-abs", min=0.0, help=f"Absolute tolerance [default: {settings.abs_tol}]"
        ),
        tol_rel: Optional[float] = typer.Option(
            None, "--tol-rel", min=0.0, help=f"Relative tolerance [default: {settings.rel_tol}]"
        ),
        quiet: bool = typer.Option(False, "--quiet", "-q", help="Only warnings on stderr"),
    ):
        # Logs go to stderr so stdout stays pure JSON
        logging.basicConfig(
            level=logging.WARNING if quiet else settings.log_level,
            format=LOG_FORMAT,
            stream=sys.stderr,
            force=True,
        )
        try:
            tolerance = Tolerance(
                abs_tol=settings.abs_tol if tol_abs is None else tol_abs,
                rel_tol=settings.rel_tol if tol_rel is None else tol_rel,
            )
        except ValidationError:
            raise typer.BadParameter("tolerances must be positive")
        ctx.obj = CliState(tolerance=tolerance, quiet=quiet)

    # Add commands
    app.add_typer(analyze_app)
    app.add_typer(construct_app)
    app.add_typer(verify_app)
    app.add_typer(random_app)
    app.add_typer(fixtures_app, name="fixtures")

    return app


app = create_application()
