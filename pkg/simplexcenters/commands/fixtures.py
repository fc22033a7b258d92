import typer

from simplexcenters.config.settings import get_settings
from simplexcenters.services.fixture_manager import FixtureManager
from simplexcenters.services.simplex_io import dump_simplex
from simplexcenters.utils.decorators import handle_command_errors

app = typer.Typer(help="Named simplex fixtures.")


def get_fixture_manager() -> FixtureManager:
    return FixtureManager(get_settings().fixtures_dir)


@app.command("list")
@handle_command_errors("fixtures list")
def list_fixtures():
    """Print the available fixture names."""
    for name in get_fixture_manager().list_available_fixtures():
        typer.echo(name)


@app.command("show")
@handle_command_errors("fixtures show")
def show_fixture(
    name: str = typer.Argument(..., help="Fixture name, e.g. reg4 or REG(4)"),
    vertices: bool = typer.Option(
        False, "--vertices", help="Print the embedded vertex form instead of the stored JSON"
    ),
):
    """Print one fixture."""
    manager = get_fixture_manager()
    if vertices:
        typer.echo(dump_simplex(manager.get_fixture(name)))
    else:
        typer.echo(manager.get_fixture_text(name).strip())
