from enum import Enum

import typer
from pydantic import BaseModel, ConfigDict
from rich.console import Console

from simplexcenters.config.settings import get_settings
from simplexcenters.models.geometry import Tolerance

# stdout carries JSON only; summaries and errors go here
stderr_console = Console(stderr=True)


class OutputFormat(str, Enum):
    json = "json"
    jsonl = "jsonl"


class CliState(BaseModel):
    """Global options shared by every command"""

    model_config = ConfigDict(frozen=True)

    tolerance: Tolerance
    quiet: bool = False


def get_state(ctx: typer.Context) -> CliState:
    """State set by the root callback, or the configured defaults"""
    if isinstance(ctx.obj, CliState):
        return ctx.obj
    return CliState(tolerance=get_settings().tolerance())
