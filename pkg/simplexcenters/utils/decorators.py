import functools
import logging
from typing import TypeVar, Callable

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape

from simplexcenters.models.errors import InvalidInputError, SimplexError

logger = logging.getLogger(__name__)

T = TypeVar("T")


def handle_errors(operation: str = "Operation"):
    """
    Decorator to handle errors in service calls with consistent logging

    Args:
        operation: Description of the operation being performed
    """

    def decorator(func: Callable[..., T]) -> Callable[..., T]:
        @functools.wraps(func)
        def wrapper(*args, **kwargs) -> T:
            try:
                return func(*args, **kwargs)
            except SimplexError as e:
                # Domain errors already carry their exit code and residual
                logger.error(f"{operation} failed: {e}")
                raise
            except FileNotFoundError as e:
                # Handle missing registries or fixtures
                logger.error(f"{operation} failed - File not found: {str(e)}")
                raise SimplexError(f"{operation} failed: Configuration error ({e})")
            except (ValidationError, ValueError, TypeError) as e:
                # Handle bad parameters
                logger.error(f"{operation} failed - Validation error: {str(e)}")
                raise InvalidInputError(f"{operation} failed: {e}")
            except Exception as e:
                # Handle any other unexpected errors
                logger.error(f"{operation} failed - Unexpected error: {str(e)}")
                raise SimplexError(f"{operation} failed: {str(e)}")

        return wrapper

    return decorator


def handle_verifier_errors(verifier_name: str):
    """
    Specialized decorator for verifier suites

    Args:
        verifier_name: Name of the verifier (e.g., "Tetrahedron", "Cevian")
    """

    def decorator(func: Callable[..., T]) -> Callable[..., T]:
        @functools.wraps(func)
        def wrapper(self, theorem_id: str, *args, **kwargs) -> T:
            try:
                logger.info(f"Starting {verifier_name} suite {theorem_id}")
                result = func(self, theorem_id, *args, **kwargs)
                logger.info(f"Completed {verifier_name} suite {theorem_id}")
                return result
            except SimplexError:
                logger.error(f"{verifier_name} suite {theorem_id} aborted")
                raise
            except Exception as e:
                logger.error(f"{verifier_name} suite {theorem_id} failed: {str(e)}")
                raise SimplexError(f"{verifier_name} suite {theorem_id} failed: {str(e)}")

        return wrapper

    return decorator


def handle_command_errors(command: str):
    """
    Decorator for CLI commands: maps domain errors to the exit-code contract

    Args:
        command: Name of the command
    """

    def decorator(func: Callable[..., T]) -> Callable[..., T]:
        @functools.wraps(func)
        def wrapper(*args, **kwargs) -> T:
            try:
                return func(*args, **kwargs)
            except typer.Exit:
                raise
            except SimplexError as e:
                Console(stderr=True).print(f"[red]{command} failed:[/red] {escape(str(e))}")
                raise typer.Exit(code=e.exit_code)

        return wrapper

    return decorator
