from simplexcenters.utils.decorators import (
    handle_errors,
    handle_command_errors,
    handle_verifier_errors,
)

__all__ = [
    "handle_errors",
    "handle_command_errors",
    "handle_verifier_errors",
]
