from typing import Any, Dict, Optional


class SimplexError(Exception):
    """Base class for every error raised by simplexcenters"""

    exit_code: int = 1

    def __init__(self, message: str, residual: Optional[float] = None, **details: Any):
        super().__init__(message)
        self.message = message
        self.residual = residual
        self.details: Dict[str, Any] = details

    def __str__(self) -> str:
        if self.residual is None:
            return self.message
        return f"{self.message} (residual={self.residual:.3e})"


class InvalidInputError(SimplexError):
    """Input could not be parsed into a simplex or Gram matrix"""

    exit_code = 2


class UnknownNameError(SimplexError):
    """Unknown construction, fixture or theorem id"""

    exit_code = 2


class PreconditionError(SimplexError):
    """An operation precondition or a domain invariant does not hold"""

    exit_code = 3


class DimensionMismatchError(PreconditionError):
    pass


class DegenerateSimplexError(PreconditionError):
    pass


class InvalidDistanceMatrixError(PreconditionError):
    pass


class NotPositiveSemidefiniteError(PreconditionError):
    pass


class RankDeficiencyError(PreconditionError):
    pass


class NonAcuteTriangleError(PreconditionError):
    pass


class CevianUndefinedError(PreconditionError):
    pass


class ConvergenceError(PreconditionError):
    pass


class GenerationError(SimplexError):
    """A random corpus constraint could not be satisfied"""

    exit_code = 4
