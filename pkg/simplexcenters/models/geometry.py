from typing import List

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PositiveFloat, model_validator

from simplexcenters.models.errors import (
    DegenerateSimplexError,
    DimensionMismatchError,
    InvalidDistanceMatrixError,
    PreconditionError,
)

# A point is a plain coordinate list on the wire and an ndarray in computations
Point = List[float]


class Tolerance(BaseModel):
    """Absolute/relative tolerance pair used by every numeric decision"""

    model_config = ConfigDict(frozen=True)

    abs_tol: PositiveFloat = Field(default=1e-9, description="Absolute tolerance")
    rel_tol: PositiveFloat = Field(default=1e-8, description="Relative tolerance")


DEFAULT_TOLERANCE = Tolerance()


class Simplex(BaseModel):
    """A d-simplex given by d+1 affinely independent vertices in E^d"""

    model_config = ConfigDict(frozen=True)

    dimension: int = Field(gt=0, description="Dimension d of the simplex")
    vertices: List[Point] = Field(description="d+1 vertex coordinate rows of length d")

    @model_validator(mode="after")
    def _check_invariants(self) -> "Simplex":
        d = self.dimension
        if len(self.vertices) != d + 1:
            raise DimensionMismatchError(
                f"A {d}-simplex needs {d + 1} vertices, got {len(self.vertices)}"
            )
        if any(len(vertex) != d for vertex in self.vertices):
            raise DimensionMismatchError(
                f"Every vertex of a {d}-simplex must have {d} coordinates"
            )
        points = np.asarray(self.vertices, dtype=float)
        if not np.all(np.isfinite(points)):
            raise PreconditionError("Simplex coordinates must be finite")

        # Lazy import: core_geometry depends on this module
        from simplexcenters.services.core_geometry import difference_singular_values

        singular_values = difference_singular_values(points)
        threshold = DEFAULT_TOLERANCE.abs_tol * max(1.0, singular_values[0])
        if singular_values[-1] <= threshold:
            raise DegenerateSimplexError(
                "Vertices are not affinely independent",
                residual=float(singular_values[-1]),
                singular_values=singular_values.tolist(),
            )
        return self

    @property
    def points(self) -> np.ndarray:
        """Vertices as a (d+1, d) float array"""
        return np.asarray(self.vertices, dtype=float)

    @property
    def vertex_count(self) -> int:
        return self.dimension + 1

    @classmethod
    def from_points(cls, points) -> "Simplex":
        points = np.asarray(points, dtype=float)
        if points.ndim != 2:
            raise DimensionMismatchError("Vertex array must be two-dimensional")
        return cls(dimension=points.shape[1], vertices=points.tolist())


class GramSpec(BaseModel):
    """(d+1)x(d+1) matrix of vertex inner products A_i . A_j"""

    model_config = ConfigDict(frozen=True)

    gram: List[List[float]] = Field(description="Symmetric matrix of inner products")

    @model_validator(mode="after")
    def _check_symmetric(self) -> "GramSpec":
        matrix = np.asarray(self.gram, dtype=float)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] < 2:
            raise DimensionMismatchError("Gram matrix must be square of size >= 2")
        if not np.all(np.isfinite(matrix)):
            raise PreconditionError("Gram entries must be finite")
        asymmetry = float(np.max(np.abs(matrix - matrix.T)))
        if asymmetry > DEFAULT_TOLERANCE.abs_tol * max(1.0, float(np.max(np.abs(matrix)))):
            raise PreconditionError("Gram matrix is not symmetric", residual=asymmetry)
        return self

    @property
    def matrix(self) -> np.ndarray:
        matrix = np.asarray(self.gram, dtype=float)
        return (matrix + matrix.T) / 2.0

    @property
    def size(self) -> int:
        return len(self.gram)


class DistanceMatrix(BaseModel):
    """Symmetric matrix of edge lengths |A_i A_j| with zero diagonal"""

    model_config = ConfigDict(frozen=True)

    entries: List[List[float]] = Field(description="Edge lengths, zero diagonal")

    @model_validator(mode="after")
    def _check_metric(self) -> "DistanceMatrix":
        matrix = np.asarray(self.entries, dtype=float)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] < 2:
            raise DimensionMismatchError("Distance matrix must be square of size >= 2")
        scale = max(1.0, float(np.max(np.abs(matrix))))
        slack = DEFAULT_TOLERANCE.abs_tol * scale

        if np.max(np.abs(matrix - matrix.T)) > slack:
            raise InvalidDistanceMatrixError("Distance matrix is not symmetric")
        if np.max(np.abs(np.diag(matrix))) > slack:
            raise InvalidDistanceMatrixError("Distance matrix diagonal must be zero")
        off_diagonal = matrix[~np.eye(matrix.shape[0], dtype=bool)]
        if np.any(off_diagonal <= 0.0):
            raise InvalidDistanceMatrixError("Edge lengths must be strictly positive")

        # d_ij <= d_ik + d_kj for every triple
        excess = matrix[:, :, None] - (matrix[:, None, :] + matrix.T[None, :, :])
        worst = float(np.max(excess))
        if worst > slack:
            raise InvalidDistanceMatrixError("Triangle inequality violated", residual=worst)
        return self

    @property
    def matrix(self) -> np.ndarray:
        return np.asarray(self.entries, dtype=float)


class BarycentricCoords(BaseModel):
    """Signed barycentric weights of a point with respect to a simplex"""

    model_config = ConfigDict(frozen=True)

    weights: List[float] = Field(description="d+1 weights summing to 1")

    @model_validator(mode="after")
    def _check_partition_of_unity(self) -> "BarycentricCoords":
        total = float(np.sum(self.weights))
        # Loose bound: the solve is checked against the caller's tolerance separately
        if abs(total - 1.0) > 1e-6 * max(1.0, float(np.max(np.abs(self.weights)))):
            raise PreconditionError("Barycentric weights must sum to 1", residual=abs(total - 1.0))
        return self

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.weights, dtype=float)

    def inside(self, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
        """True when the point lies in the closed simplex"""
        return bool(np.min(self.array) >= -tol.abs_tol)
