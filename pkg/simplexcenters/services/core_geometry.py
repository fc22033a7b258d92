"""Floating-point primitives on simplices: volumes, facets, Gram matrices,
barycentric coordinates and reconstruction of a simplex from its Gram matrix.

Vertex labels exposed to callers are 1-based; helpers prefixed with an
underscore or taking raw arrays use 0-based indices.
"""

import logging
from math import factorial
from typing import List, Sequence, Tuple

import numpy as np
from scipy.linalg import null_space
from scipy.spatial.distance import pdist, squareform

from simplexcenters.models.errors import (
    DimensionMismatchError,
    InvalidDistanceMatrixError,
    NotPositiveSemidefiniteError,
    PreconditionError,
    RankDeficiencyError,
)
from simplexcenters.models.geometry import (
    DEFAULT_TOLERANCE,
    BarycentricCoords,
    DistanceMatrix,
    GramSpec,
    Simplex,
    Tolerance,
)

logger = logging.getLogger(__name__)


def difference_singular_values(points: np.ndarray) -> np.ndarray:
    """Singular values (descending) of the rows A_i - A_{d+1}"""
    points = np.asarray(points, dtype=float)
    differences = points[:-1] - points[-1]
    if differences.size == 0:
        return np.zeros(1)
    return np.linalg.svd(differences, compute_uv=False)


def affine_independence(
    vertices: Sequence[Sequence[float]], tol: Tolerance = DEFAULT_TOLERANCE
) -> bool:
    """True iff the d+1 points span a d-dimensional affine hull"""
    lengths = {len(vertex) for vertex in vertices}
    if len(lengths) != 1:
        raise DimensionMismatchError(
            f"Points have mixed dimensions: {sorted(lengths)}"
        )
    dim = lengths.pop()
    if len(vertices) != dim + 1:
        raise DimensionMismatchError(
            f"Expected {dim + 1} points in dimension {dim}, got {len(vertices)}"
        )
    singular_values = difference_singular_values(np.asarray(vertices, dtype=float))
    threshold = tol.abs_tol * max(1.0, float(singular_values[0]))
    rank = int(np.sum(singular_values > threshold))
    return rank == dim


def distance_matrix(simplex: Simplex) -> DistanceMatrix:
    return DistanceMatrix(entries=squareform(pdist(simplex.points)).tolist())


def edge_lengths(points: np.ndarray) -> np.ndarray:
    """Condensed edge lengths in (0,1), (0,2), ..., (n-2,n-1) order"""
    return pdist(np.asarray(points, dtype=float))


def cayley_menger_sq_volume(
    distances: DistanceMatrix, tol: Tolerance = DEFAULT_TOLERANCE
) -> float:
    """Squared k-volume from the bordered determinant of squared distances"""
    squared = distances.matrix**2
    n = squared.shape[0]
    k = n - 1

    bordered = np.ones((n + 1, n + 1))
    bordered[0, 0] = 0.0
    bordered[1:, 1:] = squared

    normalization = (2**k) * factorial(k) ** 2
    volume_sq = (-1) ** (k + 1) * np.linalg.det(bordered) / normalization

    scale = max(1.0, float(np.max(squared))) ** k
    if volume_sq < -tol.abs_tol * scale:
        logger.error(f"Cayley-Menger determinant gives negative V^2 = {volume_sq:.3e}")
        raise InvalidDistanceMatrixError(
            "Distance matrix is not embeddable in Euclidean space",
            residual=float(-volume_sq),
        )
    return float(max(volume_sq, 0.0))


def simplex_content(points: np.ndarray) -> float:
    """k-volume of k+1 points embedded in any ambient dimension"""
    points = np.asarray(points, dtype=float)
    k = points.shape[0] - 1
    if k == 0:
        return 1.0
    differences = points[1:] - points[0]
    determinant = np.linalg.det(differences @ differences.T)
    return float(np.sqrt(max(determinant, 0.0)) / factorial(k))


def simplex_volume(simplex: Simplex) -> float:
    points = simplex.points
    differences = points[:-1] - points[-1]
    return float(abs(np.linalg.det(differences)) / factorial(simplex.dimension))


def facet_points(points: np.ndarray, index: int) -> np.ndarray:
    """Vertices of the facet opposite the 0-based vertex ``index``"""
    return np.delete(np.asarray(points, dtype=float), index, axis=0)


def _check_label(simplex: Simplex, j: int) -> int:
    if not 1 <= j <= simplex.vertex_count:
        raise PreconditionError(
            f"Facet index {j} out of range 1..{simplex.vertex_count}"
        )
    return j - 1


def facet(simplex: Simplex, j: int) -> Simplex:
    """The (d-1)-simplex opposite A_j, in an orthonormal basis of its hull"""
    index = _check_label(simplex, j)
    if simplex.dimension < 2:
        raise PreconditionError("Facets of a 1-simplex are points, not simplices")

    rest = facet_points(simplex.points, index)
    basis, _ = np.linalg.qr((rest[1:] - rest[0]).T)
    return Simplex.from_points((rest - rest[0]) @ basis)


def facet_volumes(simplex: Simplex) -> np.ndarray:
    points = simplex.points
    return np.array(
        [simplex_content(facet_points(points, i)) for i in range(simplex.vertex_count)]
    )


def facet_volume_determinants(simplex: Simplex) -> np.ndarray:
    """det(M_j M_j^t) per facet, M_j the edge vectors from the facet's first vertex"""
    points = simplex.points
    determinants = []
    for i in range(simplex.vertex_count):
        rest = facet_points(points, i)
        differences = rest[1:] - rest[0]
        determinants.append(np.linalg.det(differences @ differences.T))
    return np.array(determinants)


def circumsphere(points: np.ndarray) -> Tuple[np.ndarray, float]:
    """Circumcenter and radius of k+1 points within their own affine hull"""
    points = np.asarray(points, dtype=float)
    if points.shape[0] == 1:
        return points[0].copy(), 0.0
    differences = points[1:] - points[0]
    gram = differences @ differences.T
    coefficients = np.linalg.solve(gram, np.diag(gram) / 2.0)
    center = points[0] + differences.T @ coefficients
    return center, float(np.linalg.norm(center - points[0]))


def inradius_of(points: np.ndarray) -> float:
    """Inradius k*V / sum of facet volumes, for points in any ambient dimension"""
    points = np.asarray(points, dtype=float)
    k = points.shape[0] - 1
    facets = sum(simplex_content(facet_points(points, i)) for i in range(k + 1))
    return k * simplex_content(points) / facets


def facet_normal(points: np.ndarray, index: int) -> np.ndarray:
    """Unit normal of the hyperplane spanned by the facet opposite ``index``"""
    rest = facet_points(points, index)
    normal = null_space(rest[1:] - rest[0])[:, 0]
    return normal / np.linalg.norm(normal)


def gram_matrix(simplex: Simplex) -> GramSpec:
    points = simplex.points
    return GramSpec(gram=(points @ points.T).tolist())


def distances_from_gram(
    gram: GramSpec, tol: Tolerance = DEFAULT_TOLERANCE
) -> DistanceMatrix:
    matrix = gram.matrix
    diagonal = np.diag(matrix)
    squared = diagonal[:, None] + diagonal[None, :] - 2.0 * matrix
    np.fill_diagonal(squared, 0.0)

    worst = float(np.min(squared))
    if worst < -tol.abs_tol * max(1.0, float(np.max(np.abs(matrix)))):
        raise NotPositiveSemidefiniteError(
            "Gram matrix yields a negative squared distance", residual=-worst
        )
    return DistanceMatrix(entries=np.sqrt(np.clip(squared, 0.0, None)).tolist())


def gram_spectrum(gram: GramSpec) -> Tuple[np.ndarray, np.ndarray]:
    """Ascending eigenvalues and eigenvectors of the symmetric Gram matrix"""
    return np.linalg.eigh(gram.matrix)


def numerical_rank(eigenvalues: np.ndarray, tol: Tolerance = DEFAULT_TOLERANCE) -> int:
    threshold = tol.abs_tol * max(1.0, float(np.max(eigenvalues)))
    return int(np.sum(eigenvalues > threshold))


def simplex_from_gram(gram: GramSpec, tol: Tolerance = DEFAULT_TOLERANCE) -> Simplex:
    """Factor G = H H^t and return the rows of H as a d-simplex.

    Uses the symmetric eigendecomposition H = U sqrt(L) with the null
    eigenvector dropped, which is well posed for the singular rank-d Gram
    matrix of a simplex.
    """
    eigenvalues, eigenvectors = gram_spectrum(gram)
    threshold = tol.abs_tol * max(1.0, float(eigenvalues[-1]))
    dimension = gram.size - 1

    if eigenvalues[0] < -threshold:
        logger.error(f"Gram matrix is not PSD: eigenvalues {eigenvalues.tolist()}")
        raise NotPositiveSemidefiniteError(
            "Gram matrix is not positive semidefinite",
            residual=float(-eigenvalues[0]),
            eigenvalues=eigenvalues.tolist(),
        )
    rank = numerical_rank(eigenvalues, tol)
    if rank != dimension:
        logger.error(f"Gram matrix has rank {rank}, expected {dimension}")
        raise RankDeficiencyError(
            f"Gram matrix has numerical rank {rank}, expected {dimension}",
            residual=float(eigenvalues[1] if rank < dimension else eigenvalues[0]),
            eigenvalues=eigenvalues.tolist(),
        )

    # Largest eigenvalues first so the coordinates are deterministic in order
    keep = np.argsort(eigenvalues)[::-1][:dimension]
    factor = eigenvectors[:, keep] * np.sqrt(eigenvalues[keep])
    return Simplex.from_points(factor)


def barycentric(simplex: Simplex, point: Sequence[float]) -> BarycentricCoords:
    """Signed barycentric weights w with sum(w_j A_j) = P and sum(w_j) = 1"""
    point = np.asarray(point, dtype=float)
    if point.shape != (simplex.dimension,):
        raise DimensionMismatchError(
            f"Point of dimension {point.shape} for a {simplex.dimension}-simplex"
        )
    system = np.vstack([simplex.points.T, np.ones(simplex.vertex_count)])
    weights = np.linalg.solve(system, np.append(point, 1.0))
    return BarycentricCoords(weights=weights.tolist())


def apply_isometry(simplex: Simplex, rotation: np.ndarray, shift: np.ndarray) -> Simplex:
    """Image of the simplex under x -> Q x + t"""
    return Simplex.from_points(simplex.points @ np.asarray(rotation).T + np.asarray(shift))


def is_point_vertex(simplex: Simplex, point: np.ndarray, tol: Tolerance) -> List[int]:
    """0-based indices of vertices within abs_tol of the point"""
    distances = np.linalg.norm(simplex.points - np.asarray(point), axis=1)
    scale = 1.0 + float(np.max(distances))
    return [int(i) for i in np.flatnonzero(distances <= tol.abs_tol * scale)]


def regular_simplex_circumradius(k: int, edge: float = 1.0) -> float:
    """Circumradius edge * sqrt(k / (2(k+1))) of a regular k-simplex"""
    return edge * float(np.sqrt(k / (2.0 * (k + 1))))


def regular_simplex(dimension: int, edge: float = 1.0) -> Simplex:
    """Regular d-simplex centered at the origin, factored from its Gram matrix"""
    if dimension < 1 or edge <= 0.0:
        raise PreconditionError("Regular simplex needs d >= 1 and a positive edge")
    radius_sq = regular_simplex_circumradius(dimension, edge) ** 2
    gram = np.full((dimension + 1, dimension + 1), -radius_sq / dimension)
    np.fill_diagonal(gram, radius_sq)
    return simplex_from_gram(GramSpec(gram=gram.tolist()))


def simplex_from_distances(
    distances: DistanceMatrix, tol: Tolerance = DEFAULT_TOLERANCE
) -> Simplex:
    """Embed a distance matrix through the Gram matrix relative to the first vertex"""
    squared = distances.matrix**2
    gram = (squared[0][:, None] + squared[0][None, :] - squared) / 2.0
    return simplex_from_gram(GramSpec(gram=gram.tolist()), tol)
