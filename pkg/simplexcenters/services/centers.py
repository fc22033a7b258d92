"""Centers of a d-simplex: centroid, circumcenter, incenter, Fermat-Torricelli
point, Monge point, orthocenter, complementary 1-centroid and 1-center."""

import itertools
import logging
from typing import Dict, List, Optional, Tuple

import numpy as np

from simplexcenters.config.settings import get_settings
from simplexcenters.models.errors import (
    ConvergenceError,
    DegenerateSimplexError,
    PreconditionError,
)
from simplexcenters.models.geometry import DEFAULT_TOLERANCE, Simplex, Tolerance
from simplexcenters.models.reports import CenterReport, FTMode
from simplexcenters.services.core_geometry import (
    edge_lengths,
    facet_normal,
    facet_volumes,
    simplex_volume,
)

logger = logging.getLogger(__name__)

# Condition number above which the circumcenter system is rejected
MAX_CONDITION = 1e13


def _require_dimension(simplex: Simplex, minimum: int, what: str) -> None:
    if simplex.dimension < minimum:
        raise PreconditionError(f"{what} needs a simplex of dimension >= {minimum}")


def centroid(simplex: Simplex) -> np.ndarray:
    return simplex.points.mean(axis=0)


def circumcenter(simplex: Simplex) -> Tuple[np.ndarray, float]:
    """Solve 2(A_i - A_{d+1}) . C = |A_i|^2 - |A_{d+1}|^2"""
    points = simplex.points
    last = points[-1]
    system = 2.0 * (points[:-1] - last)
    rhs = np.sum(points[:-1] ** 2, axis=1) - last @ last

    condition = np.linalg.cond(system)
    if condition > MAX_CONDITION:
        logger.error(f"Circumcenter system is ill-conditioned: cond={condition:.3e}")
        raise DegenerateSimplexError(
            "Circumcenter system is numerically singular", residual=float(condition)
        )

    center = np.linalg.solve(system, rhs)
    radius = float(np.mean(np.linalg.norm(points - center, axis=1)))
    return center, radius


def incenter(simplex: Simplex) -> Tuple[np.ndarray, float]:
    """Facet-volume weighted vertex average, r = d V / sum of facet volumes"""
    weights = facet_volumes(simplex)
    total = float(weights.sum())
    center = weights @ simplex.points / total
    radius = simplex.dimension * simplex_volume(simplex) / total
    return center, radius


def unit_vector_sum(points: np.ndarray, position: np.ndarray) -> np.ndarray:
    """Gradient of P -> sum |P - A_i|, valid away from the vertices"""
    differences = position - points
    distances = np.linalg.norm(differences, axis=1)
    return (differences / distances[:, None]).sum(axis=0)


def distance_sum(points: np.ndarray, position: np.ndarray) -> float:
    return float(np.linalg.norm(points - position, axis=1).sum())


def vertex_pull(points: np.ndarray, index: int) -> float:
    """|f(i)|: norm of the unit vectors from A_i towards the other vertices"""
    others = np.delete(points, index, axis=0) - points[index]
    return float(np.linalg.norm((others / np.linalg.norm(others, axis=1)[:, None]).sum(axis=0)))


def absorbing_vertex(
    simplex: Simplex, tol: Tolerance = DEFAULT_TOLERANCE
) -> Optional[Tuple[int, float]]:
    """0-based vertex with |f(i)| <= 1 + abs_tol (smallest norm wins), if any"""
    pulls = np.array(
        [vertex_pull(simplex.points, i) for i in range(simplex.vertex_count)]
    )
    index = int(np.argmin(pulls))
    if pulls[index] <= 1.0 + tol.abs_tol:
        return index, float(pulls[index])
    return None


def _newton_step(points: np.ndarray, position: np.ndarray) -> Optional[np.ndarray]:
    differences = position - points
    distances = np.linalg.norm(differences, axis=1)
    units = differences / distances[:, None]
    identity = np.eye(points.shape[1])
    hessian = sum(
        (identity - np.outer(unit, unit)) / distance
        for unit, distance in zip(units, distances)
    )
    try:
        return position - np.linalg.solve(hessian, units.sum(axis=0))
    except np.linalg.LinAlgError:
        return None


def _weiszfeld_step(points: np.ndarray, position: np.ndarray) -> np.ndarray:
    weights = 1.0 / np.linalg.norm(points - position, axis=1)
    candidate = weights @ points / weights.sum()

    # Fallback halving if the plain step does not decrease the objective
    step = candidate - position
    current = distance_sum(points, position)
    for _ in range(60):
        if distance_sum(points, position + step) <= current:
            break
        step = step / 2.0
    return position + step


def fermat_torricelli(
    simplex: Simplex,
    tol: Tolerance = DEFAULT_TOLERANCE,
    max_iterations: Optional[int] = None,
) -> Tuple[np.ndarray, FTMode]:
    """Minimizer of the distance sum to the vertices.

    A vertex A_i is the minimizer iff |f(i)| <= 1. Otherwise the minimizer
    is interior ("floating") and is found by Weiszfeld iteration from the
    centroid, accelerated by Newton steps whenever they shrink the residual
    |sum (F - A_i)/|F - A_i||.
    """
    settings = get_settings()
    max_iterations = max_iterations or settings.weiszfeld_max_iterations
    points = simplex.points

    absorbed = absorbing_vertex(simplex, tol)
    if absorbed is not None:
        index, pull = absorbed
        logger.debug(f"Fermat-Torricelli point absorbed by vertex {index + 1}")
        return points[index].copy(), FTMode(
            kind="absorbed", vertex=index + 1, residual=pull, iterations=0
        )

    rng = np.random.default_rng(0)
    scale = 1.0 + float(np.max(edge_lengths(points)))
    position = points.mean(axis=0)
    residual = float("inf")

    for iteration in range(1, max_iterations + 1):
        distances = np.linalg.norm(points - position, axis=1)
        if np.min(distances) <= tol.abs_tol * scale:
            # Not absorbed, so leave the vertex by a small random offset
            position = position + settings.weiszfeld_restep_offset * rng.standard_normal(
                simplex.dimension
            )
            continue

        residual = float(np.linalg.norm(unit_vector_sum(points, position)))
        if residual <= tol.abs_tol:
            position, residual = _polish(points, position, residual)
            logger.debug(
                f"Weiszfeld converged in {iteration} iterations, residual {residual:.3e}"
            )
            return position, FTMode(
                kind="floating", residual=residual, iterations=iteration
            )

        newton = _newton_step(points, position)
        if newton is not None and np.all(np.isfinite(newton)):
            if np.min(np.linalg.norm(points - newton, axis=1)) > tol.abs_tol * scale:
                newton_residual = float(np.linalg.norm(unit_vector_sum(points, newton)))
                if newton_residual < residual:
                    position = newton
                    continue

        position = _weiszfeld_step(points, position)

    logger.error(f"Weiszfeld iteration did not converge, residual {residual:.3e}")
    raise ConvergenceError(
        f"Fermat-Torricelli iteration did not converge in {max_iterations} iterations",
        residual=residual,
    )


def _polish(
    points: np.ndarray, position: np.ndarray, residual: float
) -> Tuple[np.ndarray, float]:
    for _ in range(3):
        candidate = _newton_step(points, position)
        if candidate is None:
            break
        candidate_residual = float(np.linalg.norm(unit_vector_sum(points, candidate)))
        if not candidate_residual < residual:
            break
        position, residual = candidate, candidate_residual
    return position, residual


def monge_point(simplex: Simplex) -> np.ndarray:
    """Common point of the mid-perpendicular hyperplanes, ((d+1)G - 2C)/(d-1).

    In a tetrahedron this is 2G - C, the reflection of C in G.
    """
    _require_dimension(simplex, 2, "Monge point")
    d = simplex.dimension
    center, _ = circumcenter(simplex)
    return ((d + 1) * centroid(simplex) - 2.0 * center) / (d - 1)


def _line_distance(
    base_a: np.ndarray, dir_a: np.ndarray, base_b: np.ndarray, dir_b: np.ndarray
) -> float:
    system = np.column_stack([dir_a, -dir_b])
    rhs = base_b - base_a
    solution, *_ = np.linalg.lstsq(system, rhs, rcond=None)
    return float(np.linalg.norm(system @ solution - rhs))


def orthocenter(
    simplex: Simplex, tol: Tolerance = DEFAULT_TOLERANCE
) -> Optional[np.ndarray]:
    """Common point of the d+1 altitudes, or None if they do not concur"""
    _require_dimension(simplex, 2, "Orthocenter")
    points = simplex.points
    normals = [facet_normal(points, j) for j in range(simplex.vertex_count)]
    _, radius = circumcenter(simplex)
    threshold = tol.abs_tol * (1.0 + radius)

    for i, j in itertools.combinations(range(simplex.vertex_count), 2):
        distance = _line_distance(points[i], normals[i], points[j], normals[j])
        if distance > threshold:
            logger.debug(f"Altitudes {i + 1} and {j + 1} miss by {distance:.3e}")
            return None

    identity = np.eye(simplex.dimension)
    projectors = [identity - np.outer(n, n) for n in normals]
    lhs = sum(projectors)
    rhs = sum(projector @ point for projector, point in zip(projectors, points))
    return np.linalg.solve(lhs, rhs)


def complementary_1_centroid(simplex: Simplex) -> np.ndarray:
    """Vertex average, A_j weighted by the total edge length of facet j"""
    _require_dimension(simplex, 2, "Complementary 1-centroid")
    lengths = np.linalg.norm(
        simplex.points[:, None, :] - simplex.points[None, :, :], axis=2
    )
    total = lengths.sum() / 2.0
    weights = total - lengths.sum(axis=1)
    return weights @ simplex.points / weights.sum()


def tangent_lengths(simplex: Simplex) -> Tuple[np.ndarray, float]:
    """Least-squares solution of t_i + t_j = |A_i A_j| over all edges, plus residual"""
    pairs = list(itertools.combinations(range(simplex.vertex_count), 2))
    incidence = np.zeros((len(pairs), simplex.vertex_count))
    for row, (i, j) in enumerate(pairs):
        incidence[row, [i, j]] = 1.0
    lengths = edge_lengths(simplex.points)
    solution, *_ = np.linalg.lstsq(incidence, lengths, rcond=None)
    return solution, float(np.linalg.norm(incidence @ solution - lengths))


def one_center(
    simplex: Simplex, tol: Tolerance = DEFAULT_TOLERANCE
) -> Optional[Tuple[np.ndarray, float]]:
    """Center and radius of the sphere tangent to every edge, if one exists"""
    _require_dimension(simplex, 2, "1-center")
    points = simplex.points
    lengths = edge_lengths(points)
    threshold = tol.abs_tol * (1.0 + float(lengths.mean()))

    tangents, residual = tangent_lengths(simplex)
    if residual > threshold:
        logger.debug(f"No 1-center: tangent-length residual {residual:.3e}")
        return None
    if np.any(tangents <= 0.0):
        return None

    pairs = list(itertools.combinations(range(simplex.vertex_count), 2))
    directions = np.array([(points[j] - points[i]) / lengths[k] for k, (i, j) in enumerate(pairs)])
    touch_points = np.array(
        [points[i] + tangents[i] * directions[k] for k, (i, j) in enumerate(pairs)]
    )
    offsets = np.einsum("ij,ij->i", directions, touch_points)
    center, *_ = np.linalg.lstsq(directions, offsets, rcond=None)

    plane_residual = float(np.max(np.abs(directions @ center - offsets)))
    radii = np.linalg.norm(touch_points - center, axis=1)
    spread = float(radii.max() - radii.min())
    if plane_residual > threshold or spread > threshold:
        logger.debug(
            f"No 1-center: plane residual {plane_residual:.3e}, radius spread {spread:.3e}"
        )
        return None
    return center, float(radii.mean())


def coincident_pairs(centers: Dict[str, np.ndarray], threshold: float) -> List[List[str]]:
    """Sorted name pairs of centers closer than the threshold"""
    pairs = []
    for first, second in itertools.combinations(sorted(centers), 2):
        if np.linalg.norm(centers[first] - centers[second]) <= threshold:
            pairs.append([first, second])
    return pairs


def all_centers(simplex: Simplex, tol: Tolerance = DEFAULT_TOLERANCE) -> CenterReport:
    """Every center of the simplex with the pairs that coincide"""
    _require_dimension(simplex, 2, "Center analysis")
    center_c, radius_c = circumcenter(simplex)
    center_i, radius_i = incenter(simplex)
    center_f, mode = fermat_torricelli(simplex, tol)

    centers: Dict[str, np.ndarray] = {
        "centroid": centroid(simplex),
        "circumcenter": center_c,
        "incenter": center_i,
        "fermat_torricelli": center_f,
        "monge": monge_point(simplex),
        "complementary_1_centroid": complementary_1_centroid(simplex),
    }
    ortho = orthocenter(simplex, tol)
    if ortho is not None:
        centers["orthocenter"] = ortho
    edge_sphere = one_center(simplex, tol)
    if edge_sphere is not None:
        centers["one_center"] = edge_sphere[0]

    coincidences = coincident_pairs(centers, tol.abs_tol * (1.0 + radius_c))
    return CenterReport(
        dimension=simplex.dimension,
        centroid=centers["centroid"].tolist(),
        circumcenter=center_c.tolist(),
        circumradius=radius_c,
        incenter=center_i.tolist(),
        inradius=radius_i,
        fermat_torricelli=center_f.tolist(),
        ft_mode=mode,
        monge=centers["monge"].tolist(),
        orthocenter=None if ortho is None else ortho.tolist(),
        complementary_1_centroid=centers["complementary_1_centroid"].tolist(),
        one_center=None if edge_sphere is None else edge_sphere[0].tolist(),
        one_center_radius=None if edge_sphere is None else edge_sphere[1],
        coincidences=coincidences,
    )
