"""Cevians of a simplex through a point: feet, lengths, the equal-length
criterion and the vertex partition behind equal cevians through the
circumcenter."""

import logging
from typing import Dict, List, Optional

import numpy as np

from simplexcenters.models.errors import CevianUndefinedError, PreconditionError
from simplexcenters.models.geometry import DEFAULT_TOLERANCE, Simplex, Tolerance
from simplexcenters.models.reports import CevianReport, Lemma52Structure, Theorem51Verdict
from simplexcenters.services.centers import centroid, circumcenter, fermat_torricelli
from simplexcenters.services.classify import relative_spread
from simplexcenters.services.core_geometry import (
    barycentric,
    facet_normal,
    facet_points,
    is_point_vertex,
)

logger = logging.getLogger(__name__)


def dependence_coefficients(
    simplex: Simplex, point, tol: Tolerance = DEFAULT_TOLERANCE
) -> np.ndarray:
    """Coefficients a_j with sum a_j (A_j - P) = 0 and sum a_j = 1"""
    point = np.asarray(point, dtype=float)
    vertices = is_point_vertex(simplex, point, tol)
    if vertices:
        raise CevianUndefinedError(
            f"Point coincides with vertex {vertices[0] + 1}", vertex=vertices[0] + 1
        )

    coefficients = barycentric(simplex, point).array
    # No d of the coefficients may sum to zero
    complements = np.abs(1.0 - coefficients)
    k = int(np.argmin(complements))
    if complements[k] <= tol.abs_tol:
        logger.error(f"Cevian from vertex {k + 1} is parallel to its facet")
        raise CevianUndefinedError(
            f"Cevian from vertex {k + 1} does not meet the opposite facet",
            residual=float(complements[k]),
            vertex=k + 1,
        )
    return coefficients


def cevian_feet(simplex: Simplex, point, tol: Tolerance = DEFAULT_TOLERANCE) -> CevianReport:
    point = np.asarray(point, dtype=float)
    coefficients = dependence_coefficients(simplex, point, tol)
    total = float(coefficients.sum())
    offsets = simplex.points - point

    # A_j* = -a_j A_j / (s - a_j) with P at the origin
    ratios = coefficients / (total - coefficients)
    feet = point - ratios[:, None] * offsets
    lengths = np.linalg.norm(simplex.points - feet, axis=1)
    closed_form = abs(total) / np.abs(total - coefficients) * np.linalg.norm(offsets, axis=1)

    spread = relative_spread(lengths)
    equal = spread <= tol.rel_tol

    lemma52_r = None
    center, radius = circumcenter(simplex)
    if equal and np.linalg.norm(point - center) <= tol.abs_tol * (1.0 + radius):
        normalized = Simplex.from_points((simplex.points - center) / radius)
        structure = lemma52_structure(normalized, tol)
        lemma52_r = None if structure is None else structure.r

    return CevianReport(
        through=point.tolist(),
        coefficients=coefficients.tolist(),
        feet=feet.tolist(),
        lengths=lengths.tolist(),
        closed_form_lengths=closed_form.tolist(),
        spread=spread,
        equal=equal,
        lemma52_r=lemma52_r,
    )


def foot_by_intersection(simplex: Simplex, index: int, point) -> np.ndarray:
    """Intersection of line(A_j, P) with the hyperplane of facet j (0-based j)"""
    points = simplex.points
    normal = facet_normal(points, index)
    anchor = facet_points(points, index)[0]
    direction = np.asarray(point, dtype=float) - points[index]
    step = normal @ (anchor - points[index]) / (normal @ direction)
    return points[index] + step * direction


def lemma52_structure(
    simplex: Simplex, tol: Tolerance = DEFAULT_TOLERANCE
) -> Optional[Lemma52Structure]:
    """Vertex partition of a unit-circumradius simplex with equal cevians through the origin.

    The coefficients are sign-normalized so s > 0; the r vertices with
    a_j > s then carry weight 2d - 2r + 1 and the others -(2r - 1).
    """
    norms = np.linalg.norm(simplex.points, axis=1)
    worst = float(np.max(np.abs(norms - 1.0)))
    if worst > tol.rel_tol:
        raise PreconditionError(
            "Vertices must lie on the unit sphere about the origin", residual=worst
        )

    origin = np.zeros(simplex.dimension)
    coefficients = dependence_coefficients(simplex, origin, tol)
    total = float(coefficients.sum())

    # Unit vertex norms: equal cevians iff |s| / |s - a_j| does not depend on j
    if relative_spread(abs(total) / np.abs(total - coefficients)) > tol.rel_tol:
        return None
    if total < 0.0:
        coefficients, total = -coefficients, -total

    d = simplex.dimension
    leading = np.flatnonzero(total - coefficients < 0.0)
    trailing = np.flatnonzero(total - coefficients >= 0.0)
    r = int(leading.size)
    if not 2 * r < d + 1:
        return None

    points = simplex.points
    weighted = (2 * d - 2 * r + 1) * points[leading].sum(axis=0) - (2 * r - 1) * points[
        trailing
    ].sum(axis=0)
    scaled = coefficients * (d + 1 - 2 * r) / total
    return Lemma52Structure(
        r=r,
        leading=[int(j) + 1 for j in leading],
        trailing=[int(j) + 1 for j in trailing],
        coefficients=sorted(scaled.tolist(), reverse=True),
        residual=float(np.linalg.norm(weighted)),
    )


def _equal_cevians_through(
    simplex: Simplex, point: np.ndarray, tol: Tolerance
) -> Optional[CevianReport]:
    try:
        return cevian_feet(simplex, point, tol)
    except CevianUndefinedError as e:
        logger.debug(f"Cevians undefined: {e}")
        return None


def theorem51_suite(simplex: Simplex, tol: Tolerance = DEFAULT_TOLERANCE) -> Theorem51Verdict:
    """Evaluate the four equivalent equal-cevian conditions on one simplex"""
    center_g = centroid(simplex)
    center_c, radius = circumcenter(simplex)
    center_f, mode = fermat_torricelli(simplex, tol)
    gap = float(np.linalg.norm(center_g - center_c))

    through_g = _equal_cevians_through(simplex, center_g, tol)
    through_f = None if mode.kind == "absorbed" else _equal_cevians_through(simplex, center_f, tol)
    through_c = _equal_cevians_through(simplex, center_c, tol)

    weights = barycentric(simplex, center_c).array
    lowest = float(weights.min())
    inside = lowest >= -tol.abs_tol

    spreads: Dict[str, Optional[float]] = {
        "centroid_circumcenter": gap,
        "centroid": None if through_g is None else through_g.spread,
        "fermat": None if through_f is None else through_f.spread,
        "circumcenter": None if through_c is None else through_c.spread,
        "circumcenter_min_weight": lowest,
    }
    conditions: List[bool] = [
        gap <= tol.abs_tol * (1.0 + radius),
        through_g is not None and through_g.equal,
        through_f is not None and through_f.equal,
        inside and through_c is not None and through_c.equal,
    ]
    return Theorem51Verdict(
        centroid_is_circumcenter=conditions[0],
        equal_cevians_centroid=conditions[1],
        equal_cevians_fermat=conditions[2],
        circumcenter_inside=inside,
        equal_cevians_circumcenter=through_c is not None and through_c.equal,
        fermat_floating=mode.kind == "floating",
        decisive=mode.kind == "floating" and abs(lowest) > tol.abs_tol,
        consistent=len(set(conditions)) == 1,
        spreads=spreads,
    )
