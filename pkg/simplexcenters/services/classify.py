"""Facial-structure predicates of a simplex and the aggregated report.

Every equality predicate compares the relative spread (max - min) / mean of
the relevant facet quantity against ``rel_tol``; the spreads are returned as
witnesses so borderline verdicts can be audited.
"""

import itertools
import logging
from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy.spatial.distance import squareform

from simplexcenters.config.settings import get_settings
from simplexcenters.models.errors import PreconditionError
from simplexcenters.models.geometry import DEFAULT_TOLERANCE, Simplex, Tolerance
from simplexcenters.models.reports import ClassificationReport, ClassificationWitnesses
from simplexcenters.services.centers import orthocenter
from simplexcenters.services.core_geometry import (
    circumsphere,
    edge_lengths,
    facet_points,
    facet_volumes,
    inradius_of,
    simplex_volume,
)

logger = logging.getLogger(__name__)


def relative_spread(values) -> float:
    values = np.asarray(values, dtype=float)
    mean = float(np.mean(np.abs(values)))
    gap = float(values.max() - values.min())
    if mean == 0.0:
        return 0.0 if gap == 0.0 else float("inf")
    return gap / mean


def _facets(simplex: Simplex) -> List[np.ndarray]:
    return [facet_points(simplex.points, j) for j in range(simplex.vertex_count)]


def facet_circumradii(simplex: Simplex) -> np.ndarray:
    return np.array([circumsphere(points)[1] for points in _facets(simplex)])


def facet_inradii(simplex: Simplex) -> np.ndarray:
    _require_facets(simplex)
    return np.array([inradius_of(points) for points in _facets(simplex)])


def edge_square_sums(simplex: Simplex) -> np.ndarray:
    """Sum of squared edge lengths of each facet"""
    return np.array([float(np.sum(edge_lengths(points) ** 2)) for points in _facets(simplex)])


def _require_facets(simplex: Simplex) -> None:
    if simplex.dimension < 2:
        raise PreconditionError("Facet predicates need a simplex of dimension >= 2")


def _incident_spreads(simplex: Simplex) -> np.ndarray:
    lengths = squareform(edge_lengths(simplex.points))
    spreads = []
    for j in range(simplex.vertex_count):
        spreads.append(relative_spread(np.delete(lengths[j], j)))
    return np.array(spreads)


def is_regular(simplex: Simplex, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    lengths = edge_lengths(simplex.points)
    return bool(lengths.max() / lengths.min() <= 1.0 + tol.rel_tol)


def _facet_mismatch(reference: np.ndarray, other: np.ndarray, threshold: float) -> float:
    """Smallest entrywise gap between two facet distance matrices over relabelings.

    Returns early with the sorted edge-multiset gap when that already exceeds
    the threshold, and stops at the first relabeling within the threshold.
    """
    multiset_gap = float(
        np.max(np.abs(np.sort(squareform(reference)) - np.sort(squareform(other))))
    )
    if multiset_gap > threshold:
        return multiset_gap

    best = float("inf")
    for permutation in itertools.permutations(range(reference.shape[0])):
        order = list(permutation)
        gap = float(np.max(np.abs(reference[np.ix_(order, order)] - other)))
        best = min(best, gap)
        if best <= threshold:
            break
    return best


def equifacetal_mismatch(simplex: Simplex, tol: Tolerance = DEFAULT_TOLERANCE) -> float:
    """Largest relative facet-to-first-facet congruence gap"""
    _require_facets(simplex)
    max_dimension = get_settings().equifacetal_max_dimension
    if simplex.dimension > max_dimension:
        logger.error(f"Congruence search is bounded to d <= {max_dimension}")
        raise PreconditionError(
            f"Equifacetal test is limited to dimension <= {max_dimension}",
            dimension=simplex.dimension,
        )

    matrices = [squareform(edge_lengths(points)) for points in _facets(simplex)]
    scale = float(np.mean(edge_lengths(simplex.points)))
    threshold = tol.rel_tol * scale
    worst = 0.0
    for other in matrices[1:]:
        worst = max(worst, _facet_mismatch(matrices[0], other, threshold))
    return worst / scale


def is_equifacetal(simplex: Simplex, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    return equifacetal_mismatch(simplex, tol) <= tol.rel_tol


def is_equiareal(simplex: Simplex, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    _require_facets(simplex)
    return relative_spread(facet_volumes(simplex)) <= tol.rel_tol


def is_equiradial(simplex: Simplex, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    _require_facets(simplex)
    return relative_spread(facet_circumradii(simplex)) <= tol.rel_tol


def has_well_distributed_edges(simplex: Simplex, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    _require_facets(simplex)
    return relative_spread(edge_square_sums(simplex)) <= tol.rel_tol


def is_isosceles(simplex: Simplex, tol: Tolerance = DEFAULT_TOLERANCE) -> Optional[int]:
    """Smallest 1-based label of a vertex whose incident edges are all equal"""
    matches = np.flatnonzero(_incident_spreads(simplex) <= tol.rel_tol)
    return int(matches[0]) + 1 if matches.size else None


def opposite_edge_products(simplex: Simplex) -> np.ndarray:
    """(A1-A2).(A3-A4), (A1-A3).(A2-A4), (A1-A4).(A2-A3) of a tetrahedron"""
    a1, a2, a3, a4 = simplex.points
    return np.array(
        [(a1 - a2) @ (a3 - a4), (a1 - a3) @ (a2 - a4), (a1 - a4) @ (a2 - a3)]
    )


def is_orthocentric(simplex: Simplex, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """Altitudes concur. Tetrahedra use the opposite-edge orthogonality test."""
    _require_facets(simplex)
    if simplex.dimension == 2:
        return True
    if simplex.dimension == 3:
        longest = float(np.max(edge_lengths(simplex.points)))
        threshold = tol.abs_tol * (1.0 + longest**2)
        return bool(np.max(np.abs(opposite_edge_products(simplex))) <= threshold)
    return orthocenter(simplex, tol) is not None


def facet_inradii_equal(simplex: Simplex, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    return relative_spread(facet_inradii(simplex)) <= tol.rel_tol


def _tetrahedron_witnesses(simplex: Simplex) -> Dict[str, List[float]]:
    lengths = squareform(edge_lengths(simplex.points))
    perimeters = [
        float(np.sum(edge_lengths(points))) for points in _facets(simplex)
    ]
    opposite = [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)]
    spreads = [
        relative_spread([lengths[i, j], lengths[k, l]]) for i, j, k, l in opposite
    ]
    return {
        "facet_perimeters": perimeters,
        "opposite_edge_spreads": spreads,
        "orthocentric_residuals": opposite_edge_products(simplex).tolist(),
    }


def _equifacetal_verdict(
    simplex: Simplex, tol: Tolerance
) -> Tuple[Optional[bool], Optional[float]]:
    if simplex.dimension > get_settings().equifacetal_max_dimension:
        logger.warning(
            f"Skipping congruence search for a {simplex.dimension}-simplex"
        )
        return None, None
    mismatch = equifacetal_mismatch(simplex, tol)
    return mismatch <= tol.rel_tol, mismatch


def classify(simplex: Simplex, tol: Tolerance = DEFAULT_TOLERANCE) -> ClassificationReport:
    """Run every facial-structure predicate and collect the witnesses"""
    _require_facets(simplex)

    lengths = edge_lengths(simplex.points)
    volumes = facet_volumes(simplex)
    circumradii = facet_circumradii(simplex)
    inradii = facet_inradii(simplex)
    square_sums = edge_square_sums(simplex)
    incident = _incident_spreads(simplex)
    equifacetal, mismatch = _equifacetal_verdict(simplex, tol)

    spreads = {
        "regular": float(lengths.max() / lengths.min() - 1.0),
        "equiareal": relative_spread(volumes),
        "equiradial": relative_spread(circumradii),
        "well_distributed": relative_spread(square_sums),
        "facet_inradii": relative_spread(inradii),
        "isosceles": float(incident.min()),
    }
    if mismatch is not None:
        spreads["equifacetal"] = mismatch

    extras: Dict[str, List[float]] = {}
    if simplex.dimension == 3:
        extras = _tetrahedron_witnesses(simplex)

    apex = np.flatnonzero(incident <= tol.rel_tol)
    volume = simplex_volume(simplex)
    if volume < tol.abs_tol:
        logger.warning(f"Simplex volume {volume:.3e} is below abs_tol; predicates unreliable")

    return ClassificationReport(
        dimension=simplex.dimension,
        regular=spreads["regular"] <= tol.rel_tol,
        equifacetal=equifacetal,
        equiareal=spreads["equiareal"] <= tol.rel_tol,
        equiradial=spreads["equiradial"] <= tol.rel_tol,
        well_distributed=spreads["well_distributed"] <= tol.rel_tol,
        isosceles=int(apex[0]) + 1 if apex.size else None,
        orthocentric=is_orthocentric(simplex, tol),
        facet_inradii_equal=spreads["facet_inradii"] <= tol.rel_tol,
        near_degenerate=volume < tol.abs_tol,
        witnesses=ClassificationWitnesses(
            spreads=spreads,
            edge_lengths=lengths.tolist(),
            facet_volumes=volumes.tolist(),
            facet_circumradii=circumradii.tolist(),
            facet_inradii=inradii.tolist(),
            edge_square_sums=square_sums.tolist(),
            **extras,
        ),
    )
