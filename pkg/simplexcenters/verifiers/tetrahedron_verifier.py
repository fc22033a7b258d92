from typing import List
import logging

import numpy as np

from simplexcenters.models.constructions import CheckResult
from simplexcenters.models.geometry import Simplex
from simplexcenters.services.centers import (
    centroid,
    circumcenter,
    complementary_1_centroid,
    fermat_torricelli,
    incenter,
    monge_point,
)
from simplexcenters.services.classify import classify, facet_inradii, relative_spread
from simplexcenters.services.constructions import (
    equifacetal_tetrahedron,
    rhombus_fold_tetrahedron,
    solve_equal_inradius_t,
)
from simplexcenters.services.core_geometry import apply_isometry
from simplexcenters.services.corpus import random_acute_triangle, random_isometry
from simplexcenters.utils.decorators import handle_verifier_errors
from simplexcenters.verifiers.base_verifier import BaseVerifier

logger = logging.getLogger(__name__)

EQUAL_INRADIUS_T = (3.0 + np.sqrt(33.0)) / 6.0


class TetrahedronVerifier(BaseVerifier):
    """Suites on tetrahedra: equifacetal equivalences and equal facet inradii"""

    family = "Tetrahedron"

    def __init__(self, tolerance, settings):
        super().__init__(tolerance, settings)
        self.suites = {
            "T2.1": self._equifacetal_equivalences,
            "T2.2": self._equal_inradii_counterexample,
            "T2.3": self._incenter_meets_complementary_centroid,
        }

    @handle_verifier_errors("Tetrahedron")
    def run(self, theorem_id: str, seed: int, samples: int) -> List[CheckResult]:
        return super().run(theorem_id, seed, samples)

    def _five_centers(self, simplex: Simplex) -> List[np.ndarray]:
        return [
            centroid(simplex),
            incenter(simplex)[0],
            circumcenter(simplex)[0],
            fermat_torricelli(simplex, self.tol)[0],
            monge_point(simplex),
        ]

    def _equifacetal_equivalences(self, rng: np.random.Generator, samples: int) -> List[CheckResult]:
        worst_gap = 0.0
        worst_perimeters = 0.0
        worst_opposite = 0.0
        predicate_failures = 0
        for _ in range(samples):
            a, b, c = random_acute_triangle(rng)
            rotation, shift = random_isometry(rng, 3)
            simplex = apply_isometry(equifacetal_tetrahedron(a, b, c), rotation, shift)

            worst_gap = max(worst_gap, self._max_pairwise(self._five_centers(simplex)))
            report = classify(simplex, self.tol)
            witnesses = report.witnesses
            worst_perimeters = max(worst_perimeters, relative_spread(witnesses.facet_perimeters))
            worst_opposite = max(worst_opposite, max(witnesses.opposite_edge_spreads))
            if not (
                report.equifacetal
                and report.equiareal
                and report.equiradial
                and report.facet_inradii_equal
                and report.well_distributed
            ):
                predicate_failures += 1

        closest = float("inf")
        for simplex in self._corpus(rng, 3, samples):
            closest = min(closest, self._min_pairwise(self._five_centers(simplex)))

        return [
            self._at_most("equifacetal_centers_coincide", worst_gap, self.coincidence_threshold),
            self._at_most("equal_facet_perimeters", worst_perimeters, self.tol.rel_tol),
            self._at_most("equal_opposite_edges", worst_opposite, self.tol.rel_tol),
            self._count("equifacetal_implies_all_predicates", predicate_failures, samples),
            self._at_least("generic_centers_separated", closest, 1000.0 * self.tol.abs_tol),
        ]

    def _equal_inradii_counterexample(self, rng: np.random.Generator, samples: int) -> List[CheckResult]:
        t = solve_equal_inradius_t()
        simplex = rhombus_fold_tetrahedron(t)
        report = classify(simplex, self.tol)
        inradii = facet_inradii(simplex)
        gap = float(np.linalg.norm(incenter(simplex)[0] - complementary_1_centroid(simplex)))
        return [
            self._at_most("fold_parameter", abs(t - EQUAL_INRADIUS_T), 1e-12),
            self._at_most("cubic_residual", abs(3 * t**3 - 6 * t**2 + t + 2), 1e-11),
            self._at_most("facet_inradii_spread", float(np.ptp(inradii)), self.coincidence_threshold),
            self._at_most(
                "common_inradius",
                abs(float(inradii[0]) - 1.0 / (2.0 * np.sqrt(3.0))),
                self.coincidence_threshold,
            ),
            self._flag("not_equifacetal", report.equifacetal is False),
            self._at_most("incenter_is_complementary_centroid", gap, self.coincidence_threshold),
        ]

    def _incenter_meets_complementary_centroid(
        self, rng: np.random.Generator, samples: int
    ) -> List[CheckResult]:
        """I = J exactly when the facet inradii agree, on mixed positives and negatives"""
        candidates: List[Simplex] = [rhombus_fold_tetrahedron(solve_equal_inradius_t())]
        for _ in range(samples):
            candidates.append(equifacetal_tetrahedron(*random_acute_triangle(rng)))
            t = float(rng.uniform(0.6, 1.7))
            if min(abs(t - 1.0), abs(t - EQUAL_INRADIUS_T)) > 0.02:
                candidates.append(rhombus_fold_tetrahedron(t))
        candidates.extend(self._corpus(rng, 3, samples))

        disagreements = 0
        for simplex in candidates:
            equal_inradii = relative_spread(facet_inradii(simplex)) <= self.tol.rel_tol
            gap = float(np.linalg.norm(incenter(simplex)[0] - complementary_1_centroid(simplex)))
            coincide = gap <= self.coincidence_threshold
            if equal_inradii != coincide:
                disagreements += 1
                logger.debug(f"I-J gap {gap:.3e} with equal inradii {equal_inradii}")
        return [self._count("incenter_complementary_iff_equal_inradii", disagreements, len(candidates))]
