from typing import List
import logging

import numpy as np

from simplexcenters.models.constructions import CheckResult
from simplexcenters.services.centers import centroid, circumcenter, fermat_torricelli, incenter
from simplexcenters.services.classify import classify, is_regular, relative_spread
from simplexcenters.services.constructions import (
    THM43_X,
    equiareal_equiradial_not_equifacetal,
    gram_thm41,
    gram_thm43,
    thm41_facet_determinant,
    thm41_feasible_interval,
    thm43_polynomial,
    thm46_parameters,
    triangle_metrics,
)
from simplexcenters.services.core_geometry import (
    edge_lengths,
    facet_volume_determinants,
    gram_spectrum,
)
from simplexcenters.services.corpus import random_acute_triangle
from simplexcenters.utils.decorators import handle_verifier_errors
from simplexcenters.verifiers.base_verifier import BaseVerifier

logger = logging.getLogger(__name__)

SQRT5 = float(np.sqrt(5.0))
THM41_INTERVAL = (-(1.0 + SQRT5) / 4.0, (SQRT5 - 1.0) / 4.0)


class GramVerifier(BaseVerifier):
    """Suites built from Gram-matrix recipes of 4-simplices and their base triangles"""

    family = "Gram"

    def __init__(self, tolerance, settings):
        super().__init__(tolerance, settings)
        self.suites = {
            "T4.1": self._four_coinciding_centers,
            "T4.3": self._equiareal_distinct_centers,
            "T4.4": self._equiareal_implies_nothing,
            "T4.6": self._equiareal_equiradial_not_equifacetal,
            "L4.5": self._acute_triangle_bounds,
        }

    @handle_verifier_errors("Gram")
    def run(self, theorem_id: str, seed: int, samples: int) -> List[CheckResult]:
        return super().run(theorem_id, seed, samples)

    def _four_coinciding_centers(self, rng: np.random.Generator, samples: int) -> List[CheckResult]:
        lower, upper = thm41_feasible_interval()
        interval_gap = max(abs(lower - THM41_INTERVAL[0]), abs(upper - THM41_INTERVAL[1]))

        margin = 0.02 * (upper - lower)
        xs = rng.uniform(lower + margin, upper - margin, size=samples)

        worst_trace = 0.0
        worst_centers = 0.0
        worst_determinant = 0.0
        for x in xs:
            gram, simplex = gram_thm41(float(x), self.tol)
            worst_trace = max(worst_trace, abs(float(np.trace(gram.matrix)) - 5.0))
            points = [
                centroid(simplex),
                circumcenter(simplex)[0],
                incenter(simplex)[0],
                fermat_torricelli(simplex, self.tol)[0],
            ]
            worst_centers = max(worst_centers, self._max_pairwise(points))
            expected = thm41_facet_determinant(float(x))
            determinants = facet_volume_determinants(simplex)
            worst_determinant = max(
                worst_determinant, float(np.max(np.abs(determinants - expected))) / expected
            )

        _, reference = gram_thm41(0.0, self.tol)
        _, near_regular = gram_thm41(-0.25 + 1e-6, self.tol)
        lengths = edge_lengths(near_regular.points)
        return [
            self._at_most("feasible_interval_closed_form", interval_gap, 1e-9),
            self._at_most("gram_trace", worst_trace, 0.0),
            self._at_most("four_centers_coincide", worst_centers, self.coincidence_threshold),
            self._at_most("facet_determinant_closed_form", worst_determinant, self.tol.rel_tol),
            self._at_most("near_regular_edge_ratio", float(lengths.max() / lengths.min()) - 1.0, 1e-4),
            self._flag("not_regular_at_zero", not is_regular(reference, self.tol)),
        ]

    def _equiareal_distinct_centers(self, rng: np.random.Generator, samples: int) -> List[CheckResult]:
        gram, simplex = gram_thm43(self.tol)
        eigenvalues, _ = gram_spectrum(gram)
        center_g = centroid(simplex)
        center_c, _ = circumcenter(simplex)
        center_f, _ = fermat_torricelli(simplex, self.tol)
        determinants = facet_volume_determinants(simplex)
        return [
            self._at_most("zero_eigenvalue", abs(float(eigenvalues[0])), 1e-10),
            self._at_least("positive_eigenvalues", float(eigenvalues[1]), 1e-10),
            self._at_most("equal_facet_determinants", relative_spread(determinants), 1e-9),
            self._flag("equiareal", classify(simplex, self.tol).equiareal),
            self._at_most("circumcenter_at_origin", float(np.linalg.norm(center_c)), self.coincidence_threshold),
            self._at_least("centroid_circumcenter_apart", float(np.linalg.norm(center_g - center_c)), 1e-4),
            self._at_least("centroid_fermat_apart", float(np.linalg.norm(center_g - center_f)), 1e-4),
            self._at_least("circumcenter_fermat_apart", float(np.linalg.norm(center_c - center_f)), 1e-4),
            self._at_most(
                "parameter_root",
                abs(THM43_X**2 - 8.0 * THM43_X - 1.0),
                1e-12,
                detail=(
                    f"common determinant {float(np.mean(determinants)):.12g}, "
                    f"facet polynomial {thm43_polynomial():.12g}"
                ),
            ),
        ]

    def _equiareal_implies_nothing(self, rng: np.random.Generator, samples: int) -> List[CheckResult]:
        """An equiareal simplex need be neither equiradial nor well-distributed"""
        _, simplex = gram_thm43(self.tol)
        report = classify(simplex, self.tol)
        center_g = centroid(simplex)
        return [
            self._at_most(
                "incenter_is_centroid",
                float(np.linalg.norm(incenter(simplex)[0] - center_g)),
                self.coincidence_threshold,
            ),
            self._at_least(
                "centroid_not_circumcenter",
                float(np.linalg.norm(center_g - circumcenter(simplex)[0])),
                1e-4,
            ),
            self._flag("not_equiradial", not report.equiradial),
            self._flag("not_well_distributed", not report.well_distributed),
        ]

    def _equiareal_equiradial_not_equifacetal(
        self, rng: np.random.Generator, samples: int
    ) -> List[CheckResult]:
        parameters = thm46_parameters()
        report = classify(equiareal_equiradial_not_equifacetal(), self.tol)
        perturbed = classify(equiareal_equiradial_not_equifacetal(1.01), self.tol)
        return [
            self._at_most("base_u", abs(parameters.u - 25.0 / 3.0), 1e-10),
            self._at_most("base_circumradius", abs(parameters.triangle.circumradius - 1.0), 1e-10),
            self._at_most("apex_edge_squared", abs(parameters.h_squared - 5.0 / 3.0), 1e-10),
            self._at_most("eq14_identity", abs(parameters.eq14_residual), 1e-10),
            self._at_most("eq16_identity", abs(parameters.eq16_residual), 1e-10),
            self._flag("equiareal", report.equiareal),
            self._flag("equiradial", report.equiradial),
            self._flag("not_equifacetal", report.equifacetal is False),
            self._flag(
                "perturbed_apex_breaks_equality",
                not (perturbed.equiareal and perturbed.equiradial),
                detail=f"spreads {perturbed.witnesses.spreads}",
            ),
        ]

    def _acute_triangle_bounds(self, rng: np.random.Generator, samples: int) -> List[CheckResult]:
        """u/9 <= R^2 <= u/8 on acute triangles, with both bounds attained"""
        slack = 1e-10
        out_of_bounds = 0
        worst_identity = 0.0
        for _ in range(samples):
            metrics = triangle_metrics(*random_acute_triangle(rng), tol=self.tol)
            radius_sq = metrics.circumradius**2
            if not metrics.u / 9.0 * (1 - slack) <= radius_sq <= metrics.u / 8.0 * (1 + slack):
                out_of_bounds += 1
            worst_identity = max(worst_identity, metrics.identity_residual)

        right = triangle_metrics(3.0, 4.0, 5.0, self.tol)
        equilateral = triangle_metrics(1.0, 1.0, 1.0, self.tol)
        return [
            self._count("circumradius_bounds", out_of_bounds, samples),
            self._at_most("cosine_identity", worst_identity, slack),
            self._at_most("right_triangle_attains_8R2", abs(right.u - 8.0 * right.circumradius**2) / right.u, slack),
            self._at_most(
                "equilateral_attains_9R2",
                abs(equilateral.u - 9.0 * equilateral.circumradius**2) / equilateral.u,
                slack,
            ),
        ]
