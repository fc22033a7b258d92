from typing import List, Tuple
import logging

import numpy as np

from simplexcenters.models.constructions import CheckResult
from simplexcenters.models.errors import PreconditionError
from simplexcenters.models.geometry import DistanceMatrix, Simplex
from simplexcenters.services.centers import (
    centroid,
    circumcenter,
    fermat_torricelli,
    incenter,
    one_center,
)
from simplexcenters.services.classify import (
    classify,
    facet_circumradii,
    is_regular,
    relative_spread,
)
from simplexcenters.services.constructions import (
    coincident_IF_simplex,
    equifacetal_tetrahedron,
    equiradial_isosceles_over,
    equiradial_not_equiareal,
    isosceles_circumradius,
    scan_if_base,
)
from simplexcenters.services.core_geometry import (
    barycentric,
    facet_volumes,
    regular_simplex,
    regular_simplex_circumradius,
    simplex_from_distances,
)
from simplexcenters.services.corpus import random_acute_triangle
from simplexcenters.utils.decorators import handle_verifier_errors
from simplexcenters.verifiers.base_verifier import BaseVerifier

logger = logging.getLogger(__name__)

CENTER_PAIRS = {
    "well_distributed": ("centroid", "circumcenter"),
    "equiradial": ("circumcenter", "incenter"),
    "equiareal": ("incenter", "centroid"),
}


class CoincidenceVerifier(BaseVerifier):
    """Suites on coinciding centroid, circumcenter, incenter and Fermat-Torricelli point"""

    family = "Coincidence"

    def __init__(self, tolerance, settings):
        super().__init__(tolerance, settings)
        self.suites = {
            "T3.1": self._balanced_vertices,
            "T3.2": self._pairwise_equivalences,
            "T3.3": self._incenter_fermat_not_equifacetal,
            "T3.4": self._equiradial_not_equiareal,
            "T3.5": self._one_center_regular,
        }

    @handle_verifier_errors("Coincidence")
    def run(self, theorem_id: str, seed: int, samples: int) -> List[CheckResult]:
        return super().run(theorem_id, seed, samples)

    def _balanced_vertices(self, rng: np.random.Generator, samples: int) -> List[CheckResult]:
        """Unit vertices summing to zero put G, C and F together"""
        worst = 0.0
        for dimension, count in self._split(samples, (2, 3, 4, 5)).items():
            for simplex in self._corpus(rng, dimension, count, "balanced"):
                points = [
                    centroid(simplex),
                    circumcenter(simplex)[0],
                    fermat_torricelli(simplex, self.tol)[0],
                ]
                worst = max(worst, self._max_pairwise(points))
        return [self._at_most("centroid_circumcenter_fermat_coincide", worst, self.coincidence_threshold)]

    def _equiradial_lifts(self, rng: np.random.Generator, count: int) -> List[Simplex]:
        """Equifacetal tetrahedra and their '+' lifts to d = 4 and d = 5"""
        lifts: List[Simplex] = []
        for _ in range(count):
            base = equifacetal_tetrahedron(*random_acute_triangle(rng))
            lift4 = equiradial_isosceles_over(base, "+", self.tol)
            lift5 = equiradial_isosceles_over(lift4, "+", self.tol)
            lifts.extend([base, lift4, lift5])
        return lifts

    def _labelled_corpus(self, rng: np.random.Generator, samples: int) -> List[Tuple[str, Simplex]]:
        share = max(1, samples // 3)
        corpus: List[Tuple[str, Simplex]] = []
        for dimension in (3, 4, 5):
            corpus += [("balanced", s) for s in self._corpus(rng, dimension, share, "balanced")]
            corpus += [("equiareal", s) for s in self._corpus(rng, dimension, share, "equiareal")]
            corpus += [("random", s) for s in self._corpus(rng, dimension, share)]
        corpus += [("equiradial", s) for s in self._equiradial_lifts(rng, share)]
        corpus += [("exterior_equiradial", equiradial_not_equiareal(d)) for d in (4, 5)]
        return corpus

    def _pairwise_equivalences(self, rng: np.random.Generator, samples: int) -> List[CheckResult]:
        disagreements = {predicate: 0 for predicate in CENTER_PAIRS}
        exactly_two = 0
        worst_relation = 0.0
        exterior_equiradial = 0
        exterior_merged = 0
        corpus = self._labelled_corpus(rng, samples)

        for label, simplex in corpus:
            center_c, radius_c = circumcenter(simplex)
            center_i, radius_i = incenter(simplex)
            centers = {"centroid": centroid(simplex), "circumcenter": center_c, "incenter": center_i}
            report = classify(simplex, self.tol)
            # C = I needs C inside S; outside, equiradial simplices keep C and I apart
            interior = float(barycentric(simplex, center_c).array.min()) >= -self.tol.abs_tol
            predicates = {
                "well_distributed": report.well_distributed,
                "equiradial": report.equiradial,
                "equiareal": report.equiareal,
            }
            expected = {**predicates, "equiradial": report.equiradial and interior}

            for predicate, (first, second) in CENTER_PAIRS.items():
                gap = float(np.linalg.norm(centers[first] - centers[second]))
                if (gap <= self.coincidence_threshold) != expected[predicate]:
                    disagreements[predicate] += 1
                    logger.debug(f"{label} simplex: {first}-{second} gap {gap:.3e} vs {predicate}")
            if sum(predicates.values()) == 2:
                exactly_two += 1

            if report.equiradial and not interior:
                exterior_equiradial += 1
                if float(np.linalg.norm(center_c - center_i)) <= self.coincidence_threshold:
                    exterior_merged += 1

            # Facet circumradius from the common center C = I
            if expected["equiradial"]:
                facet_radius = np.sqrt(radius_c**2 - radius_i**2)
                worst_relation = max(
                    worst_relation, float(np.max(np.abs(facet_circumradii(simplex) - facet_radius)))
                )

        checks = [
            self._count(f"{first}_{second}_iff_{predicate}", disagreements[predicate], len(corpus))
            for predicate, (first, second) in CENTER_PAIRS.items()
        ]
        checks.append(self._count("two_predicates_imply_third", exactly_two, len(corpus)))
        checks.append(self._at_most("facet_circumradius_relation", worst_relation, 1e-9))
        checks.append(self._flag("exterior_equiradial_present", exterior_equiradial >= 2))
        checks.append(
            self._count("exterior_circumcenter_apart_from_incenter", exterior_merged, exterior_equiradial)
        )
        return checks

    def _incenter_fermat_not_equifacetal(
        self, rng: np.random.Generator, samples: int
    ) -> List[CheckResult]:
        a, b, c = scan_if_base()
        simplex = coincident_IF_simplex(a, b, c, self.tol)
        center_f, mode = fermat_torricelli(simplex, self.tol)
        gap = float(np.linalg.norm(incenter(simplex)[0] - center_f))
        report = classify(simplex, self.tol)
        return [
            self._at_most("incenter_is_fermat", gap, 1e-8, detail=f"base ({a}, {b}, {c:.2f})"),
            self._flag("fermat_floating", mode.kind == "floating"),
            self._flag("not_equifacetal", report.equifacetal is False),
            self._raises(
                "equilateral_base_rejected",
                lambda: coincident_IF_simplex(1.0, 1.0, 1.0, self.tol),
                PreconditionError,
            ),
        ]

    def _equiradial_not_equiareal(self, rng: np.random.Generator, samples: int) -> List[CheckResult]:
        checks: List[CheckResult] = []
        for dimension in (4, 5):
            simplex = equiradial_not_equiareal(dimension)
            report = classify(simplex, self.tol)
            checks += [
                self._flag(f"equiradial_d{dimension}", report.equiradial),
                self._flag(f"not_equiareal_d{dimension}", not report.equiareal),
                self._at_least(
                    f"facet_volume_spread_d{dimension}",
                    relative_spread(facet_volumes(simplex)),
                    1e-3,
                ),
            ]

        simplex = equiradial_not_equiareal(4)
        apex_edge = float(np.linalg.norm(simplex.points[-1] - simplex.points[0]))
        radii = facet_circumradii(simplex)
        checks += [
            self._at_most("apex_edge_d4", abs(apex_edge - 1.0 / np.sqrt(2.0)), 1e-9),
            self._at_least(
                "apex_edge_reaches_base", apex_edge, regular_simplex_circumradius(3)
            ),
            self._at_most(
                "isosceles_circumradius_d4",
                abs(
                    isosceles_circumradius(apex_edge, regular_simplex_circumradius(3))
                    - circumcenter(simplex)[1]
                ),
                1e-9,
            ),
            self._at_most(
                "facet_circumradii_d4",
                float(np.max(np.abs(radii - np.sqrt(3.0 / 8.0)))),
                1e-9,
            ),
            self._raises("d3_rejected", lambda: equiradial_not_equiareal(3), PreconditionError),
        ]
        return checks

    def _tangent_length_tetrahedron(self, rng: np.random.Generator) -> Simplex:
        tangents = rng.uniform(1.0, 2.0, size=4)
        entries = tangents[:, None] + tangents[None, :]
        np.fill_diagonal(entries, 0.0)
        return simplex_from_distances(DistanceMatrix(entries=entries.tolist()), self.tol)

    def _one_center_regular(self, rng: np.random.Generator, samples: int) -> List[CheckResult]:
        """The edge-tangent sphere is centered at C exactly for regular simplices"""
        candidates: List[Simplex] = [regular_simplex(d) for d in (2, 3, 4, 5)]
        candidates += self._corpus(rng, 2, samples)
        candidates += [self._tangent_length_tetrahedron(rng) for _ in range(samples)]

        disagreements = 0
        missing = 0
        for simplex in candidates:
            edge_sphere = one_center(simplex, self.tol)
            if edge_sphere is None:
                missing += 1
                continue
            center_c, radius = circumcenter(simplex)
            gap = float(np.linalg.norm(edge_sphere[0] - center_c))
            if (gap <= self.tol.abs_tol * (1.0 + radius)) != is_regular(simplex, self.tol):
                disagreements += 1
        return [
            self._count("one_center_exists", missing, len(candidates)),
            self._count("one_center_is_circumcenter_iff_regular", disagreements, len(candidates)),
        ]
