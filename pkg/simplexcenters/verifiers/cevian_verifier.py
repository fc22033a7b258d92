from typing import List
import logging

import numpy as np

from simplexcenters.models.constructions import CheckResult
from simplexcenters.models.errors import CevianUndefinedError, PreconditionError
from simplexcenters.services.cevians import cevian_feet, lemma52_structure, theorem51_suite
from simplexcenters.services.constructions import (
    equally_inclined_basis,
    exterior_circumcenter_equal_cevians,
    split_sum_unit_vectors,
)
from simplexcenters.services.core_geometry import (
    affine_independence,
    barycentric,
    regular_simplex,
)
from simplexcenters.services.corpus import random_unit_vector, unit_circumradius
from simplexcenters.utils.decorators import handle_verifier_errors
from simplexcenters.verifiers.base_verifier import BaseVerifier

logger = logging.getLogger(__name__)

# (d, r) pairs with 2 <= r < (d+1)/2
EXTERIOR_CASES = [(4, 2), (5, 2), (6, 2), (6, 3)]


class CevianVerifier(BaseVerifier):
    """Suites on equal cevians through the centroid, Fermat point and circumcenter"""

    family = "Cevian"

    def __init__(self, tolerance, settings):
        super().__init__(tolerance, settings)
        self.suites = {
            "T5.1": self._four_conditions,
            "L5.2": self._circumcenter_partition,
            "L5.3": self._equally_inclined_vectors,
            "L5.4": self._split_sum_vectors,
            "T5.5": self._exterior_circumcenter,
        }

    @handle_verifier_errors("Cevian")
    def run(self, theorem_id: str, seed: int, samples: int) -> List[CheckResult]:
        return super().run(theorem_id, seed, samples)

    def _four_conditions(self, rng: np.random.Generator, samples: int) -> List[CheckResult]:
        """The four equal-cevian conditions agree on random and balanced simplices"""
        disagreements = 0
        decisive = 0
        for dimension, count in self._split(samples, (2, 3, 4, 5)).items():
            for simplex in self._corpus(rng, dimension, count):
                verdict = theorem51_suite(simplex, self.tol)
                if verdict.decisive:
                    decisive += 1
                    if not verdict.consistent:
                        disagreements += 1
                        logger.debug(f"Equal-cevian conditions disagree: {verdict.conditions}")

        balanced_failures = 0
        balanced_total = 0
        for dimension, count in self._split(max(4, samples // 10), (2, 3, 4, 5)).items():
            for simplex in self._corpus(rng, dimension, count, "balanced"):
                balanced_total += 1
                verdict = theorem51_suite(simplex, self.tol)
                if not (verdict.decisive and all(verdict.conditions)):
                    balanced_failures += 1

        return [
            self._count("conditions_agree", disagreements, decisive),
            self._count("balanced_all_conditions", balanced_failures, balanced_total),
        ]

    def _circumcenter_partition(self, rng: np.random.Generator, samples: int) -> List[CheckResult]:
        wrong_partition = 0
        worst_residual = 0.0
        for dimension, r in EXTERIOR_CASES:
            structure = lemma52_structure(exterior_circumcenter_equal_cevians(dimension, r), self.tol)
            if structure is None or structure.r != r:
                wrong_partition += 1
                continue
            worst_residual = max(worst_residual, structure.residual)

        regular_structure = lemma52_structure(unit_circumradius(regular_simplex(4)), self.tol)

        found_on_random = 0
        for simplex in self._corpus(rng, 3, samples, "unit_circumradius"):
            if lemma52_structure(simplex, self.tol) is not None:
                found_on_random += 1

        return [
            self._count("partition_size", wrong_partition, len(EXTERIOR_CASES)),
            self._at_most("weighted_vertex_sum", worst_residual, 1e-9),
            self._flag(
                "regular_has_empty_partition",
                regular_structure is not None and regular_structure.r == 0,
            ),
            self._count("random_has_no_partition", found_on_random, samples),
        ]

    def _equally_inclined_vectors(self, rng: np.random.Generator, samples: int) -> List[CheckResult]:
        worst_norm = 0.0
        worst_angle = 0.0
        worst_sum = 0.0
        for _ in range(samples):
            dim = int(rng.integers(2, 7))
            direction = random_unit_vector(rng, dim)
            t = float(rng.uniform(0.05, 0.95) * dim * rng.choice([-1.0, 1.0]))
            basis = equally_inclined_basis(direction, t, dim, self.tol)

            gram = basis @ basis.T
            off_diagonal = gram[~np.eye(dim, dtype=bool)]
            worst_norm = max(worst_norm, float(np.max(np.abs(np.diag(gram) - 1.0))))
            worst_angle = max(worst_angle, float(np.ptp(off_diagonal)))
            worst_sum = max(worst_sum, float(np.linalg.norm(basis.sum(axis=0) - t * direction)))

        return [
            self._at_most("unit_norms", worst_norm, 1e-10),
            self._at_most("equal_angles", worst_angle, 1e-10),
            self._at_most("sum_along_direction", worst_sum, 1e-10),
            self._raises(
                "t_out_of_range_rejected",
                lambda: equally_inclined_basis([1.0, 0.0, 0.0], 3.0, 3, self.tol),
                PreconditionError,
            ),
            self._raises(
                "zero_t_rejected",
                lambda: equally_inclined_basis([1.0, 0.0, 0.0], 0.0, 3, self.tol),
                PreconditionError,
            ),
        ]

    def _split_sum_vectors(self, rng: np.random.Generator, samples: int) -> List[CheckResult]:
        worst_relation = 0.0
        worst_norm = 0.0
        dependent = 0
        for _ in range(samples):
            dimension = int(rng.integers(3, 7))
            r = int(rng.integers(2, dimension))
            while True:
                b, c = rng.uniform(-5.0, 5.0, size=2)
                if min(abs(b), abs(c)) > 0.1 and abs(b * r + c * (dimension - r + 1)) > 0.5:
                    break
            vectors = split_sum_unit_vectors(float(b), float(c), r, dimension, self.tol)
            relation = b * vectors[:r].sum(axis=0) + c * vectors[r:].sum(axis=0)
            worst_relation = max(worst_relation, float(np.linalg.norm(relation)))
            worst_norm = max(worst_norm, float(np.max(np.abs(np.linalg.norm(vectors, axis=1) - 1.0))))
            if not affine_independence(vectors.tolist(), self.tol):
                dependent += 1

        # b = 5, c = -3 at d = 4, r = 2
        vectors = split_sum_unit_vectors(5.0, -3.0, 2, 4, self.tol)
        fixed = float(np.linalg.norm(5.0 * vectors[:2].sum(axis=0) - 3.0 * vectors[2:].sum(axis=0)))
        return [
            self._at_most("weighted_relation", worst_relation, 1e-9),
            self._at_most("unit_norms", worst_norm, 1e-10),
            self._count("affinely_independent", dependent, samples),
            self._at_most("relation_b5_c3", fixed, 1e-10),
        ]

    def _exterior_circumcenter(self, rng: np.random.Generator, samples: int) -> List[CheckResult]:
        """Equal cevians through an exterior circumcenter exist exactly from d = 4 on"""
        worst_spread = 0.0
        worst_min_weight = -np.inf
        for dimension, r in EXTERIOR_CASES[:2]:
            simplex = exterior_circumcenter_equal_cevians(dimension, r)
            origin = np.zeros(dimension)
            report = cevian_feet(simplex, origin, self.tol)
            worst_spread = max(worst_spread, report.spread)
            worst_min_weight = max(worst_min_weight, float(barycentric(simplex, origin).array.min()))

        exterior_equal = 0
        total = 0
        for dimension, count in self._split(samples, (2, 3)).items():
            for simplex in self._corpus(rng, dimension, count, "unit_circumradius"):
                total += 1
                try:
                    structure = lemma52_structure(simplex, self.tol)
                except CevianUndefinedError:
                    continue
                if structure is None or structure.r == 0:
                    continue
                if barycentric(simplex, np.zeros(dimension)).array.min() < -self.tol.abs_tol:
                    exterior_equal += 1

        return [
            self._at_most("equal_cevians", worst_spread, 1e-9),
            self._at_most("circumcenter_exterior", worst_min_weight, -1e-3),
            self._count("no_exterior_instance_below_d4", exterior_equal, total),
            self._raises("d3_rejected", lambda: exterior_circumcenter_equal_cevians(3, 1), PreconditionError),
        ]
