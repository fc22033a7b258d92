from abc import ABC
from typing import Callable, Dict, List, Optional, Sequence
import logging

import numpy as np

from simplexcenters.config.settings import Settings
from simplexcenters.models.constructions import CheckResult
from simplexcenters.models.errors import SimplexError, UnknownNameError
from simplexcenters.models.geometry import Simplex, Tolerance
from simplexcenters.models.verification import RandomCorpusSpec
from simplexcenters.services.corpus import generate_corpus

logger = logging.getLogger(__name__)

Suite = Callable[[np.random.Generator, int], List[CheckResult]]


class BaseVerifier(ABC):
    """Base class for all verifiers: one suite method per theorem id"""

    family: str = "Base"

    def __init__(self, tolerance: Tolerance, settings: Settings):
        self.tol = tolerance
        self.settings = settings
        self.suites: Dict[str, Suite] = {}

    @property
    def coincidence_threshold(self) -> float:
        """Absolute distance under which two computed centers count as equal"""
        return 10.0 * self.tol.abs_tol

    def run(self, theorem_id: str, seed: int, samples: int) -> List[CheckResult]:
        """Run one suite with a generator seeded from ``seed``"""
        if theorem_id not in self.suites:
            raise UnknownNameError(f"{self.family} verifier has no suite {theorem_id}")
        rng = np.random.default_rng(seed)
        return self.suites[theorem_id](rng, samples)

    def _at_most(
        self, name: str, value: float, threshold: float, detail: Optional[str] = None
    ) -> CheckResult:
        """Passes when the measured residual does not exceed the threshold"""
        return CheckResult(
            name=name,
            passed=bool(value <= threshold),
            value=float(value),
            threshold=float(threshold),
            detail=detail,
        )

    def _at_least(
        self, name: str, value: float, threshold: float, detail: Optional[str] = None
    ) -> CheckResult:
        """Passes when the measured separation exceeds the threshold"""
        return CheckResult(
            name=name,
            passed=bool(value > threshold),
            value=float(value),
            threshold=float(threshold),
            detail=detail,
        )

    def _flag(self, name: str, passed: bool, detail: Optional[str] = None) -> CheckResult:
        return CheckResult(name=name, passed=bool(passed), detail=detail)

    def _count(self, name: str, failures: int, total: int) -> CheckResult:
        """Passes when no sample failed"""
        return CheckResult(
            name=name,
            passed=failures == 0,
            value=float(failures),
            threshold=0.0,
            detail=f"{failures} of {total} samples failed",
        )

    def _raises(self, name: str, call: Callable[[], object], error: type = SimplexError) -> CheckResult:
        """Passes when ``call`` is rejected with the given domain error"""
        try:
            call()
        except error as e:
            return self._flag(name, True, detail=str(e))
        return self._flag(name, False, detail="accepted")

    def _corpus(
        self,
        rng: np.random.Generator,
        dimension: int,
        count: int,
        constraint: Optional[str] = None,
    ) -> List[Simplex]:
        """Corpus seeded from the suite generator so suites stay reproducible"""
        seed = int(rng.integers(0, 2**31 - 1))
        spec = RandomCorpusSpec(
            dimension=dimension, count=count, constraint=constraint, seed=seed
        )
        return generate_corpus(spec, self.tol)

    @staticmethod
    def _split(samples: int, dimensions: Sequence[int]) -> Dict[int, int]:
        """Spread a sample budget over dimensions, at least one each"""
        share = max(1, samples // len(dimensions))
        return {d: share for d in dimensions}

    @staticmethod
    def _max_pairwise(points: Sequence[np.ndarray]) -> float:
        return max(
            float(np.linalg.norm(p - q))
            for i, p in enumerate(points)
            for q in points[i + 1 :]
        )

    @staticmethod
    def _min_pairwise(points: Sequence[np.ndarray]) -> float:
        return min(
            float(np.linalg.norm(p - q))
            for i, p in enumerate(points)
            for q in points[i + 1 :]
        )
