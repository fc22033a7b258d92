import asyncio
import logging
import time
from typing import Dict, List, Optional, Sequence

from simplexcenters.config.settings import Settings
from simplexcenters.models.errors import UnknownNameError
from simplexcenters.models.geometry import Tolerance
from simplexcenters.models.verification import THEOREM_IDS, VerificationRun
from simplexcenters.services.config_loader import ConfigLoader
from simplexcenters.utils.decorators import handle_errors
from simplexcenters.verifiers import (
    BaseVerifier,
    CevianVerifier,
    CoincidenceVerifier,
    GramVerifier,
    TetrahedronVerifier,
)

logger = logging.getLogger(__name__)


class VerificationService:
    """Theorem verification service - dispatches ids to the verifier families"""

    def __init__(self, settings: Settings, tolerance: Optional[Tolerance] = None):
        self.settings = settings
        self.tol = tolerance or settings.tolerance()

        self.config_loader = ConfigLoader(
            constructions_path=settings.constructions_config_path,
            verification_path=settings.verification_config_path,
        )

        # One verifier per theorem family, keyed as in verification.yaml
        self.verifiers: Dict[str, BaseVerifier] = {
            "tetrahedron": TetrahedronVerifier(self.tol, settings),
            "coincidence": CoincidenceVerifier(self.tol, settings),
            "gram": GramVerifier(self.tol, settings),
            "cevian": CevianVerifier(self.tol, settings),
        }

    def resolve_ids(self, requested: Sequence[str]) -> List[str]:
        """Expand 'all' and reject unknown ids before anything runs"""
        if any(theorem_id.lower() == "all" for theorem_id in requested):
            return list(THEOREM_IDS)
        unknown = [theorem_id for theorem_id in requested if theorem_id not in THEOREM_IDS]
        if unknown:
            raise UnknownNameError(
                f"Unknown theorem id: {', '.join(unknown)}", available=THEOREM_IDS
            )
        return list(requested)

    @handle_errors("Verification")
    def verify(self, theorem_id: str, seed: int = 0, samples: Optional[int] = None) -> VerificationRun:
        """Run one theorem suite and fold its checks into a verdict"""
        config = self.config_loader.get_suite_config(theorem_id)
        samples = int(config.get("samples", 1)) if samples is None else samples
        verifier = self.verifiers[config["verifier"]]

        start_time = time.time()
        checks = verifier.run(theorem_id, seed, samples)
        verdict = "pass" if all(check.passed for check in checks) else "fail"
        logger.info(
            f"{theorem_id}: {verdict} ({len(checks)} checks, {time.time() - start_time:.2f}s)"
        )
        return VerificationRun(
            theorem_id=theorem_id,
            seed=seed,
            samples=samples,
            tolerance=self.tol,
            verdict=verdict,
            details=checks,
        )

    async def verify_many(
        self,
        theorem_ids: Sequence[str],
        seed: int = 0,
        samples: Optional[int] = None,
        parallel: bool = False,
    ) -> List[VerificationRun]:
        """Run several suites; results come back in request order"""
        theorem_ids = self.resolve_ids(theorem_ids)
        if not parallel:
            return [self.verify(theorem_id, seed, samples) for theorem_id in theorem_ids]

        # Suites are pure, so they can run on worker threads in any order
        return list(
            await asyncio.gather(
                *(
                    asyncio.to_thread(self.verify, theorem_id, seed, samples)
                    for theorem_id in theorem_ids
                )
            )
        )
