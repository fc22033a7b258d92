from typing import List, Literal, Optional, get_args

from pydantic import BaseModel, Field, PositiveInt, model_validator

from simplexcenters.models.constructions import CheckResult
from simplexcenters.models.geometry import Tolerance

TheoremId = Literal[
    "T2.1",
    "T2.2",
    "T2.3",
    "T3.1",
    "T3.2",
    "T3.3",
    "T3.4",
    "T3.5",
    "T4.1",
    "T4.3",
    "T4.4",
    "T4.6",
    "L4.5",
    "T5.1",
    "L5.2",
    "L5.3",
    "L5.4",
    "T5.5",
]

THEOREM_IDS: List[str] = list(get_args(TheoremId))

CorpusConstraint = Literal[
    "unit_circumradius", "centered", "acute_base", "balanced", "equiareal"
]


class VerificationRun(BaseModel):
    """Outcome of one theorem suite"""

    theorem_id: TheoremId
    seed: int
    samples: int
    tolerance: Tolerance
    verdict: Literal["pass", "fail"]
    details: List[CheckResult] = Field(description="Per-check residuals")

    @model_validator(mode="after")
    def _verdict_matches_checks(self) -> "VerificationRun":
        expected = "pass" if all(check.passed for check in self.details) else "fail"
        if self.verdict != expected:
            raise ValueError(f"verdict {self.verdict} contradicts checks ({expected})")
        return self


class RandomCorpusSpec(BaseModel):
    """Request for a deterministic random corpus of simplices"""

    dimension: PositiveInt
    count: PositiveInt
    low: float = Field(default=-1.0, description="Lower coordinate bound")
    high: float = Field(default=1.0, description="Upper coordinate bound")
    constraint: Optional[CorpusConstraint] = None
    seed: int = 0

    @model_validator(mode="after")
    def _check_range(self) -> "RandomCorpusSpec":
        if not self.low < self.high:
            raise ValueError("Coordinate range must satisfy low < high")
        return self
