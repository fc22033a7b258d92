from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from simplexcenters.models.geometry import Simplex


class TriangleMetrics(BaseModel):
    """Metric invariants of a triangle with sides a, b, c"""

    a: float
    b: float
    c: float
    area: float = Field(description="K")
    circumradius: float = Field(description="R")
    inradius: float = Field(description="r = 2K/(a+b+c)")
    u: float = Field(description="a^2+b^2+c^2")
    v: float = Field(description="a^2b^2+b^2c^2+c^2a^2")
    w: float = Field(description="a^2b^2c^2 = R^2 Q")
    q: float = Field(description="16K^2 = 4v - u^2")
    acute: bool
    right: bool
    cos_product: float = Field(description="cos A cos B cos C")
    identity_residual: float = Field(
        description="|u - 8R^2(1 + cos A cos B cos C)| / u"
    )


class GramRecipe41(BaseModel):
    """One-parameter Gram family with coinciding centroid, circumcenter, incenter"""

    x: float
    y: float
    z: float
    X: float
    Y: float
    Z: float
    eigenvalues: List[float] = Field(description="Ascending spectrum of the Gram matrix")
    valid_interval: Tuple[float, float] = Field(
        description="Numerically determined open interval of PSD rank-4 parameters"
    )


class Theorem46Parameters(BaseModel):
    """Inputs of the equiareal, equiradial, non-equifacetal 4-simplex"""

    triangle: TriangleMetrics
    base_angle: float = Field(description="Base angle of the isosceles inscribed triangle")
    u: float
    h_squared: float = Field(description="Squared apex edge length")
    apex_height: float = Field(description="Height of the apex above the base")
    eq14_residual: float = Field(description="h^2 - (2u - 15R^2)")
    eq16_residual: float = Field(description="2h^4 - u(h^2 - R^2)")


class CheckResult(BaseModel):
    """One numeric check inside a construction or verification run"""

    name: str
    passed: bool
    value: Optional[float] = None
    threshold: Optional[float] = None
    detail: Optional[str] = None


class ConstructionResult(BaseModel):
    """A generated simplex plus its post-verification"""

    name: str
    description: str
    simplex: Simplex
    parameters: Dict[str, Any] = Field(default_factory=dict)
    checks: List[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)
