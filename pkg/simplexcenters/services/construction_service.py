import itertools
import logging
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from simplexcenters.config.settings import Settings
from simplexcenters.models.constructions import CheckResult, ConstructionResult
from simplexcenters.models.errors import InvalidInputError, UnknownNameError
from simplexcenters.models.geometry import Simplex, Tolerance
from simplexcenters.services.centers import (
    centroid,
    circumcenter,
    complementary_1_centroid,
    fermat_torricelli,
    incenter,
    monge_point,
    orthocenter,
)
from simplexcenters.services.cevians import cevian_feet
from simplexcenters.services.classify import classify, is_isosceles
from simplexcenters.services.config_loader import ConfigLoader
from simplexcenters.services.constructions import (
    coincident_IF_simplex,
    equiareal_equiradial_not_equifacetal,
    equifacetal_tetrahedron,
    equiradial_isosceles_over,
    equiradial_not_equiareal,
    exterior_circumcenter_equal_cevians,
    gram_recipe41,
    gram_thm41,
    gram_thm43,
    rhombus_fold_tetrahedron,
    scan_if_base,
    solve_equal_inradius_t,
    thm46_parameters,
    THM43_X,
)
from simplexcenters.services.core_geometry import barycentric, regular_simplex
from simplexcenters.utils.decorators import handle_errors

logger = logging.getLogger(__name__)

Built = Tuple[Simplex, Dict[str, Any]]


def _regular(params: Dict[str, Any], tol: Tolerance) -> Built:
    return regular_simplex(int(params["d"])), {}


def _equifacetal(params: Dict[str, Any], tol: Tolerance) -> Built:
    return equifacetal_tetrahedron(params["a"], params["b"], params["c"]), {}


def _rhombus_fold(params: Dict[str, Any], tol: Tolerance) -> Built:
    return rhombus_fold_tetrahedron(params["t"]), {}


def _equal_inradius_fold(params: Dict[str, Any], tol: Tolerance) -> Built:
    t = solve_equal_inradius_t()
    return rhombus_fold_tetrahedron(t), {"t": t}


def _incenter_fermat(params: Dict[str, Any], tol: Tolerance) -> Built:
    sides = (params["a"], params["b"], params["c"])
    if any(side is None for side in sides):
        sides = scan_if_base()
    a, b, c = sides
    return coincident_IF_simplex(a, b, c, tol), {"a": a, "b": b, "c": c}


def _equiradial_not_equiareal(params: Dict[str, Any], tol: Tolerance) -> Built:
    return equiradial_not_equiareal(int(params["d"])), {}


def _equiradial_lift(params: Dict[str, Any], tol: Tolerance) -> Built:
    base = equifacetal_tetrahedron(params["a"], params["b"], params["c"])
    return equiradial_isosceles_over(base, params["branch"], tol), {}


def _gram41(params: Dict[str, Any], tol: Tolerance) -> Built:
    x = float(params["x"])
    gram, simplex = gram_thm41(x, tol)
    return simplex, {"recipe": gram_recipe41(x).model_dump(), "gram": gram.gram}


def _gram43(params: Dict[str, Any], tol: Tolerance) -> Built:
    gram, simplex = gram_thm43(tol)
    return simplex, {"x": THM43_X, "gram": gram.gram}


def _equiareal_equiradial(params: Dict[str, Any], tol: Tolerance) -> Built:
    scale = float(params["h_squared_scale"])
    simplex = equiareal_equiradial_not_equifacetal(scale)
    return simplex, thm46_parameters(scale).model_dump()


def _exterior_cevians(params: Dict[str, Any], tol: Tolerance) -> Built:
    d, r = int(params["d"]), int(params["r"])
    return exterior_circumcenter_equal_cevians(d, r), {
        "b": 2 * d - 2 * r + 1,
        "c": -(2 * r - 1),
    }


BUILDERS: Dict[str, Callable[[Dict[str, Any], Tolerance], Built]] = {
    "regular": _regular,
    "equifacetal": _equifacetal,
    "rhombus_fold": _rhombus_fold,
    "equal_inradius_fold": _equal_inradius_fold,
    "incenter_fermat": _incenter_fermat,
    "equiradial_not_equiareal": _equiradial_not_equiareal,
    "equiradial_lift": _equiradial_lift,
    "gram41": _gram41,
    "gram43": _gram43,
    "equiareal_equiradial": _equiareal_equiradial,
    "exterior_cevians": _exterior_cevians,
}

CENTER_FUNCTIONS: Dict[str, Callable[[Simplex, Tolerance], Optional[np.ndarray]]] = {
    "centroid": lambda s, tol: centroid(s),
    "circumcenter": lambda s, tol: circumcenter(s)[0],
    "incenter": lambda s, tol: incenter(s)[0],
    "fermat_torricelli": lambda s, tol: fermat_torricelli(s, tol)[0],
    "monge": lambda s, tol: monge_point(s),
    "complementary_1_centroid": lambda s, tol: complementary_1_centroid(s),
    "orthocenter": lambda s, tol: orthocenter(s, tol),
}


class ConstructionService:
    """Builds registry constructions and post-verifies them against their expectations"""

    def __init__(self, settings: Settings, tolerance: Optional[Tolerance] = None):
        self.settings = settings
        self.tol = tolerance or settings.tolerance()
        self.config_loader = ConfigLoader(
            constructions_path=settings.constructions_config_path,
            verification_path=settings.verification_config_path,
        )

    def available(self) -> List[str]:
        return sorted(self.config_loader.get_constructions())

    @handle_errors("Construction")
    def build(self, name: str, overrides: Optional[Dict[str, Any]] = None) -> ConstructionResult:
        """Run one generator with registry defaults updated by ``overrides``"""
        config = self.config_loader.get_construction_config(name)
        builder = BUILDERS.get(config["builder"])
        if builder is None:
            raise UnknownNameError(
                f"Construction {name} names unknown builder {config['builder']}",
                available=sorted(BUILDERS),
            )

        params = dict(config.get("params") or {})
        unknown = sorted(set(overrides or {}) - set(params))
        if unknown:
            raise InvalidInputError(
                f"Construction {name} does not take {', '.join(unknown)}",
                accepted=sorted(params),
            )
        params.update(overrides or {})

        logger.info(f"Building {name} with {params}")
        simplex, extra = builder(params, self.tol)
        checks = self._check_expectations(simplex, config.get("expect") or {})
        result = ConstructionResult(
            name=name,
            description=config.get("description", ""),
            simplex=simplex,
            parameters={**params, **extra},
            checks=checks,
        )
        logger.info(f"Built {name}: {sum(c.passed for c in checks)}/{len(checks)} checks passed")
        return result

    def _check_expectations(self, simplex: Simplex, expect: Dict[str, Any]) -> List[CheckResult]:
        checks: List[CheckResult] = []
        _, radius = circumcenter(simplex)
        threshold = 10.0 * self.tol.abs_tol * (1.0 + radius)

        if "classify" in expect:
            report = classify(simplex, self.tol)
            for predicate, wanted in expect["classify"].items():
                actual = getattr(report, predicate)
                checks.append(
                    CheckResult(
                        name=f"{predicate}={str(wanted).lower()}",
                        passed=bool(actual == wanted),
                        value=report.witnesses.spreads.get(predicate),
                        threshold=self.tol.rel_tol,
                    )
                )

        if "coincide" in expect:
            points = self._centers(simplex, expect["coincide"])
            gap = max(
                float(np.linalg.norm(p - q)) for p, q in itertools.combinations(points, 2)
            )
            checks.append(
                CheckResult(
                    name=f"coincide({', '.join(expect['coincide'])})",
                    passed=gap <= threshold,
                    value=gap,
                    threshold=threshold,
                )
            )

        if "distinct" in expect:
            names = expect["distinct"]["centers"]
            min_gap = float(expect["distinct"]["min_gap"])
            points = self._centers(simplex, names)
            gap = min(float(np.linalg.norm(p - q)) for p, q in itertools.combinations(points, 2))
            checks.append(
                CheckResult(
                    name=f"distinct({', '.join(names)})",
                    passed=gap > min_gap,
                    value=gap,
                    threshold=min_gap,
                )
            )

        if "equal_cevians_through" in expect:
            point = self._centers(simplex, [expect["equal_cevians_through"]])[0]
            report = cevian_feet(simplex, point, self.tol)
            checks.append(
                CheckResult(
                    name=f"equal_cevians_through_{expect['equal_cevians_through']}",
                    passed=report.equal,
                    value=report.spread,
                    threshold=self.tol.rel_tol,
                )
            )

        if "exterior" in expect:
            lowest = float(barycentric(simplex, circumcenter(simplex)[0]).array.min())
            outside = lowest < -self.tol.abs_tol
            checks.append(
                CheckResult(
                    name="circumcenter_exterior",
                    passed=bool(outside == expect["exterior"]),
                    value=lowest,
                    threshold=-self.tol.abs_tol,
                )
            )

        if "isosceles" in expect:
            apex = is_isosceles(simplex, self.tol)
            checks.append(
                CheckResult(
                    name="isosceles",
                    passed=(apex is not None) == expect["isosceles"],
                    detail=None if apex is None else f"apex vertex {apex}",
                )
            )
        return checks

    def _centers(self, simplex: Simplex, names: List[str]) -> List[np.ndarray]:
        points = []
        for name in names:
            if name not in CENTER_FUNCTIONS:
                raise UnknownNameError(f"Unknown center: {name}", available=sorted(CENTER_FUNCTIONS))
            point = CENTER_FUNCTIONS[name](simplex, self.tol)
            if point is None:
                raise InvalidInputError(f"Center {name} does not exist for this simplex")
            points.append(point)
        return points
