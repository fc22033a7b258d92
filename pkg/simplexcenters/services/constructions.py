"""Deterministic generators for the examples and counterexamples of the
simplex-center theory: tetrahedra with equal facet inradii, equifacetal and
isosceles simplices, Gram-matrix recipes and equal-cevian configurations."""

import logging
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.linalg import null_space
from scipy.optimize import brentq

from simplexcenters.config.settings import get_settings
from simplexcenters.models.constructions import (
    GramRecipe41,
    Theorem46Parameters,
    TriangleMetrics,
)
from simplexcenters.models.errors import (
    ConvergenceError,
    NonAcuteTriangleError,
    PreconditionError,
)
from simplexcenters.models.geometry import DEFAULT_TOLERANCE, GramSpec, Simplex, Tolerance
from simplexcenters.services.centers import circumcenter, incenter
from simplexcenters.services.classify import facet_circumradii, relative_spread
from simplexcenters.services.core_geometry import (
    affine_independence,
    regular_simplex,
    regular_simplex_circumradius,
    simplex_from_gram,
)

logger = logging.getLogger(__name__)

SQRT3 = float(np.sqrt(3.0))
SQRT15 = float(np.sqrt(15.0))


# Scalar root finding


def bracket_sign_change(func: Callable[[float], float], grid: Sequence[float]) -> Tuple[float, float]:
    """First consecutive pair of grid points where ``func`` changes sign"""
    values = [func(x) for x in grid]
    for lo, hi, f_lo, f_hi in zip(grid, grid[1:], values, values[1:]):
        if f_lo == 0.0:
            return lo, lo
        if np.sign(f_lo) != np.sign(f_hi):
            return lo, hi
    raise ConvergenceError(
        f"No sign change on [{grid[0]:.6g}, {grid[-1]:.6g}]",
        residual=float(min(abs(v) for v in values)),
    )


def find_root(func: Callable[[float], float], lo: float, hi: float) -> float:
    """brentq with the configured tolerance, reported as a domain error on failure"""
    if lo == hi:
        return lo
    settings = get_settings()
    try:
        return float(
            brentq(
                func,
                lo,
                hi,
                xtol=settings.bisection_xtol,
                maxiter=settings.bisection_max_iterations,
            )
        )
    except (ValueError, RuntimeError) as e:
        logger.error(f"Root finding on [{lo}, {hi}] failed: {e}")
        raise ConvergenceError(f"Root finding on [{lo}, {hi}] failed: {e}")


# Triangles


def triangle_metrics(
    a: float, b: float, c: float, tol: Tolerance = DEFAULT_TOLERANCE
) -> TriangleMetrics:
    sides = sorted([a, b, c])
    if sides[0] <= 0.0 or sides[0] + sides[1] <= sides[2]:
        raise PreconditionError(
            f"Sides ({a}, {b}, {c}) violate the strict triangle inequality",
            residual=float(sides[2] - sides[0] - sides[1]),
        )

    perimeter = a + b + c
    q = perimeter * (-a + b + c) * (a - b + c) * (a + b - c)
    area = float(np.sqrt(q)) / 4.0
    u = a**2 + b**2 + c**2
    v = a**2 * b**2 + b**2 * c**2 + c**2 * a**2
    w = a**2 * b**2 * c**2
    circumradius_sq = w / q

    cosines = np.array(
        [
            (b**2 + c**2 - a**2) / (2 * b * c),
            (c**2 + a**2 - b**2) / (2 * c * a),
            (a**2 + b**2 - c**2) / (2 * a * b),
        ]
    )
    cos_product = float(np.prod(cosines))
    largest = sides[2] ** 2 - sides[0] ** 2 - sides[1] ** 2

    return TriangleMetrics(
        a=a,
        b=b,
        c=c,
        area=area,
        circumradius=float(np.sqrt(circumradius_sq)),
        inradius=2.0 * area / perimeter,
        u=u,
        v=v,
        w=w,
        q=q,
        acute=largest < 0.0,
        right=abs(largest) <= tol.rel_tol * u,
        cos_product=cos_product,
        identity_residual=abs(u - 8.0 * circumradius_sq * (1.0 + cos_product)) / u,
    )


# Tetrahedra with equal facet inradii


def rhombus_fold_tetrahedron(t: float) -> Simplex:
    """Fold the rhombus ABCD (unit sides, AC = 1) about AC until BD = t"""
    if not 0.0 < t < SQRT3:
        raise PreconditionError(f"Fold parameter t={t} must lie in (0, sqrt(3))")
    cos_theta = 1.0 - 2.0 * t**2 / 3.0
    sin_theta = float(np.sqrt(max(1.0 - cos_theta**2, 0.0)))
    half_height = SQRT3 / 2.0
    return Simplex.from_points(
        [
            [0.0, 0.0, 0.0],
            [0.5, half_height, 0.0],
            [1.0, 0.0, 0.0],
            [0.5, half_height * cos_theta, half_height * sin_theta],
        ]
    )


def folded_inradius_sq4(t: float) -> float:
    """4 r(t)^2 for the facets with sides (1, 1, t)"""
    return t**2 * (2.0 - t) / (t + 2.0)


def solve_equal_inradius_t() -> float:
    """The fold t != 1 at which the (1, 1, t) facets share the inradius of (1, 1, 1)"""
    target = folded_inradius_sq4(1.0)

    def func(t: float) -> float:
        return folded_inradius_sq4(t) - target

    lo, hi = bracket_sign_change(func, list(np.linspace(1.05, SQRT3 - 0.01, 64)))
    root = find_root(func, lo, hi)
    logger.info(f"Equal-inradius fold parameter t = {root:.15f}")
    return root


# Equifacetal and isosceles simplices


def equifacetal_tetrahedron(a: float, b: float, c: float) -> Simplex:
    """Tetrahedron with opposite edges (a, a), (b, b), (c, c) inscribed in a box"""
    p_sq = (-(a**2) + b**2 + c**2) / 8.0
    q_sq = (a**2 - b**2 + c**2) / 8.0
    s_sq = (a**2 + b**2 - c**2) / 8.0
    smallest = min(p_sq, q_sq, s_sq)
    if smallest <= 0.0:
        logger.error(f"Sides ({a}, {b}, {c}) do not form an acute triangle")
        raise NonAcuteTriangleError(
            f"Equifacetal tetrahedron needs an acute triangle, got ({a}, {b}, {c})",
            residual=float(-smallest),
        )
    p, q, s = np.sqrt([p_sq, q_sq, s_sq])
    return Simplex.from_points([[p, q, s], [p, -q, -s], [-p, q, -s], [-p, -q, s]])


def centered(simplex: Simplex) -> Simplex:
    """Translate so the circumcenter sits at the origin"""
    center, _ = circumcenter(simplex)
    return Simplex.from_points(simplex.points - center)


def isosceles_over(
    base: Simplex, apex_height: float, tol: Tolerance = DEFAULT_TOLERANCE
) -> Simplex:
    """[base, P] with the base in x_d = 0 and P = (0, ..., 0, h)"""
    if apex_height <= 0.0:
        raise PreconditionError(f"Apex height must be positive, got {apex_height}")
    center, radius = circumcenter(base)
    offset = float(np.linalg.norm(center))
    if offset > tol.abs_tol * (1.0 + radius):
        raise PreconditionError(
            "Base circumcenter must be at the origin", residual=offset
        )

    embedded = np.hstack([base.points, np.zeros((base.vertex_count, 1))])
    apex = np.zeros(base.dimension + 1)
    apex[-1] = apex_height
    return Simplex.from_points(np.vstack([embedded, apex]))


def isosceles_circumradius(h_edge: float, base_circumradius: float) -> float:
    """Circumradius h^2 / (2 sqrt(h^2 - R_T^2)) of an isosceles simplex"""
    if not h_edge > base_circumradius > 0.0:
        raise PreconditionError(
            f"Apex edge {h_edge} must exceed the base circumradius {base_circumradius}"
        )
    return h_edge**2 / (2.0 * np.sqrt(h_edge**2 - base_circumradius**2))


def equiradial_isosceles_over(
    base: Simplex, branch: str = "-", tol: Tolerance = DEFAULT_TOLERANCE
) -> Simplex:
    """Lift an equiradial base to an equiradial isosceles simplex.

    With R_T the base circumradius and R_F the common facet circumradius, the
    apex edge h^2 = 2R_T^2 +- 2R_T sqrt(R_T^2 - R_F^2) makes every facet
    through the apex share the circumradius R_T.
    """
    if branch not in ("+", "-"):
        raise PreconditionError(f"Branch must be '+' or '-', got {branch!r}")
    radii = facet_circumradii(base)
    if relative_spread(radii) > tol.rel_tol:
        raise PreconditionError(
            "Base is not equiradial", residual=relative_spread(radii)
        )

    base = centered(base)
    _, base_radius = circumcenter(base)
    facet_radius = float(np.mean(radii))
    gap = base_radius**2 - facet_radius**2
    if gap <= 0.0:
        raise PreconditionError(
            "Base circumradius must exceed its facet circumradius", residual=-gap
        )

    sign = 1.0 if branch == "+" else -1.0
    h_sq = 2.0 * base_radius**2 + sign * 2.0 * base_radius * np.sqrt(gap)
    if h_sq <= base_radius**2:
        raise PreconditionError(
            f"Branch {branch} gives an apex edge that cannot reach the base",
            residual=float(base_radius**2 - h_sq),
        )
    return isosceles_over(base, float(np.sqrt(h_sq - base_radius**2)), tol)


def equiradial_not_equiareal(dimension: int) -> Simplex:
    """Isosceles d-simplex over a regular base, equiradial but not equiareal (d >= 4)"""
    if dimension < 4:
        raise PreconditionError(
            f"Equiradial non-equiareal isosceles simplices need d >= 4, got {dimension}"
        )
    base = regular_simplex(dimension - 1)
    face_radius = regular_simplex_circumradius(dimension - 2)
    apex_edge = face_radius / np.sqrt(1.0 - face_radius**2)
    base_radius = regular_simplex_circumradius(dimension - 1)
    if apex_edge <= base_radius:
        raise PreconditionError(
            "Apex edge does not reach the base", residual=float(base_radius - apex_edge)
        )
    logger.info(f"Equiradial isosceles {dimension}-simplex with apex edge {apex_edge:.12f}")
    return isosceles_over(base, float(np.sqrt(apex_edge**2 - base_radius**2)))


def base_inradius_ratio(a: float, b: float, c: float) -> float:
    """R / r of the equifacetal tetrahedron (a, b, c, a, b, c)"""
    base = equifacetal_tetrahedron(a, b, c)
    _, outer = circumcenter(base)
    _, inner = incenter(base)
    return outer / inner


def scan_if_base(delta: Optional[float] = None) -> Tuple[float, float, float]:
    """First acute (1, 1, c) with R/r of its equifacetal tetrahedron in (3 + delta, sqrt(15) - delta)"""
    delta = get_settings().if_base_scan_delta if delta is None else delta
    for step in range(1, 42):
        c = 1.0 + 0.01 * step
        ratio = base_inradius_ratio(1.0, 1.0, c)
        if 3.0 + delta < ratio < SQRT15 - delta:
            logger.info(f"Scanned base (1, 1, {c:.2f}) with R/r = {ratio:.6f}")
            return 1.0, 1.0, c
    raise PreconditionError(f"No acute (1, 1, c) base with R/r inside the window (delta={delta})")


def coincident_IF_simplex(
    a: float, b: float, c: float, tol: Tolerance = DEFAULT_TOLERANCE
) -> Simplex:
    """Isosceles 4-simplex over (a,b,c,a,b,c) whose incenter is its Fermat-Torricelli point.

    Both centers lie on the apex axis; the Fermat-Torricelli point sits at
    height R/sqrt(15) and the apex height is chosen so the incenter meets it.
    """
    if abs(a - b) <= tol.rel_tol * a and abs(b - c) <= tol.rel_tol * b:
        raise PreconditionError("Equilateral base gives the regular case R = 3r")
    base = equifacetal_tetrahedron(a, b, c)
    _, outer = circumcenter(base)
    _, inner = incenter(base)
    ratio = outer / inner
    if not 3.0 * (1.0 + tol.rel_tol) < ratio < SQRT15:
        raise PreconditionError(
            f"Base ratio R/r = {ratio:.9f} outside (3, sqrt(15))", residual=ratio
        )

    fermat_height = outer / SQRT15

    def incenter_gap(height: float) -> float:
        center, _ = incenter(isosceles_over(base, height, tol))
        return float(center[-1]) - fermat_height

    upper = 2.0 * fermat_height
    for _ in range(200):
        if incenter_gap(upper) > 0.0:
            break
        upper *= 2.0
    else:
        raise ConvergenceError("Could not bracket the apex height")

    height = find_root(incenter_gap, fermat_height, upper)
    logger.info(f"Incenter meets the Fermat-Torricelli point at apex height {height:.12f}")
    return isosceles_over(base, height, tol)


# Gram-matrix recipes


def gram_thm41_matrix(x: float) -> np.ndarray:
    z = -0.5 - x
    return np.array(
        [
            [1.0, x, x, z, z],
            [x, 1.0, z, x, z],
            [x, z, 1.0, z, x],
            [z, x, z, 1.0, x],
            [z, z, x, x, 1.0],
        ]
    )


def _complement_min_eigenvalue(x: float) -> float:
    """Smallest eigenvalue of the recipe restricted to the complement of (1,...,1)"""
    basis = null_space(np.ones((1, 5)))
    return float(np.linalg.eigvalsh(basis.T @ gram_thm41_matrix(x) @ basis)[0])


def thm41_feasible_interval() -> Tuple[float, float]:
    """Open interval of x where the recipe is PSD of rank 4, found numerically"""
    lower = find_root(_complement_min_eigenvalue, -2.0, 0.0)
    upper = find_root(_complement_min_eigenvalue, 0.0, 2.0)
    return lower, upper


def gram_recipe41(x: float) -> GramRecipe41:
    z = -0.5 - x
    return GramRecipe41(
        x=x,
        y=x,
        z=z,
        X=z,
        Y=x,
        Z=z,
        eigenvalues=np.linalg.eigvalsh(gram_thm41_matrix(x)).tolist(),
        valid_interval=thm41_feasible_interval(),
    )


def gram_thm41(x: float, tol: Tolerance = DEFAULT_TOLERANCE) -> Tuple[GramSpec, Simplex]:
    """Unit-circumradius 4-simplex whose centroid, circumcenter, incenter and
    Fermat-Torricelli point all sit at the origin"""
    gram = GramSpec(gram=gram_thm41_matrix(x).tolist())
    return gram, simplex_from_gram(gram, tol)


def thm41_facet_determinant(x: float) -> float:
    """Closed form (25/4)(1 - 2x - 4x^2) of every facet determinant"""
    return 6.25 * (1.0 - 2.0 * x - 4.0 * x**2)


THM43_X = 4.0 - float(np.sqrt(17.0))


def gram_thm43_matrix(x: float = THM43_X) -> np.ndarray:
    return np.array(
        [
            [1.0, x, x, -1.0 - 2.0 * x, x],
            [x, 1.0, 5.0 * x, x, x],
            [x, 5.0 * x, 1.0, x, x],
            [-1.0 - 2.0 * x, x, x, 1.0, x],
            [x, x, x, x, 1.0],
        ]
    )


def thm43_polynomial(x: float = THM43_X) -> float:
    return 4.0 - 20.0 * x - 4.0 * x**2 + 20.0 * x**3


def gram_thm43(tol: Tolerance = DEFAULT_TOLERANCE) -> Tuple[GramSpec, Simplex]:
    """Equiareal 4-simplex whose centroid, circumcenter and Fermat-Torricelli
    point are pairwise distinct"""
    gram = GramSpec(gram=gram_thm43_matrix().tolist())
    return gram, simplex_from_gram(gram, tol)


def _thm46_u(theta: float) -> float:
    return 4.0 * (2.0 * np.sin(theta) ** 2 + np.sin(2.0 * theta) ** 2)


def thm46_parameters(h_squared_scale: float = 1.0) -> Theorem46Parameters:
    """Isosceles triangle in the unit circle with u = 25/3 and the apex edge h^2 = u/5"""
    if h_squared_scale <= 0.0:
        raise PreconditionError("h_squared_scale must be positive")
    target = 25.0 / 3.0
    theta = find_root(lambda t: _thm46_u(t) - target, np.pi / 4.0, np.pi / 3.0)
    side = 2.0 * np.sin(theta)
    triangle = triangle_metrics(side, side, 2.0 * np.sin(2.0 * theta))

    u = triangle.u
    radius_sq = triangle.circumradius**2
    h_squared = h_squared_scale * u / 5.0
    apex_height_sq = h_squared - u / 8.0
    if apex_height_sq <= 0.0:
        raise PreconditionError(
            "Scaled apex edge does not reach the base", residual=-apex_height_sq
        )
    return Theorem46Parameters(
        triangle=triangle,
        base_angle=theta,
        u=u,
        h_squared=h_squared,
        apex_height=float(np.sqrt(apex_height_sq)),
        eq14_residual=h_squared - (2.0 * u - 15.0 * radius_sq),
        eq16_residual=2.0 * h_squared**2 - u * (h_squared - radius_sq),
    )


def equiareal_equiradial_not_equifacetal(h_squared_scale: float = 1.0) -> Simplex:
    parameters = thm46_parameters(h_squared_scale)
    triangle = parameters.triangle
    base = equifacetal_tetrahedron(triangle.a, triangle.b, triangle.c)
    return isosceles_over(base, parameters.apex_height)


# Equal cevians through an exterior circumcenter


def equally_inclined_basis(
    direction: Sequence[float], t: float, dim: int, tol: Tolerance = DEFAULT_TOLERANCE
) -> np.ndarray:
    """dim unit vectors with equal pairwise angles summing to t * V.

    B_j = (E_j + xV) / sqrt(1 + x^2), E_j the vertices of a centered unit
    regular simplex in the complement of V and dim x / sqrt(1 + x^2) = t.
    """
    direction = np.asarray(direction, dtype=float)
    if dim < 2 or direction.shape != (dim,):
        raise PreconditionError(f"Direction must be a vector of length dim >= 2, got {direction.shape}")
    if abs(np.linalg.norm(direction) - 1.0) > tol.abs_tol:
        raise PreconditionError("Direction must be a unit vector")
    if not -dim < t < dim or abs(t) <= tol.abs_tol:
        raise PreconditionError(f"t={t} must be non-zero and inside (-{dim}, {dim})")

    x = t / np.sqrt(dim**2 - t**2)
    gram = np.full((dim, dim), -1.0 / (dim - 1))
    np.fill_diagonal(gram, 1.0)
    spread = simplex_from_gram(GramSpec(gram=gram.tolist()), tol).points
    complement = null_space(direction[None, :])
    return (spread @ complement.T + x * direction) / np.sqrt(1.0 + x**2)


def split_sum_unit_vectors(
    b: float, c: float, r: int, dimension: int, tol: Tolerance = DEFAULT_TOLERANCE
) -> np.ndarray:
    """Affinely independent unit vectors with b (A_1+...+A_r) + c (A_{r+1}+...+A_{d+1}) = 0"""
    d = dimension
    if not 2 <= r <= d - 1:
        raise PreconditionError(f"r={r} must satisfy 2 <= r <= d-1 = {d - 1}")
    if b == 0.0 or c == 0.0:
        raise PreconditionError("Coefficients b and c must be non-zero")
    if abs(b * r + c * (d - r + 1)) <= tol.abs_tol:
        raise PreconditionError("b r + c (d - r + 1) must be non-zero")

    margin = get_settings().split_sum_margin
    scale = (1.0 + margin) * max(abs(c) / r, abs(b) / (d - r + 1))
    b_scaled, c_scaled = b / scale, c / scale

    vectors = np.zeros((d + 1, d))
    leading_axis = np.zeros(r)
    leading_axis[-1] = 1.0
    vectors[:r, :r] = equally_inclined_basis(leading_axis, -c_scaled, r, tol)

    trailing_axis = np.zeros(d - r + 1)
    trailing_axis[0] = 1.0
    vectors[r:, r - 1 :] = equally_inclined_basis(trailing_axis, b_scaled, d - r + 1, tol)

    if not affine_independence(vectors.tolist(), tol):
        raise PreconditionError("Split-sum unit vectors are affinely dependent")
    return vectors


def exterior_circumcenter_equal_cevians(dimension: int, r: int) -> Simplex:
    """Simplex inscribed in the unit sphere whose cevians through the
    exterior circumcenter all have the same length (d >= 4)"""
    if dimension < 4:
        raise PreconditionError(
            f"Equal cevians through an exterior circumcenter need d >= 4, got {dimension}"
        )
    if not 2 <= r < (dimension + 1) / 2.0:
        raise PreconditionError(f"r={r} must satisfy 2 <= r < (d+1)/2")
    b = 2 * dimension - 2 * r + 1
    c = -(2 * r - 1)
    logger.info(f"Split-sum construction with b={b}, c={c}, r={r}, d={dimension}")
    return Simplex.from_points(split_sum_unit_vectors(b, c, r, dimension))


def equiareal_from_normals(
    normals: Sequence[Sequence[float]], tol: Tolerance = DEFAULT_TOLERANCE
) -> Simplex:
    """The simplex {x : n_j . x <= 1} for unit normals summing to zero.

    The facet areas a_j satisfy sum a_j n_j = 0 and the only dependence
    among the normals is their plain sum, so every facet has the same area.
    """
    normals = np.asarray(normals, dtype=float)
    count, dim = normals.shape
    if count != dim + 1:
        raise PreconditionError(f"Need {dim + 1} normals in dimension {dim}, got {count}")
    residual = float(np.linalg.norm(normals.sum(axis=0)))
    if residual > tol.abs_tol * count:
        raise PreconditionError("Facet normals must sum to zero", residual=residual)

    vertices: List[np.ndarray] = []
    for i in range(count):
        others = np.delete(normals, i, axis=0)
        try:
            vertices.append(np.linalg.solve(others, np.ones(dim)))
        except np.linalg.LinAlgError:
            raise PreconditionError("Facet normals do not span the space")
    return Simplex.from_points(vertices)
