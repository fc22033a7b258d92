"""Seeded random corpora of simplices, plain or satisfying a constraint."""

import logging
from typing import Iterator, List, Tuple

import numpy as np

from simplexcenters.config.settings import get_settings
from simplexcenters.models.errors import GenerationError, PreconditionError
from simplexcenters.models.geometry import DEFAULT_TOLERANCE, Simplex, Tolerance
from simplexcenters.models.verification import RandomCorpusSpec
from simplexcenters.services.centers import centroid, circumcenter
from simplexcenters.services.constructions import (
    equiareal_from_normals,
    equifacetal_tetrahedron,
    isosceles_over,
)
from simplexcenters.services.core_geometry import difference_singular_values

logger = logging.getLogger(__name__)


def well_conditioned(points: np.ndarray) -> bool:
    singular_values = difference_singular_values(points)
    return bool(
        singular_values[-1] >= get_settings().corpus_min_conditioning * singular_values[0]
    )


def _retry(draw, what: str):
    """Call ``draw`` until it returns a value, bounded by the configured retries"""
    retries = get_settings().corpus_max_retries
    for _ in range(retries):
        result = draw()
        if result is not None:
            return result
    logger.error(f"Gave up generating {what} after {retries} attempts")
    raise GenerationError(f"Could not generate {what} in {retries} attempts", retries=retries)


def random_simplex(
    rng: np.random.Generator, dimension: int, low: float = -1.0, high: float = 1.0
) -> Simplex:
    """Uniform coordinates in [low, high], rejecting ill-conditioned draws"""

    def draw():
        points = rng.uniform(low, high, size=(dimension + 1, dimension))
        return Simplex.from_points(points) if well_conditioned(points) else None

    return _retry(draw, f"a well-conditioned {dimension}-simplex")


def random_unit_vector(rng: np.random.Generator, dimension: int) -> np.ndarray:
    vector = rng.standard_normal(dimension)
    return vector / np.linalg.norm(vector)


def balanced_unit_vectors(rng: np.random.Generator, dimension: int) -> np.ndarray:
    """d+1 affinely independent unit vectors summing to zero.

    d-1 vectors are drawn freely; the last two are w/2 +- n sqrt(1 - |w|^2/4)
    with w the negated partial sum and n a unit vector orthogonal to w.
    """

    def draw():
        free = np.array([random_unit_vector(rng, dimension) for _ in range(dimension - 1)])
        remainder = -free.sum(axis=0) if dimension > 1 else np.zeros(dimension)
        length = float(np.linalg.norm(remainder))
        if length >= 2.0:
            return None

        normal = rng.standard_normal(dimension)
        if length > 0.0:
            normal -= (normal @ remainder) / length**2 * remainder
        normal /= np.linalg.norm(normal)
        half_chord = np.sqrt(1.0 - length**2 / 4.0)
        last = [remainder / 2.0 + half_chord * normal, remainder / 2.0 - half_chord * normal]
        points = np.vstack([free.reshape(-1, dimension), last])
        return points if well_conditioned(points) else None

    return _retry(draw, f"{dimension + 1} balanced unit vectors")


def random_acute_triangle(rng: np.random.Generator) -> Tuple[float, float, float]:
    """Sides drawn from [1, 2], kept when the triangle is clearly acute"""

    def draw():
        a, b, c = sorted(rng.uniform(1.0, 2.0, size=3))
        return (float(a), float(b), float(c)) if c**2 < 0.95 * (a**2 + b**2) else None

    return _retry(draw, "an acute triangle")


def random_isometry(rng: np.random.Generator, dimension: int) -> Tuple[np.ndarray, np.ndarray]:
    """Uniform orthogonal matrix (QR with sign fix) and a shift in [-1, 1]^d"""
    q, r = np.linalg.qr(rng.standard_normal((dimension, dimension)))
    q = q * np.sign(np.diag(r))
    return q, rng.uniform(-1.0, 1.0, size=dimension)


def unit_circumradius(simplex: Simplex) -> Simplex:
    center, radius = circumcenter(simplex)
    return Simplex.from_points((simplex.points - center) / radius)


def centered_at_centroid(simplex: Simplex) -> Simplex:
    return Simplex.from_points(simplex.points - centroid(simplex))


def acute_base_simplex(rng: np.random.Generator, dimension: int) -> Simplex:
    """Equifacetal tetrahedron over a random acute triangle, or an isosceles lift of it"""
    base = equifacetal_tetrahedron(*random_acute_triangle(rng))
    if dimension == 3:
        return base
    if dimension == 4:
        _, radius = circumcenter(base)
        return isosceles_over(base, float(rng.uniform(0.25, 2.0)) * radius)
    raise GenerationError(f"acute_base corpora exist for d in (3, 4), got {dimension}")


def _constrained(rng: np.random.Generator, spec: RandomCorpusSpec) -> Simplex:
    d = spec.dimension
    if spec.constraint is None:
        return random_simplex(rng, d, spec.low, spec.high)
    if spec.constraint == "unit_circumradius":
        return unit_circumradius(random_simplex(rng, d, spec.low, spec.high))
    if spec.constraint == "centered":
        return centered_at_centroid(random_simplex(rng, d, spec.low, spec.high))
    if spec.constraint == "balanced":
        return Simplex.from_points(balanced_unit_vectors(rng, d))
    if spec.constraint == "equiareal":

        def draw():
            try:
                simplex = equiareal_from_normals(balanced_unit_vectors(rng, d))
            except PreconditionError:
                return None
            return simplex if well_conditioned(simplex.points) else None

        return _retry(draw, f"an equiareal {d}-simplex")
    return acute_base_simplex(rng, d)


def check_constraint(
    simplex: Simplex, spec: RandomCorpusSpec, tol: Tolerance = DEFAULT_TOLERANCE
) -> bool:
    """Post-verification of the corpus constraint"""
    if spec.constraint in ("unit_circumradius", "balanced"):
        return bool(np.max(np.abs(np.linalg.norm(simplex.points, axis=1) - 1.0)) <= tol.rel_tol)
    if spec.constraint == "centered":
        return bool(np.linalg.norm(centroid(simplex)) <= tol.abs_tol * (1.0 + np.abs(simplex.points).max()))
    return True


def iter_corpus(spec: RandomCorpusSpec, tol: Tolerance = DEFAULT_TOLERANCE) -> Iterator[Simplex]:
    """Deterministic stream of ``spec.count`` simplices for ``spec.seed``"""
    if spec.dimension < 2 and spec.constraint in ("balanced", "equiareal"):
        raise GenerationError(f"Constraint {spec.constraint} needs d >= 2")
    rng = np.random.default_rng(spec.seed)
    for _ in range(spec.count):
        simplex = _constrained(rng, spec)
        if not check_constraint(simplex, spec, tol):
            raise GenerationError(f"Generated simplex violates constraint {spec.constraint}")
        yield simplex


def generate_corpus(spec: RandomCorpusSpec, tol: Tolerance = DEFAULT_TOLERANCE) -> List[Simplex]:
    logger.info(
        f"Generating {spec.count} {spec.dimension}-simplices (seed={spec.seed}, constraint={spec.constraint})"
    )
    return list(iter_corpus(spec, tol))
