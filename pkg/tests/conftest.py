"""Shared fixtures: tolerances, a seeded generator and the named simplices."""

import numpy as np
import pytest

from simplexcenters.config.settings import Settings, get_settings
from simplexcenters.models.geometry import Simplex, Tolerance
from simplexcenters.services.fixture_manager import FixtureManager


@pytest.fixture
def tol() -> Tolerance:
    return Tolerance(abs_tol=1e-9, rel_tol=1e-8)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)


@pytest.fixture(scope="session")
def settings() -> Settings:
    return get_settings()


@pytest.fixture(scope="session")
def fixtures(settings) -> FixtureManager:
    return FixtureManager(settings.fixtures_dir)


@pytest.fixture
def right_triangle(fixtures) -> Simplex:
    return fixtures.get_fixture("right2")


@pytest.fixture
def corner_tetrahedron(fixtures) -> Simplex:
    return fixtures.get_fixture("corner3")


@pytest.fixture
def skew_tetrahedron() -> Simplex:
    """No two edges equal, not orthocentric, floating Fermat point"""
    return Simplex.from_points(
        [[0.0, 0.0, 0.0], [2.0, 0.1, 0.0], [0.3, 1.7, 0.2], [0.4, 0.5, 1.3]]
    )
