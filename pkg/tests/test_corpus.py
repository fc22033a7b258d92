"""Seeded corpora and their constraints."""

import numpy as np
import pytest
from numpy.testing import assert_allclose
from pydantic import ValidationError

from simplexcenters.models.errors import GenerationError
from simplexcenters.models.verification import RandomCorpusSpec
from simplexcenters.services.centers import centroid, circumcenter
from simplexcenters.services.classify import is_equiareal, is_equifacetal, is_isosceles
from simplexcenters.services.corpus import (
    balanced_unit_vectors,
    check_constraint,
    generate_corpus,
    random_acute_triangle,
    well_conditioned,
)


class TestDeterminism:
    def test_same_seed_same_corpus(self):
        spec = RandomCorpusSpec(dimension=3, count=5, seed=7)
        first = [s.vertices for s in generate_corpus(spec)]
        second = [s.vertices for s in generate_corpus(spec)]
        assert first == second

    def test_different_seed_differs(self):
        first = generate_corpus(RandomCorpusSpec(dimension=3, count=1, seed=1))
        second = generate_corpus(RandomCorpusSpec(dimension=3, count=1, seed=2))
        assert first[0].vertices != second[0].vertices

    def test_range_respected(self):
        corpus = generate_corpus(RandomCorpusSpec(dimension=4, count=5, low=2.0, high=3.0))
        for simplex in corpus:
            assert simplex.points.min() >= 2.0 and simplex.points.max() <= 3.0
            assert well_conditioned(simplex.points)


class TestConstraints:
    def test_unit_circumradius(self, tol):
        for simplex in generate_corpus(
            RandomCorpusSpec(dimension=3, count=5, constraint="unit_circumradius"), tol
        ):
            center, radius = circumcenter(simplex)
            assert radius == pytest.approx(1.0)
            assert_allclose(center, 0.0, atol=1e-9)

    def test_centered(self, tol):
        for simplex in generate_corpus(
            RandomCorpusSpec(dimension=5, count=5, constraint="centered"), tol
        ):
            assert_allclose(centroid(simplex), 0.0, atol=1e-12)

    def test_balanced(self, tol):
        spec = RandomCorpusSpec(dimension=4, count=5, constraint="balanced")
        for simplex in generate_corpus(spec, tol):
            assert_allclose(simplex.points.sum(axis=0), 0.0, atol=1e-12)
            assert check_constraint(simplex, spec, tol)

    def test_equiareal(self, tol):
        for simplex in generate_corpus(
            RandomCorpusSpec(dimension=3, count=3, constraint="equiareal"), tol
        ):
            assert is_equiareal(simplex, tol)

    def test_acute_base(self, tol):
        tetrahedra = generate_corpus(
            RandomCorpusSpec(dimension=3, count=3, constraint="acute_base"), tol
        )
        assert all(is_equifacetal(simplex, tol) for simplex in tetrahedra)
        lifts = generate_corpus(
            RandomCorpusSpec(dimension=4, count=3, constraint="acute_base"), tol
        )
        assert all(is_isosceles(simplex, tol) == 5 for simplex in lifts)

    def test_acute_base_dimension_bound(self, tol):
        with pytest.raises(GenerationError):
            generate_corpus(RandomCorpusSpec(dimension=5, count=1, constraint="acute_base"), tol)

    def test_balanced_needs_two_dimensions(self, tol):
        with pytest.raises(GenerationError):
            generate_corpus(RandomCorpusSpec(dimension=1, count=1, constraint="balanced"), tol)


class TestDraws:
    def test_acute_triangle(self, rng):
        for _ in range(20):
            a, b, c = random_acute_triangle(rng)
            assert a <= b <= c and c**2 < a**2 + b**2

    def test_balanced_unit_vectors(self, rng):
        vectors = balanced_unit_vectors(rng, 2)
        assert vectors.shape == (3, 2)
        assert_allclose(np.linalg.norm(vectors, axis=1), 1.0)


class TestSpec:
    def test_inverted_range(self):
        with pytest.raises(ValidationError):
            RandomCorpusSpec(dimension=2, count=1, low=1.0, high=0.0)

    def test_unknown_constraint(self):
        with pytest.raises(ValidationError):
            RandomCorpusSpec(dimension=2, count=1, constraint="spherical")

    def test_positive_count(self):
        with pytest.raises(ValidationError):
            RandomCorpusSpec(dimension=2, count=0)
