"""Cevian feet, the equal-length criterion and the four-way equivalence."""

import numpy as np
import pytest
from hypothesis import given, settings as hyp_settings, strategies as st
from numpy.testing import assert_allclose

from simplexcenters.models.errors import CevianUndefinedError, PreconditionError
from simplexcenters.models.geometry import Simplex
from simplexcenters.services.centers import centroid, circumcenter
from simplexcenters.services.cevians import (
    cevian_feet,
    dependence_coefficients,
    foot_by_intersection,
    lemma52_structure,
    theorem51_suite,
)
from simplexcenters.services.constructions import exterior_circumcenter_equal_cevians
from simplexcenters.services.core_geometry import regular_simplex
from simplexcenters.services.corpus import (
    balanced_unit_vectors,
    random_simplex,
    unit_circumradius,
)


class TestCevianFeet:
    def test_medians_of_right_triangle(self, right_triangle, tol):
        report = cevian_feet(right_triangle, centroid(right_triangle), tol)
        assert_allclose(report.coefficients, [1.0 / 3.0] * 3)
        # Feet are the midpoints of the opposite sides
        assert_allclose(report.feet, [[0.5, 0.5], [0.0, 0.5], [0.5, 0.0]], atol=1e-12)
        assert_allclose(report.lengths, report.closed_form_lengths)
        assert not report.equal

    def test_regular_medians_equal(self, fixtures, tol):
        simplex = fixtures.get_fixture("reg3")
        report = cevian_feet(simplex, centroid(simplex), tol)
        assert report.equal
        assert report.spread < 1e-12

    def test_vertex_is_rejected(self, right_triangle, tol):
        with pytest.raises(CevianUndefinedError):
            cevian_feet(right_triangle, [0.0, 0.0], tol)

    def test_parallel_cevian_rejected(self, right_triangle, tol):
        # Weight 1 at A1: the line through A1 is parallel to the opposite side
        with pytest.raises(CevianUndefinedError):
            dependence_coefficients(right_triangle, [-1.0, 1.0], tol)

    @hyp_settings(max_examples=25, deadline=None)
    @given(seed=st.integers(0, 2**31 - 1), dimension=st.integers(2, 5))
    def test_feet_match_hyperplane_intersection(self, seed, dimension):
        simplex = random_simplex(np.random.default_rng(seed), dimension)
        point = centroid(simplex)
        report = cevian_feet(simplex, point)
        for j in range(simplex.vertex_count):
            assert_allclose(
                report.feet[j], foot_by_intersection(simplex, j, point), atol=1e-8
            )


class TestLemma52:
    def test_exterior_partition(self, tol):
        structure = lemma52_structure(exterior_circumcenter_equal_cevians(4, 2), tol)
        assert structure.r == 2
        assert structure.leading == [1, 2]
        assert structure.trailing == [3, 4, 5]
        assert_allclose(structure.coefficients, [5.0, 5.0, -3.0, -3.0, -3.0], atol=1e-8)
        assert structure.residual < 1e-9

    def test_regular_has_trivial_partition(self, tol):
        structure = lemma52_structure(unit_circumradius(regular_simplex(4)), tol)
        assert structure.r == 0

    def test_generic_simplex_has_none(self, rng, tol):
        simplex = unit_circumradius(random_simplex(rng, 3))
        assert lemma52_structure(simplex, tol) is None

    def test_requires_unit_sphere(self, corner_tetrahedron, tol):
        with pytest.raises(PreconditionError):
            lemma52_structure(corner_tetrahedron, tol)


class TestTheorem51Suite:
    def test_balanced_simplex_all_true(self, rng, tol):
        simplex = Simplex.from_points(balanced_unit_vectors(rng, 3))
        verdict = theorem51_suite(simplex, tol)
        assert verdict.consistent
        assert all(verdict.conditions)

    def test_skew_simplex_all_false(self, skew_tetrahedron, tol):
        verdict = theorem51_suite(skew_tetrahedron, tol)
        assert verdict.consistent
        assert not any(verdict.conditions)

    def test_exterior_circumcenter_breaks_the_chain(self, tol):
        simplex = exterior_circumcenter_equal_cevians(4, 2)
        verdict = theorem51_suite(simplex, tol)
        assert verdict.equal_cevians_circumcenter
        assert not verdict.circumcenter_inside
        assert not verdict.centroid_is_circumcenter
        assert verdict.spreads["circumcenter_min_weight"] < 0.0

    def test_circumcenter_report_flags_partition(self, tol):
        simplex = exterior_circumcenter_equal_cevians(5, 2)
        center, _ = circumcenter(simplex)
        assert cevian_feet(simplex, center, tol).lemma52_r == 2
