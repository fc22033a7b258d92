"""Facial-structure predicates and the classification report."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from simplexcenters.models.errors import PreconditionError
from simplexcenters.models.geometry import Simplex
from simplexcenters.services.classify import (
    classify,
    edge_square_sums,
    equifacetal_mismatch,
    facet_circumradii,
    facet_inradii,
    facet_inradii_equal,
    has_well_distributed_edges,
    is_equiareal,
    is_equifacetal,
    is_equiradial,
    is_isosceles,
    is_orthocentric,
    is_regular,
    relative_spread,
)
from simplexcenters.services.constructions import equifacetal_tetrahedron
from simplexcenters.services.core_geometry import regular_simplex


class TestRelativeSpread:
    def test_constant(self):
        assert relative_spread([2.0, 2.0, 2.0]) == 0.0

    def test_zero_mean(self):
        assert relative_spread([0.0, 0.0]) == 0.0

    def test_value(self):
        assert relative_spread([1.0, 3.0]) == pytest.approx(1.0)


class TestRegular:
    @pytest.mark.parametrize("name", ["reg2", "reg3", "reg4", "reg5", "reg6"])
    def test_regular_fixtures(self, fixtures, tol, name):
        simplex = fixtures.get_fixture(name)
        assert is_regular(simplex, tol)
        assert is_equiareal(simplex, tol)
        assert is_equiradial(simplex, tol)
        assert has_well_distributed_edges(simplex, tol)

    def test_right_triangle_not_regular(self, right_triangle, tol):
        assert not is_regular(right_triangle, tol)
        assert not is_equiareal(right_triangle, tol)


class TestEquifacetal:
    def test_box_tetrahedron(self, tol):
        simplex = equifacetal_tetrahedron(2.0, 2.2, 2.4)
        assert is_equifacetal(simplex, tol)
        assert is_equiareal(simplex, tol)
        assert is_equiradial(simplex, tol)
        assert has_well_distributed_edges(simplex, tol)
        assert not is_regular(simplex, tol)

    def test_skew_mismatch(self, skew_tetrahedron, tol):
        assert equifacetal_mismatch(skew_tetrahedron, tol) > 1e-3

    def test_bounded_dimension(self, tol, settings):
        too_big = regular_simplex(settings.equifacetal_max_dimension + 1)
        with pytest.raises(PreconditionError):
            equifacetal_mismatch(too_big, tol)
        assert classify(too_big, tol).equifacetal is None


class TestTetrahedronPredicates:
    def test_corner_orthocentric_and_isosceles(self, corner_tetrahedron, tol):
        assert is_orthocentric(corner_tetrahedron, tol)
        # Unit edges from the origin, sqrt(2) between the others
        assert is_isosceles(corner_tetrahedron, tol) == 1

    def test_skew(self, skew_tetrahedron, tol):
        assert not is_orthocentric(skew_tetrahedron, tol)
        assert is_isosceles(skew_tetrahedron, tol) is None
        assert not facet_inradii_equal(skew_tetrahedron, tol)

    def test_corner_facet_quantities(self, corner_tetrahedron):
        assert_allclose(
            facet_circumradii(corner_tetrahedron),
            [np.sqrt(2.0 / 3.0), np.sqrt(2.0) / 2.0, np.sqrt(2.0) / 2.0, np.sqrt(2.0) / 2.0],
        )
        assert_allclose(edge_square_sums(corner_tetrahedron), [6.0, 4.0, 4.0, 4.0])

    def test_triangle_facets_are_segments(self, right_triangle):
        # A segment's inradius is half its length
        assert_allclose(
            facet_inradii(right_triangle), [np.sqrt(2.0) / 2.0, 0.5, 0.5]
        )


class TestClassificationReport:
    def test_corner_report(self, corner_tetrahedron, tol):
        report = classify(corner_tetrahedron, tol)
        assert report.dimension == 3
        assert not report.regular
        assert report.equifacetal is False
        assert report.orthocentric
        assert report.isosceles == 1
        assert not report.near_degenerate
        assert report.witnesses.facet_perimeters is not None
        assert len(report.witnesses.orthocentric_residuals) == 3
        assert set(report.witnesses.spreads) >= {
            "regular",
            "equiareal",
            "equiradial",
            "well_distributed",
            "facet_inradii",
            "isosceles",
            "equifacetal",
        }

    def test_triangle_report_has_no_tetrahedron_witnesses(self, right_triangle, tol):
        report = classify(right_triangle, tol)
        assert report.orthocentric
        assert report.witnesses.facet_perimeters is None

    def test_segment_rejected(self, tol):
        with pytest.raises(PreconditionError):
            classify(Simplex.from_points([[0.0], [2.0]]), tol)

    def test_tiny_volume_flagged(self, tol):
        flat = Simplex.from_points([[0.0, 0.0], [1.0, 0.0], [0.5, 1.5e-9]])
        assert classify(flat, tol).near_degenerate
