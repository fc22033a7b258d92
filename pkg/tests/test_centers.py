"""Centers of simplices against closed forms and defining properties."""

import numpy as np
import pytest
from hypothesis import given, settings as hyp_settings, strategies as st
from numpy.testing import assert_allclose

from simplexcenters.models.errors import ConvergenceError, PreconditionError
from simplexcenters.models.geometry import DEFAULT_TOLERANCE, Simplex
from simplexcenters.services.centers import (
    absorbing_vertex,
    all_centers,
    centroid,
    circumcenter,
    complementary_1_centroid,
    distance_sum,
    fermat_torricelli,
    incenter,
    monge_point,
    one_center,
    orthocenter,
    unit_vector_sum,
)
from simplexcenters.services.core_geometry import apply_isometry, facet_normal, regular_simplex
from simplexcenters.services.corpus import random_isometry, random_simplex

CENTER_FUNCTIONS = {
    "centroid": lambda simplex, tol: centroid(simplex),
    "circumcenter": lambda simplex, tol: circumcenter(simplex)[0],
    "incenter": lambda simplex, tol: incenter(simplex)[0],
    "fermat_torricelli": lambda simplex, tol: fermat_torricelli(simplex, tol)[0],
    "monge": lambda simplex, tol: monge_point(simplex),
    "orthocenter": orthocenter,
    "complementary_1_centroid": lambda simplex, tol: complementary_1_centroid(simplex),
    "one_center": lambda simplex, tol: (one_center(simplex, tol) or (None,))[0],
}


class TestRightTriangle:
    def test_centroid(self, right_triangle):
        assert_allclose(centroid(right_triangle), [1.0 / 3.0, 1.0 / 3.0])

    def test_circumcenter_is_hypotenuse_midpoint(self, right_triangle):
        center, radius = circumcenter(right_triangle)
        assert_allclose(center, [0.5, 0.5])
        assert radius == pytest.approx(np.sqrt(2.0) / 2.0)

    def test_incenter(self, right_triangle):
        center, radius = incenter(right_triangle)
        expected = (2.0 - np.sqrt(2.0)) / 2.0
        assert radius == pytest.approx(expected)
        assert_allclose(center, [expected, expected])

    def test_monge_point_is_right_angle_vertex(self, right_triangle, tol):
        assert_allclose(monge_point(right_triangle), [0.0, 0.0], atol=1e-12)
        assert_allclose(orthocenter(right_triangle, tol), [0.0, 0.0], atol=1e-9)

    def test_fermat_point_floats(self, right_triangle, tol):
        point, mode = fermat_torricelli(right_triangle, tol)
        assert mode.kind == "floating"
        assert mode.residual <= tol.abs_tol
        assert np.linalg.norm(unit_vector_sum(right_triangle.points, point)) <= 1e-8

    def test_one_center_is_incircle(self, right_triangle, tol):
        center, radius = one_center(right_triangle, tol)
        incenter_point, inradius = incenter(right_triangle)
        assert_allclose(center, incenter_point, atol=1e-9)
        assert radius == pytest.approx(inradius)


class TestFermatTorricelli:
    def test_obtuse_triangle_absorbed(self, tol):
        # Angle at the origin exceeds 120 degrees
        simplex = Simplex.from_points([[0.0, 0.0], [1.0, 0.0], [-0.9, 0.2]])
        point, mode = fermat_torricelli(simplex, tol)
        assert mode.kind == "absorbed"
        assert mode.vertex == 1
        assert_allclose(point, [0.0, 0.0])
        assert absorbing_vertex(simplex, tol)[0] == 0

    def test_regular_simplex_center(self, tol):
        simplex = regular_simplex(4)
        point, mode = fermat_torricelli(simplex, tol)
        assert mode.kind == "floating"
        assert_allclose(point, 0.0, atol=1e-8)

    def test_iteration_budget(self, skew_tetrahedron, tol):
        with pytest.raises(ConvergenceError):
            fermat_torricelli(skew_tetrahedron, tol, max_iterations=1)

    @hyp_settings(max_examples=20, deadline=None)
    @given(seed=st.integers(0, 2**31 - 1), dimension=st.integers(2, 4))
    def test_minimizes_distance_sum(self, seed, dimension):
        rng = np.random.default_rng(seed)
        simplex = random_simplex(rng, dimension)
        point, _ = fermat_torricelli(simplex)
        best = distance_sum(simplex.points, point)
        for _ in range(20):
            probe = point + 1e-3 * rng.standard_normal(dimension)
            assert distance_sum(simplex.points, probe) >= best - 1e-9


class TestCircumcenter:
    @hyp_settings(max_examples=25, deadline=None)
    @given(seed=st.integers(0, 2**31 - 1), dimension=st.integers(1, 6))
    def test_equidistant(self, seed, dimension):
        simplex = random_simplex(np.random.default_rng(seed), dimension)
        center, radius = circumcenter(simplex)
        distances = np.linalg.norm(simplex.points - center, axis=1)
        assert_allclose(distances, radius, rtol=1e-7)

    @hyp_settings(max_examples=25, deadline=None)
    @given(seed=st.integers(0, 2**31 - 1), dimension=st.integers(2, 5))
    def test_incenter_equidistant_from_facets(self, seed, dimension):
        simplex = random_simplex(np.random.default_rng(seed), dimension)
        center, radius = incenter(simplex)
        for j in range(simplex.vertex_count):
            normal = facet_normal(simplex.points, j)
            anchor = simplex.points[(j + 1) % simplex.vertex_count]
            assert abs(normal @ (center - anchor)) == pytest.approx(radius, rel=1e-7)


class TestHigherCenters:
    @hyp_settings(max_examples=20, deadline=None)
    @given(seed=st.integers(0, 2**31 - 1), dimension=st.integers(2, 5))
    def test_monge_on_mid_perpendicular_hyperplanes(self, seed, dimension):
        simplex = random_simplex(np.random.default_rng(seed), dimension)
        points = simplex.points
        monge = monge_point(simplex)
        scale = 1.0 + float(np.max(np.abs(points)))
        for i in range(simplex.vertex_count):
            for j in range(i + 1, simplex.vertex_count):
                others = np.delete(points, [i, j], axis=0).mean(axis=0)
                edge = points[i] - points[j]
                assert abs((monge - others) @ edge) <= 1e-7 * scale**2

    def test_tetrahedron_monge_is_reflection(self, skew_tetrahedron):
        center, _ = circumcenter(skew_tetrahedron)
        assert_allclose(
            monge_point(skew_tetrahedron), 2.0 * centroid(skew_tetrahedron) - center
        )

    def test_corner_is_orthocentric(self, corner_tetrahedron, tol):
        assert_allclose(orthocenter(corner_tetrahedron, tol), [0.0, 0.0, 0.0], atol=1e-9)
        assert_allclose(monge_point(corner_tetrahedron), [0.0, 0.0, 0.0], atol=1e-12)

    def test_skew_has_no_orthocenter(self, skew_tetrahedron, tol):
        assert orthocenter(skew_tetrahedron, tol) is None

    def test_complementary_centroid_of_regular(self):
        simplex = regular_simplex(3)
        assert_allclose(complementary_1_centroid(simplex), 0.0, atol=1e-12)

    def test_skew_has_no_one_center(self, skew_tetrahedron, tol):
        assert one_center(skew_tetrahedron, tol) is None

    def test_regular_one_center_is_circumcenter(self, tol):
        center, radius = one_center(regular_simplex(3), tol)
        assert_allclose(center, 0.0, atol=1e-9)
        # Midsphere of the unit regular tetrahedron
        assert radius == pytest.approx(1.0 / np.sqrt(8.0))

    def test_one_dimensional_rejected(self):
        segment = Simplex.from_points([[0.0], [1.0]])
        with pytest.raises(PreconditionError):
            monge_point(segment)
        with pytest.raises(PreconditionError):
            all_centers(segment)


class TestCenterReport:
    def test_regular_all_coincide(self, fixtures, tol):
        report = all_centers(fixtures.get_fixture("reg4"), tol)
        pairs = {tuple(pair) for pair in report.coincidences}
        assert ("centroid", "circumcenter") in pairs
        assert ("circumcenter", "incenter") in pairs
        assert ("centroid", "fermat_torricelli") in pairs
        assert report.one_center is not None

    def test_right_triangle_report(self, right_triangle, tol):
        report = all_centers(right_triangle, tol)
        assert report.dimension == 2
        assert report.circumradius == pytest.approx(np.sqrt(2.0) / 2.0)
        assert ["monge", "orthocenter"] in report.coincidences
        assert ["centroid", "circumcenter"] not in report.coincidences


@hyp_settings(max_examples=15, deadline=None)
@given(seed=st.integers(0, 2**31 - 1), dimension=st.integers(2, 4))
def test_centers_follow_isometries(seed, dimension):
    rng = np.random.default_rng(seed)
    simplex = random_simplex(rng, dimension)
    rotation, shift = random_isometry(rng, dimension)
    image = apply_isometry(simplex, rotation, shift)
    for name, center_of in CENTER_FUNCTIONS.items():
        original = center_of(simplex, DEFAULT_TOLERANCE)
        moved = center_of(image, DEFAULT_TOLERANCE)
        if original is None:
            assert moved is None, name
            continue
        atol = 1e-6 if name == "fermat_torricelli" else 1e-8
        assert_allclose(moved, rotation @ original + shift, atol=atol, err_msg=name)
