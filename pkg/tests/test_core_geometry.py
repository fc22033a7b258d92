"""Volumes, facets, Gram factorization and barycentric coordinates."""

import numpy as np
import pytest
from hypothesis import given, settings as hyp_settings, strategies as st
from numpy.testing import assert_allclose

from simplexcenters.models.errors import (
    DegenerateSimplexError,
    DimensionMismatchError,
    InvalidDistanceMatrixError,
    NotPositiveSemidefiniteError,
    PreconditionError,
    RankDeficiencyError,
)
from simplexcenters.models.geometry import DistanceMatrix, GramSpec, Simplex
from simplexcenters.services.core_geometry import (
    affine_independence,
    apply_isometry,
    barycentric,
    cayley_menger_sq_volume,
    distance_matrix,
    distances_from_gram,
    edge_lengths,
    facet,
    facet_volumes,
    gram_matrix,
    regular_simplex,
    simplex_from_distances,
    simplex_from_gram,
    simplex_volume,
)
from simplexcenters.services.corpus import random_isometry, random_simplex


class TestSimplexModel:
    def test_rejects_collinear_triangle(self):
        with pytest.raises(DegenerateSimplexError):
            Simplex.from_points([[0.0, 0.0], [1.0, 1.0], [2.0, 2.0]])

    def test_rejects_wrong_vertex_count(self):
        with pytest.raises(DimensionMismatchError):
            Simplex(dimension=2, vertices=[[0.0, 0.0], [1.0, 0.0]])

    def test_rejects_ragged_vertices(self):
        with pytest.raises(DimensionMismatchError):
            Simplex(dimension=2, vertices=[[0.0, 0.0], [1.0, 0.0], [0.0]])

    def test_rejects_non_finite(self):
        with pytest.raises(PreconditionError):
            Simplex(dimension=1, vertices=[[0.0], [float("nan")]])


class TestAffineIndependence:
    def test_corner(self, corner_tetrahedron, tol):
        assert affine_independence(corner_tetrahedron.vertices, tol)

    def test_collinear(self, tol):
        assert not affine_independence([[0.0, 0.0], [1.0, 1.0], [2.0, 2.0]], tol)

    def test_mixed_dimensions(self, tol):
        with pytest.raises(DimensionMismatchError):
            affine_independence([[0.0, 0.0], [1.0], [0.0, 1.0]], tol)

    def test_wrong_count(self, tol):
        with pytest.raises(DimensionMismatchError):
            affine_independence([[0.0, 0.0], [1.0, 0.0]], tol)


class TestVolumes:
    def test_corner_volume(self, corner_tetrahedron):
        assert simplex_volume(corner_tetrahedron) == pytest.approx(1.0 / 6.0)

    def test_cayley_menger_matches_determinant(self, corner_tetrahedron):
        volume_sq = cayley_menger_sq_volume(distance_matrix(corner_tetrahedron))
        assert volume_sq == pytest.approx(1.0 / 36.0, rel=1e-10)

    def test_cayley_menger_rejects_non_embeddable(self):
        # Fourth point closer to the unit triangle's vertices than its circumradius
        distances = DistanceMatrix(
            entries=[
                [0.0, 1.0, 1.0, 0.5],
                [1.0, 0.0, 1.0, 0.5],
                [1.0, 1.0, 0.0, 0.5],
                [0.5, 0.5, 0.5, 0.0],
            ]
        )
        with pytest.raises(InvalidDistanceMatrixError):
            cayley_menger_sq_volume(distances)

    def test_facet_volumes(self, corner_tetrahedron):
        assert_allclose(
            facet_volumes(corner_tetrahedron), [np.sqrt(3.0) / 2.0, 0.5, 0.5, 0.5]
        )

    def test_facet_is_isometric_copy(self, corner_tetrahedron):
        opposite_origin = facet(corner_tetrahedron, 1)
        assert opposite_origin.dimension == 2
        assert_allclose(edge_lengths(opposite_origin.points), [np.sqrt(2.0)] * 3)

    def test_facet_label_out_of_range(self, corner_tetrahedron):
        with pytest.raises(PreconditionError):
            facet(corner_tetrahedron, 0)
        with pytest.raises(PreconditionError):
            facet(corner_tetrahedron, 5)


class TestGram:
    def test_factorization_preserves_edges(self, skew_tetrahedron):
        rebuilt = simplex_from_gram(gram_matrix(skew_tetrahedron))
        assert_allclose(
            edge_lengths(rebuilt.points), edge_lengths(skew_tetrahedron.points), atol=1e-10
        )

    def test_not_psd(self):
        with pytest.raises(NotPositiveSemidefiniteError):
            simplex_from_gram(GramSpec(gram=[[1.0, 2.0], [2.0, 1.0]]))

    def test_rank_deficient(self):
        collinear = [[0.0, 0.0, 0.0], [0.0, 1.0, 2.0], [0.0, 2.0, 4.0]]
        with pytest.raises(RankDeficiencyError):
            simplex_from_gram(GramSpec(gram=collinear))

    def test_asymmetric_rejected(self):
        with pytest.raises(PreconditionError):
            GramSpec(gram=[[1.0, 0.5], [0.0, 1.0]])

    def test_distances_from_regular_gram(self):
        gram = np.full((5, 5), -0.25)
        np.fill_diagonal(gram, 1.0)
        distances = distances_from_gram(GramSpec(gram=gram.tolist())).entries
        off_diagonal = np.asarray(distances)[~np.eye(5, dtype=bool)]
        assert_allclose(off_diagonal, np.sqrt(2.5))

    def test_distances_match_gram_of_simplex(self, skew_tetrahedron):
        distances = distances_from_gram(gram_matrix(skew_tetrahedron))
        assert_allclose(distances.entries, distance_matrix(skew_tetrahedron).entries, atol=1e-10)

    def test_distances_from_non_psd_gram(self):
        with pytest.raises(NotPositiveSemidefiniteError):
            distances_from_gram(GramSpec(gram=[[1.0, 2.0], [2.0, 1.0]]))

    @pytest.mark.parametrize("dimension", [2, 3, 4, 5, 6])
    def test_regular_simplex(self, dimension):
        simplex = regular_simplex(dimension)
        assert_allclose(edge_lengths(simplex.points), 1.0, rtol=1e-12)
        assert_allclose(simplex.points.mean(axis=0), 0.0, atol=1e-12)

    def test_from_distances_345(self):
        distances = DistanceMatrix(entries=[[0.0, 3.0, 4.0], [3.0, 0.0, 5.0], [4.0, 5.0, 0.0]])
        assert simplex_volume(simplex_from_distances(distances)) == pytest.approx(6.0)

    def test_triangle_inequality_enforced(self):
        with pytest.raises(InvalidDistanceMatrixError):
            DistanceMatrix(entries=[[0.0, 1.0, 3.0], [1.0, 0.0, 1.0], [3.0, 1.0, 0.0]])


class TestBarycentric:
    def test_centroid_weights(self, right_triangle, tol):
        weights = barycentric(right_triangle, [1.0 / 3.0, 1.0 / 3.0])
        assert_allclose(weights.array, [1.0 / 3.0] * 3)
        assert weights.inside(tol)

    def test_outside_point(self, right_triangle, tol):
        weights = barycentric(right_triangle, [2.0, 2.0])
        assert_allclose(weights.array, [-3.0, 2.0, 2.0])
        assert not weights.inside(tol)

    def test_dimension_mismatch(self, right_triangle):
        with pytest.raises(DimensionMismatchError):
            barycentric(right_triangle, [0.0, 0.0, 0.0])


@hyp_settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 2**31 - 1), dimension=st.integers(2, 5))
def test_isometry_preserves_volume_and_edges(seed, dimension):
    rng = np.random.default_rng(seed)
    simplex = random_simplex(rng, dimension)
    rotation, shift = random_isometry(rng, dimension)
    image = apply_isometry(simplex, rotation, shift)
    assert_allclose(edge_lengths(image.points), edge_lengths(simplex.points), rtol=1e-9)
    assert simplex_volume(image) == pytest.approx(simplex_volume(simplex), rel=1e-8)


@hyp_settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 2**31 - 1), dimension=st.integers(1, 6))
def test_cayley_menger_matches_determinant_volume(seed, dimension):
    simplex = random_simplex(np.random.default_rng(seed), dimension)
    volume_sq = cayley_menger_sq_volume(distance_matrix(simplex))
    assert volume_sq == pytest.approx(simplex_volume(simplex) ** 2, rel=1e-6, abs=1e-12)


@hyp_settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 2**31 - 1), dimension=st.integers(1, 6))
def test_gram_factorization_keeps_distances(seed, dimension):
    simplex = random_simplex(np.random.default_rng(seed), dimension)
    rebuilt = simplex_from_gram(gram_matrix(simplex))
    assert rebuilt.dimension == dimension
    assert_allclose(
        distance_matrix(rebuilt).entries, distance_matrix(simplex).entries, atol=1e-8
    )
