"""Settings, YAML registries, fixtures and JSON input."""

import json

import pytest
from numpy.testing import assert_allclose

from simplexcenters.config.settings import Settings
from simplexcenters.models.errors import InvalidInputError, PreconditionError, UnknownNameError
from simplexcenters.models.geometry import Simplex
from simplexcenters.models.verification import THEOREM_IDS
from simplexcenters.services.config_loader import ConfigLoader
from simplexcenters.services.construction_service import BUILDERS
from simplexcenters.services.core_geometry import edge_lengths
from simplexcenters.services.simplex_io import dump_simplex, load_simplex_json, loads_simplex


@pytest.fixture
def loader(settings) -> ConfigLoader:
    return ConfigLoader(settings.constructions_config_path, settings.verification_config_path)


class TestSettings:
    def test_defaults(self):
        settings = Settings()
        assert settings.abs_tol == 1e-9
        assert settings.rel_tol == 1e-8
        assert settings.tolerance().abs_tol == 1e-9

    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv("SIMPLEX_ABS_TOL", "1e-7")
        monkeypatch.setenv("SIMPLEX_EQUIFACETAL_MAX_DIMENSION", "5")
        settings = Settings()
        assert settings.abs_tol == 1e-7
        assert settings.equifacetal_max_dimension == 5


class TestRegistries:
    def test_every_theorem_has_a_suite(self, loader):
        suites = loader.get_verification_suites()
        assert set(suites) == set(THEOREM_IDS)
        for suite in suites.values():
            assert suite["verifier"] in {"tetrahedron", "coincidence", "gram", "cevian"}
            assert suite["samples"] >= 1

    def test_every_construction_has_a_builder(self, loader):
        for name, entry in loader.get_constructions().items():
            assert entry["builder"] in BUILDERS, name
            assert entry["description"]

    def test_unknown_names(self, loader):
        with pytest.raises(UnknownNameError):
            loader.get_construction_config("thm9.9")
        with pytest.raises(UnknownNameError):
            loader.get_suite_config("T9.9")

    def test_missing_file(self, tmp_path):
        loader = ConfigLoader(str(tmp_path / "none.yaml"), str(tmp_path / "none.yaml"))
        with pytest.raises(FileNotFoundError):
            loader.get_constructions()

    def test_reload(self, loader):
        first = loader.get_constructions()
        loader.reload_configs()
        assert loader.get_constructions() == first


class TestFixtures:
    def test_names(self, fixtures):
        names = fixtures.list_available_fixtures()
        assert {"right2", "eq2", "corner3", "reg2", "reg6"} <= set(names)

    @pytest.mark.parametrize("name", ["REG(4)", "reg4", "Reg4"])
    def test_aliases(self, fixtures, name):
        simplex = fixtures.get_fixture(name)
        assert simplex.dimension == 4
        assert_allclose(edge_lengths(simplex.points), 1.0, rtol=1e-12)

    def test_unknown(self, fixtures):
        with pytest.raises(UnknownNameError):
            fixtures.get_fixture("reg99")


class TestSimplexInput:
    def test_vertices_without_dimension(self):
        simplex = loads_simplex('{"vertices": [[0, 0], [1, 0], [0, 1]]}')
        assert simplex.dimension == 2

    def test_distance_matrix(self):
        simplex = loads_simplex(json.dumps({"entries": [[0, 1, 1], [1, 0, 1], [1, 1, 0]]}))
        assert_allclose(edge_lengths(simplex.points), 1.0)

    def test_dump_then_load(self, skew_tetrahedron):
        assert loads_simplex(dump_simplex(skew_tetrahedron)) == skew_tetrahedron

    def test_dump_writes_seventeen_digits(self):
        simplex = Simplex.from_points([[0.0, 0.0], [0.1, 0.0], [0.0, 1.0 / 3.0]])
        text = dump_simplex(simplex)
        assert "0.10000000000000001" in text
        assert "0.33333333333333331" in text
        assert json.loads(text)["dimension"] == 2

    def test_malformed_json(self):
        with pytest.raises(InvalidInputError):
            loads_simplex("{not json")

    def test_unrecognized_object(self):
        with pytest.raises(InvalidInputError):
            loads_simplex('{"points": []}')

    def test_not_an_object(self):
        with pytest.raises(InvalidInputError):
            loads_simplex("[1, 2, 3]")

    def test_degenerate_input(self):
        with pytest.raises(PreconditionError):
            loads_simplex('{"vertices": [[0, 0], [1, 1], [2, 2]]}')

    def test_missing_file(self, tmp_path):
        with pytest.raises(InvalidInputError):
            load_simplex_json(tmp_path / "absent.json")
