"""Command-line surface: JSON on stdout, exit codes per error class."""

import json

import pytest
from typer.testing import CliRunner

from simplexcenters.main import app
from simplexcenters.models.geometry import Simplex

RIGHT_TRIANGLE = '{"dimension": 2, "vertices": [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]}'


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def triangle_file(tmp_path):
    path = tmp_path / "right2.json"
    path.write_text(RIGHT_TRIANGLE, encoding="utf-8")
    return path


class TestAnalyze:
    def test_file(self, runner, triangle_file):
        result = runner.invoke(app, ["analyze", str(triangle_file)])
        assert result.exit_code == 0, result.output
        report = json.loads(result.stdout)
        assert report["centers"]["circumradius"] == pytest.approx(2**0.5 / 2)
        assert report["classification"]["isosceles"] == 1
        assert report["cevians"] is None

    def test_stdin_with_cevians(self, runner):
        result = runner.invoke(app, ["analyze", "-", "--cevians", "centroid"], input=RIGHT_TRIANGLE)
        assert result.exit_code == 0, result.output
        cevians = json.loads(result.stdout)["cevians"]
        assert cevians["coefficients"] == pytest.approx([1 / 3] * 3)

    def test_malformed_json(self, runner):
        result = runner.invoke(app, ["analyze", "-"], input="{oops")
        assert result.exit_code == 2
        assert result.stdout == ""

    def test_degenerate_input(self, runner):
        collinear = '{"vertices": [[0, 0], [1, 1], [2, 2]]}'
        result = runner.invoke(app, ["analyze", "-"], input=collinear)
        assert result.exit_code == 3

    def test_missing_file(self, runner, tmp_path):
        result = runner.invoke(app, ["analyze", str(tmp_path / "absent.json")])
        assert result.exit_code == 2

    def test_bad_tolerance(self, runner, triangle_file):
        result = runner.invoke(app, ["--tol-abs", "0", "analyze", str(triangle_file)])
        assert result.exit_code == 2


class TestConstruct:
    def test_simplex_on_stdout(self, runner):
        result = runner.invoke(app, ["-q", "construct", "thm4.1"])
        assert result.exit_code == 0, result.output
        simplex = Simplex.model_validate_json(result.stdout)
        assert simplex.dimension == 4

    def test_full_result(self, runner):
        result = runner.invoke(app, ["-q", "construct", "thm5.5", "--d", "5", "--full"])
        assert result.exit_code == 0, result.output
        payload = json.loads(result.stdout)
        assert payload["parameters"]["b"] == 7
        assert all(check["passed"] for check in payload["checks"])

    def test_equiradial_not_equiareal(self, runner):
        result = runner.invoke(app, ["-q", "construct", "thm3.4", "--full"])
        assert result.exit_code == 0, result.output
        names = [check["name"] for check in json.loads(result.stdout)["checks"]]
        assert "circumcenter_exterior" in names

    def test_precondition(self, runner):
        result = runner.invoke(app, ["construct", "thm3.4", "--d", "3"])
        assert result.exit_code == 3

    def test_unknown_name(self, runner):
        result = runner.invoke(app, ["construct", "thm9.9"])
        assert result.exit_code == 2

    def test_unaccepted_option(self, runner):
        result = runner.invoke(app, ["construct", "thm4.3", "--x", "0.1"])
        assert result.exit_code == 2


class TestVerify:
    def test_single(self, runner):
        result = runner.invoke(app, ["-q", "verify", "L4.5", "--samples", "10"])
        assert result.exit_code == 0, result.output
        run = json.loads(result.stdout)
        assert run["theorem_id"] == "L4.5"
        assert run["verdict"] == "pass"
        assert run["samples"] == 10

    def test_jsonl(self, runner):
        result = runner.invoke(
            app, ["-q", "verify", "T2.2", "L4.5", "--samples", "3", "--format", "jsonl"]
        )
        assert result.exit_code == 0, result.output
        lines = result.stdout.strip().splitlines()
        assert [json.loads(line)["theorem_id"] for line in lines] == ["T2.2", "L4.5"]

    def test_list_output(self, runner):
        result = runner.invoke(app, ["-q", "verify", "T3.4", "T4.4", "--parallel"])
        assert result.exit_code == 0, result.output
        assert [run["theorem_id"] for run in json.loads(result.stdout)] == ["T3.4", "T4.4"]

    def test_unknown_id(self, runner):
        result = runner.invoke(app, ["verify", "T9.9"])
        assert result.exit_code == 2


class TestRandom:
    def test_deterministic(self, runner):
        args = ["random", "-d", "3", "-n", "4", "--seed", "5"]
        first = runner.invoke(app, args)
        second = runner.invoke(app, args)
        assert first.exit_code == 0, first.output
        assert first.stdout == second.stdout
        lines = first.stdout.strip().splitlines()
        assert len(lines) == 4
        assert Simplex.model_validate_json(lines[0]).dimension == 3

    def test_json_array(self, runner):
        result = runner.invoke(
            app, ["random", "-d", "2", "-n", "2", "--constraint", "balanced", "--format", "json"]
        )
        assert result.exit_code == 0, result.output
        assert len(json.loads(result.stdout)) == 2

    def test_generation_error(self, runner):
        result = runner.invoke(app, ["random", "-d", "5", "--constraint", "acute_base"])
        assert result.exit_code == 4

    def test_inverted_range(self, runner):
        result = runner.invoke(app, ["random", "-d", "2", "--low", "1", "--high", "0"])
        assert result.exit_code == 2


class TestFixtures:
    def test_list(self, runner):
        result = runner.invoke(app, ["fixtures", "list"])
        assert result.exit_code == 0
        assert "reg4" in result.stdout.split()

    def test_show_vertices(self, runner):
        result = runner.invoke(app, ["fixtures", "show", "REG(3)", "--vertices"])
        assert result.exit_code == 0, result.output
        assert Simplex.model_validate_json(result.stdout).dimension == 3

    def test_show_unknown(self, runner):
        result = runner.invoke(app, ["fixtures", "show", "reg99"])
        assert result.exit_code == 2
