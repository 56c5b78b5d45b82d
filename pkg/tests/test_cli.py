"""Tests for the siltlab command line."""

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from siltlab import __version__
from siltlab.main import cli


def run(*args: str):
    """Invoke the CLI quietly."""
    return CliRunner().invoke(cli, ["--log-level", "ERROR", *args])


class TestGroup:
    def test_version(self):
        result = CliRunner().invoke(cli, ["--version"])
        assert result.exit_code == 0
        assert __version__ in result.output

    def test_help_lists_commands(self):
        result = CliRunner().invoke(cli, ["--help"])
        assert result.exit_code == 0
        for name in ("catalog", "enumerate", "sign-decompose", "verify", "schur"):
            assert name in result.output

    def test_config_file(self, tmp_path: Path):
        """Test that --config feeds the budget into enumeration."""
        path = tmp_path / "siltlab.yaml"
        path.write_text("search:\n  budget: 3\n")
        result = CliRunner().invoke(
            cli,
            ["--config", str(path), "--log-level", "ERROR",
             "enumerate", "-a", "D:3", "--no-progress"],
        )
        assert result.exit_code == 2


class TestCatalogCommands:
    def test_list(self):
        result = run("catalog", "list")
        assert result.exit_code == 0
        assert "example23" in result.output
        assert "muJB" in result.output

    def test_list_json(self):
        result = run("catalog", "list", "--json")
        assert result.exit_code == 0
        ids = [e["id"] for e in json.loads(result.output)]
        assert "K4" in ids

    def test_show(self):
        result = run("catalog", "show", "example23")
        assert result.exit_code == 0
        assert "dimension=4" in result.output
        assert "expected count: 6" in result.output

    def test_show_unknown(self):
        result = run("catalog", "show", "Z9")
        assert result.exit_code == 1
        assert "Unknown algebra" in result.output


class TestEnumerate:
    def test_text_report(self):
        result = run("enumerate", "-a", "example23", "--no-progress")
        assert result.exit_code == 0
        assert "count=6 complete=true" in result.output

    def test_json_report_to_file(self, tmp_path: Path):
        out = tmp_path / "d3.json"
        result = run(
            "enumerate", "-a", "D:3", "--out", "json", "-o", str(out),
            "--no-progress", "-t", "2",
        )
        assert result.exit_code == 0
        data = json.loads(out.read_text())
        assert data["count"] == 28
        assert data["algebra"] == "D3"

    def test_dot_and_table(self, tmp_path: Path):
        table = tmp_path / "objects.csv"
        result = run(
            "enumerate", "-a", "example23", "--out", "dot",
            "--table", str(table), "--no-progress",
        )
        assert result.exit_code == 0
        assert "digraph hasse" in result.output
        assert len(table.read_text().splitlines()) == 7

    def test_algebra_file(self, tmp_path: Path):
        path = tmp_path / "twocycle.json"
        path.write_text(
            json.dumps(
                {
                    "name": "twocycle",
                    "p": 3,
                    "vertices": 2,
                    "arrows": [
                        {"name": "a", "from": 1, "to": 2},
                        {"name": "b", "from": 2, "to": 1},
                    ],
                    "relations": [[{"path": ["a", "b"]}], [{"path": ["b", "a"]}]],
                }
            )
        )
        result = run("enumerate", "--algebra-file", str(path), "--no-progress")
        assert result.exit_code == 0
        assert "algebra=twocycle p=3 count=6" in result.output

    def test_infinite_algebra_exit_code(self):
        """Test that an exhausted budget exits with status 2."""
        result = run("enumerate", "-a", "N5", "-b", "200", "--no-progress")
        assert result.exit_code == 2
        assert "complete=false" in result.output

    def test_needs_exactly_one_source(self):
        result = run("enumerate", "--no-progress")
        assert result.exit_code == 2
        assert "exactly one" in result.output

    def test_bad_parameter(self):
        result = run("enumerate", "-a", "D:2", "--no-progress")
        assert result.exit_code == 1
        assert "m >= 3" in result.output

    def test_invalid_file(self, tmp_path: Path):
        path = tmp_path / "bad.yaml"
        path.write_text("vertices: 0\n")
        result = run("enumerate", "--algebra-file", str(path), "--no-progress")
        assert result.exit_code == 1
        assert "Invalid input" in result.output

    def test_resume_without_checkpoint(self, tmp_path: Path):
        cp = tmp_path / "cp.json"
        result = run(
            "enumerate", "-a", "A:2", "--checkpoint", str(cp), "--resume",
            "--no-progress",
        )
        assert result.exit_code == 0
        assert "count=6" in result.output
        assert not cp.exists()


class TestOtherCommands:
    def test_sign_decompose(self):
        result = run("sign-decompose", "-a", "example23")
        assert result.exit_code == 0
        assert "total=6 direct=6" in result.output
        assert "consistent=true" in result.output

    def test_sign_decompose_json(self):
        result = run("sign-decompose", "-a", "example23", "--json")
        assert result.exit_code == 0
        assert json.loads(result.output)["total"] == 6

    def test_verify(self):
        result = run("verify", "-a", "A:3")
        assert result.exit_code == 0
        assert "PASS  duality" in result.output
        assert "PASS  hasse shape" in result.output
        assert "pass (20 objects)" in result.output

    def test_verify_incomplete(self):
        result = run("verify", "-a", "D:3", "-b", "5")
        assert result.exit_code == 2
        assert "incomplete" in result.output

    def test_bijection(self):
        result = run("bijection", "--a", "pathA3", "--b", "muJ_pathA3", "--j", "1,3")
        assert result.exit_code == 0
        assert "equal=true" in result.output

    def test_bijection_bad_vertices(self):
        result = run("bijection", "--a", "pathA3", "--b", "muJ_pathA3", "--j", "x")
        assert result.exit_code == 2


class TestSchurCommands:
    def test_classify(self):
        result = run("schur", "classify", "--p", "2", "--n", "2", "--r", "19")
        assert result.exit_code == 0
        assert "S(2,19) p=2: finite" in result.output
        assert "count: 185472" in result.output
        assert "L₅ ⊕ D₃ ⊕ 𝔽 ⊕ 𝔽" in result.output

    def test_classify_json(self):
        result = run("schur", "classify", "--p", "3", "--n", "3", "--r", "8", "--json")
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["count"] == 50688
        assert data["representation_type"] == "TAME"

    def test_classify_infinite(self):
        result = run("schur", "classify", "--p", "2", "--n", "5", "--r", "5")
        assert result.exit_code == 0
        assert "infinite" in result.output

    def test_classify_bad_n(self):
        result = run("schur", "classify", "--p", "2", "--n", "1", "--r", "3")
        assert result.exit_code == 1
        assert "n must be at least 2" in result.output

    def test_quiver(self):
        result = run("schur", "quiver", "--p", "2", "--r", "4")
        assert result.exit_code == 0
        assert "2 double arrows" in result.output
        assert "D3 count=28" in result.output

    def test_quiver_dot(self):
        result = run("schur", "quiver", "--p", "3", "--r", "9", "--dot")
        assert result.exit_code == 0
        assert result.output.startswith("digraph schur {")

    @pytest.mark.parametrize("p", ["2", "3"])
    def test_report_matches_fixture(self, p, fixtures_dir: Path):
        result = run("schur", "report", "--p", p)
        assert result.exit_code == 0
        expected = (fixtures_dir / f"appendix_p{p}.txt").read_text(encoding="utf-8")
        assert result.output == expected

    def test_report_json(self):
        result = run("schur", "report", "--p", "2", "--json")
        assert result.exit_code == 0
        rows = json.loads(result.output)
        assert rows[-1]["algebra"] == "S(4,5)"
        assert rows[-1]["count"] == 816
