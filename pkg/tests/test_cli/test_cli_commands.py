"""
Tests for the command line interface.
"""
import json
from pathlib import Path

import pytest
from typer.testing import CliRunner

from formale.cli.main import app

X3_PLUS_X = "[0,0,0,1,0]"
LEVEL11 = "[0,-1,-1,0,0]"


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def invoke(runner: CliRunner, *args: str):
    """Run a command quietly so stdout holds only the command's own output."""
    return runner.invoke(app, ["--log-level", "ERROR", *args])


def json_output(result) -> dict:
    assert result.exit_code == 0, result.output
    return json.loads(result.stdout)


def without_timestamp(data: dict) -> dict:
    return {key: value for key, value in data.items() if key != "generated_at"}


class TestExpand:

    def test_json(self, runner: CliRunner) -> None:
        data = json_output(invoke(runner, "expand", "--curve", X3_PLUS_X, "--order", "26", "--json"))
        assert data["command"] == "expand"
        assert data["curve"] == [0, 0, 0, 1, 0]
        assert data["order"] == 26
        assert data["b"][24] == "924"
        assert data["s"][7] == "1"

    def test_table(self, runner: CliRunner) -> None:
        result = invoke(runner, "expand", "--curve", "[0,0,1,0,0]", "--order", "8", "--closed-form")
        assert result.exit_code == 0
        assert "closed form == expansion: true" in result.stdout

    def test_closed_form_family2(self, runner: CliRunner) -> None:
        data = json_output(invoke(
            runner, "expand", "--curve", "[0,0,1,0,1]", "--order", "20", "--closed-form", "--json"
        ))
        assert data["closed_form_mismatches"] == []
        assert data["b"][6] == "9"

    def test_order_from_settings(self, runner: CliRunner, monkeypatch) -> None:
        monkeypatch.setenv("FORMALE_ORDER", "12")
        data = json_output(invoke(runner, "expand", "--curve", X3_PLUS_X, "--json"))
        assert len(data["b"]) == 12

    def test_singular_curve(self, runner: CliRunner) -> None:
        assert invoke(runner, "expand", "--curve", "[0,0,0,0,0]").exit_code == 2

    @pytest.mark.parametrize("text", ["[1,2]", "not a curve", "[0,0,0,1.5,0]"])
    def test_unparseable_curve(self, runner: CliRunner, text: str) -> None:
        assert invoke(runner, "expand", "--curve", text).exit_code == 3

    def test_order_too_small(self, runner: CliRunner) -> None:
        assert invoke(runner, "expand", "--curve", X3_PLUS_X, "--order", "2").exit_code == 2


class TestCheck:

    def test_thm2_single_prime(self, runner: CliRunner) -> None:
        data = json_output(invoke(runner, "check", "thm2", "--curve", X3_PLUS_X, "--p", "5", "--n-max", "5", "--json"))
        assert data["summary"] == {"Thm2": {"pass": 6, "fail": 0}}
        row = next(r for r in data["reports"] if (r["n"], r["s"]) == (5, 2))
        assert row["residual"] == "925"
        assert row["pass"] is True

    def test_thm2_sweep_table(self, runner: CliRunner) -> None:
        result = invoke(runner, "check", "thm2", "--curve", LEVEL11, "--p-max", "13", "--n-max", "3")
        assert result.exit_code == 0
        assert "congruences hold" in result.stdout

    def test_bad_prime_without_assertion(self, runner: CliRunner) -> None:
        assert invoke(runner, "check", "cor1", "--curve", LEVEL11, "--p", "11").exit_code == 1

    def test_cor1_bad_prime_asserted(self, runner: CliRunner) -> None:
        result = invoke(runner, "check", "cor1", "--curve", LEVEL11, "--p", "11", "--n-max", "3", "--assert-minimal")
        assert result.exit_code == 0

    def test_cor33_printed_reading_fails(self, runner: CliRunner) -> None:
        assert invoke(runner, "check", "cor33", "--a", "2", "--p-max", "13", "--variant", "printed").exit_code == 1
        assert invoke(runner, "check", "cor33", "--a", "2", "--p-max", "13", "--variant", "a-power").exit_code == 0

    def test_unknown_variant(self, runner: CliRunner) -> None:
        assert invoke(runner, "check", "cor33", "--a", "2", "--variant", "neither").exit_code == 2

    def test_cor34_note(self, runner: CliRunner) -> None:
        result = invoke(runner, "check", "cor34", "--a", "1", "--p-max", "13")
        assert result.exit_code == 0
        assert "Note:" in result.stdout

    def test_sec4(self, runner: CliRunner) -> None:
        data = json_output(invoke(runner, "check", "sec4", "--a3", "1", "--a6", "1", "--p-max", "30", "--json"))
        assert data["curve"] == [0, 0, 1, 0, 1]
        assert all(row["pass"] for row in data["reports"])

    def test_remark11(self, runner: CliRunner) -> None:
        data = json_output(invoke(runner, "check", "remark11", "--p-max", "13", "--s-max", "2", "--json"))
        assert sorted({row["p"] for row in data["reports"]}) == [2, 3, 5, 7, 13]

    def test_tate_remark(self, runner: CliRunner) -> None:
        data = json_output(invoke(runner, "check", "tate-remark", "--n-max", "6", "--json"))
        general = [row for row in data["rows"] if row["formula"] == "general"]
        assert all(row["agrees"] for row in general)
        assert any(not row["agrees"] for row in data["rows"] if row["formula"] == "specialized")


class TestPoints:

    def test_json(self, runner: CliRunner) -> None:
        data = json_output(invoke(runner, "points", "--curve", X3_PLUS_X, "--p-max", "13", "--json"))
        assert data["discriminant"] == "-64"
        rows = {row["p"]: row for row in data["local_data"]}
        assert rows[7] == {"p": 7, "type": "good", "A_p": 8, "t": 0, "u": 1}
        assert rows[2]["type"] == "additive"
        assert rows[5]["t"] == 2

    def test_single_prime(self, runner: CliRunner) -> None:
        data = json_output(invoke(runner, "points", "--curve", LEVEL11, "--p", "11", "--json"))
        assert data["local_data"] == [{"p": 11, "type": "split", "A_p": None, "t": 1, "u": 0}]

    def test_not_prime(self, runner: CliRunner) -> None:
        assert invoke(runner, "points", "--curve", X3_PLUS_X, "--p", "9").exit_code == 1

    def test_warm_cache_matches_cold(self, runner: CliRunner, tmp_path: Path) -> None:
        cache = tmp_path / "traces.json"
        args = ("points", "--curve", LEVEL11, "--p-max", "40", "--json", "--cache", str(cache))
        cold = json_output(invoke(runner, *args))
        first_file = cache.read_text()
        warm = json_output(invoke(runner, *args))
        assert without_timestamp(cold) == without_timestamp(warm)
        assert cache.read_text() == first_file

    def test_clear_cache_recounts(self, runner: CliRunner, tmp_path: Path) -> None:
        cache = tmp_path / "traces.json"
        stale = {"0,-1,-1,0,0|2": {"A_p": 4, "t_p": -1, "u_p": 1, "type": "good"}}
        cache.write_text(json.dumps(stale))
        args = ("points", "--curve", LEVEL11, "--p", "2", "--json", "--cache", str(cache))

        served = json_output(invoke(runner, *args))
        assert served["local_data"][0]["t"] == -1

        recounted = json_output(invoke(runner, *args, "--clear-cache"))
        assert recounted["local_data"][0] == {"p": 2, "type": "good", "A_p": 5, "t": -2, "u": 1}
        assert json.loads(cache.read_text())["0,-1,-1,0,0|2"]["t_p"] == -2


class TestLSeries:

    def test_eta_compare(self, runner: CliRunner) -> None:
        result = invoke(runner, "lseries", "--curve", LEVEL11, "--n", "60", "--eta-compare")
        assert result.exit_code == 0
        assert "euler == eta: true" in result.stdout

    def test_eta_compare_other_curve(self, runner: CliRunner) -> None:
        assert invoke(runner, "lseries", "--curve", X3_PLUS_X, "--n", "20", "--eta-compare").exit_code == 1

    def test_export_and_compare(self, runner: CliRunner, tmp_path: Path) -> None:
        exported = tmp_path / "c.json"
        assert invoke(runner, "lseries", "--curve", LEVEL11, "--n", "30", "--export", str(exported)).exit_code == 0
        assert json.loads(exported.read_text())[:4] == [1, -2, -1, 2]

        data = json_output(invoke(runner, "lseries", "--curve", LEVEL11, "--n", "30", "--compare", str(exported), "--json", "--g"))
        assert data["comparisons"]["euler == file"] == {"equal": True, "first_difference": None}
        assert data["g"][:4] == ["0", "1", "-1", "-1/3"]

    def test_compare_file_difference(self, runner: CliRunner, tmp_path: Path) -> None:
        other = tmp_path / "c.json"
        other.write_text("[1, -2, -1, 3]")
        assert invoke(runner, "lseries", "--curve", LEVEL11, "--n", "10", "--compare", str(other)).exit_code == 1


class TestGroupLaw:

    def test_json(self, runner: CliRunner) -> None:
        data = json_output(invoke(runner, "group-law", "--curve", X3_PLUS_X, "--degree", "6", "--json"))
        assert data["checks"] == {"identity": True, "commutative": True, "associative": True, "integral": True}
        assert [4, 1, "-2"] in data["law"]["coefficients"]

    def test_isomorphism(self, runner: CliRunner) -> None:
        data = json_output(invoke(
            runner, "group-law", "--curve", LEVEL11, "--degree", "6", "--isomorphism", "--phi-order", "12", "--json"
        ))
        assert data["isomorphism"]["chosen"] == "g_inv_after_f"
        chosen = next(c for c in data["isomorphism"]["candidates"] if c["orientation"] == "g_inv_after_f")
        assert chosen["integral"] is True


def test_invalid_config_file(runner: CliRunner, tmp_path: Path) -> None:
    path = tmp_path / "formale.yaml"
    path.write_text("workers: 0\n")
    result = runner.invoke(app, ["--config", str(path), "expand", "--curve", X3_PLUS_X])
    assert result.exit_code == 1


def test_config_file_sets_order(runner: CliRunner, tmp_path: Path) -> None:
    path = tmp_path / "formale.yaml"
    path.write_text("default_order: 10\n")
    result = runner.invoke(app, ["--log-level", "ERROR", "--config", str(path), "expand", "--curve", X3_PLUS_X, "--json"])
    assert len(json_output(result)["b"]) == 10
