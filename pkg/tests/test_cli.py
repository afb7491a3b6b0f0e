"""Exit codes, output formats, and environment handling of the CLI."""

import json

import pytest
from click.testing import CliRunner

from ajack.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def test_jack_compute_json_is_deterministic(runner):
    args = ["jack", "compute", "--K", "1", "--k", "2", "--l", "2",
            "--order", "5"]
    a = runner.invoke(main, args)
    b = runner.invoke(main, args)
    assert a.exit_code == 0
    assert a.output == b.output
    body = json.loads(a.output)
    assert body["alpha"] == "1/20"


def test_default_order_env_var(runner, monkeypatch):
    monkeypatch.setenv("AJACK_DEFAULT_ORDER", "3")
    r = runner.invoke(main, ["jack", "compute", "--K", "1", "--k", "1",
                             "--l", "1"])
    assert r.exit_code == 0
    assert json.loads(r.output)["series"]["order"] == 3 * \
        json.loads(r.output)["series"]["gridDenominator"]


def test_text_and_csv_formats(runner):
    base = ["smatrix", "relations", "--K", "1", "--k", "2"]
    txt = runner.invoke(main, base + ["--format", "text"])
    csv = runner.invoke(main, base + ["--format", "csv"])
    assert txt.exit_code == 0 and "pass" in txt.output
    assert csv.exit_code == 0 and csv.output.startswith("key,value")


def test_output_file(runner, tmp_path):
    dest = tmp_path / "report.json"
    r = runner.invoke(main, ["jack", "heat-check", "--K", "1", "--k", "2",
                             "--order", "5", "--output", str(dest)])
    assert r.exit_code == 0
    assert json.loads(dest.read_text())["pass"] is True


def test_invalid_label_exits_2(runner):
    r = runner.invoke(main, ["jack", "compute", "--K", "1", "--k", "2",
                             "--l", "9", "--order", "4"])
    assert r.exit_code == 2


def test_bad_complex_exits_2(runner):
    r = runner.invoke(main, ["modular", "verify-s", "--K", "1", "--k", "1",
                             "--z", "bogus"])
    assert r.exit_code == 2


def test_missing_option_exits_2(runner):
    r = runner.invoke(main, ["jack", "compute", "--K", "1"])
    assert r.exit_code == 2


def test_failed_check_exits_1(runner):
    r = runner.invoke(main, ["modular", "verify-s", "--K", "1", "--k", "1",
                             "--order", "10", "--tol", "1e-30"])
    assert r.exit_code == 1


def test_check_commands_pass(runner):
    assert runner.invoke(main, ["jack", "check-level1", "--k-max", "2",
                                "--order", "6"]).exit_code == 0
    assert runner.invoke(main, ["smatrix", "cross-check", "--k-max", "3",
                                "--K-max", "2"]).exit_code == 0
    assert runner.invoke(main, ["theta", "check-laws",
                                "--samples", "4"]).exit_code == 0


def test_smatrix_build_forms(runner):
    for form in ("product", "macdonald", "fixture"):
        r = runner.invoke(main, ["smatrix", "build", "--K", "2", "--k", "2",
                                 "--form", form])
        assert r.exit_code == 0
        assert json.loads(r.output)["rows"] == [2, 3, 4]


def test_selberg_and_gfactor(runner):
    r = runner.invoke(main, ["selberg", "--n", "1", "--alpha", "1",
                             "--beta", "1", "--gamma", "0.25"])
    assert r.exit_code == 0
    assert abs(json.loads(r.output)["value"] - 1.0) < 1e-12
    r = runner.invoke(main, ["gfactor", "--K", "1", "--k", "2", "--m", "3"])
    assert r.exit_code == 0


def test_acceptance_quick(runner):
    r = runner.invoke(main, ["suite", "acceptance", "--quick",
                             "--only", "A1", "--only", "A4"])
    assert r.exit_code == 0
    assert "A1: PASS" in r.output and "A4: PASS" in r.output
