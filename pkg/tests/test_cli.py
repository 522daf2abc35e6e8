"""Tests de la CLI de punta a punta."""

import io
import json
import math

import pandas as pd
import pytest

from app.main import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def read_rows(text):
    return pd.read_csv(io.StringIO(text), comment="#")


def test_copies_command(capsys):
    code, out = run_cli(capsys, "copies", "--family", "sts", "--ns", "0.1", "--nth", "1")
    assert code == 0
    row = read_rows(out).iloc[0]
    assert row["copies"] == 7
    assert row["side"] == "upper"


def test_figure_command_with_grid(capsys):
    code, out = run_cli(capsys, "figure", "--id", "4", "--grid", "nth:0:2:3")
    assert code == 0
    assert out.startswith("# subcommand=figure")
    frame = read_rows(out)
    assert len(frame) == 3
    assert frame["qcb_sts"].tolist() == pytest.approx([0.1] * 3, rel=1e-6)


def test_figure_command_rejects_flags_the_figure_ignores(capsys):
    code, _ = run_cli(capsys, "figure", "--id", "4", "--nth", "3")
    assert code == 2
    code, _ = run_cli(capsys, "figure", "--id", "4", "--grid", "nth:0:2:3", "--r", "0.5")
    assert code == 2


@pytest.mark.parametrize("grid", ["alpha:0:1:2", "nth:0:2", "nth:2:0:3"])
def test_figure_command_rejects_bad_grids(capsys, grid):
    code, _ = run_cli(capsys, "figure", "--id", "4", "--grid", grid)
    assert code == 2


def test_state_command(capsys):
    code, out = run_cli(capsys, "state", "--family", "sts", "--r", "0.5", "--nth1", "1")
    assert code == 0
    row = read_rows(out).iloc[0]
    assert row["n_total"] == pytest.approx(2.086161, abs=1e-6)
    assert bool(row["physical"])


def test_state_command_rejects_negative_noise(capsys):
    code, _ = run_cli(capsys, "state", "--family", "sts", "--r", "0.5", "--nth1", "-1")
    assert code == 2


def test_metric_command_default_coding(capsys):
    code, out = run_cli(capsys, "metric", "--family", "sts", "--r", "0.5")
    assert code == 0
    row = read_rows(out).iloc[0]
    assert row["fidelity"] == pytest.approx(2.0 / (1.0 + math.cosh(1.0) ** 2), rel=1e-9)
    assert row["xi"] == pytest.approx(1.0)


def test_threshold_command(capsys):
    code, out = run_cli(capsys, "threshold", "--r", "0.5")
    assert code == 0
    row = read_rows(out).iloc[0]
    assert 3.5 < row["nth1_threshold_closed"] < 3.6
    assert 0.0 < row["nth1_threshold"] < 1e3
    assert row["reference"] == "tmsvs_same_r"


def test_threshold_command_rejects_bad_reference(capsys):
    code, _ = run_cli(capsys, "threshold", "--r", "0.5", "--reff", "-0.1")
    assert code == 2


def test_missing_arguments_exit_through_argparse():
    with pytest.raises(SystemExit):
        main(["copies", "--family", "sts"])
    with pytest.raises(SystemExit):
        main([])


def test_output_file(tmp_path, capsys):
    path = tmp_path / "copies.json"
    code, out = run_cli(
        capsys, "copies", "--family", "sts", "--ns", "0.1", "--nth", "1", "--out", str(path), "--format", "json"
    )
    assert code == 0
    assert out == ""
    payload = json.loads(path.read_text(encoding="utf-8"))
    assert payload["rows"][0]["copies"] == 7
    assert payload["config"]["subcommand"] == "copies"


def test_validate_command_on_small_box(capsys):
    code, out = run_cli(
        capsys, "validate", "--cutoff", "16", "--family", "coherent-thermal",
        "--grid", "nth:0:0.2:2", "--grid", "alpha:0:0.3:2",
    )
    assert code == 0
    frame = read_rows(out)
    assert len(frame) == 4
    assert not frame["truncated"].any()
