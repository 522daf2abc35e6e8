"""Tests de la escritura de tablas."""

import io
import json

import numpy as np
import pandas as pd

from app.experiments.tables import render_table, write_table
from app.schemas.run import GridSpec, OutputFormat, RunConfig, Subcommand

CONFIG = RunConfig(
    subcommand=Subcommand.FIGURE,
    figure_id=4,
    grids=[GridSpec(name="nth", min=0.0, max=1.0, steps=2)],
    fixed={"ns": 1.0},
)
FRAME = pd.DataFrame({"nth": [0.0, 1.0], "qcb_sts": [0.1, np.nan]})


def test_csv_is_deterministic_and_carries_provenance():
    text = render_table(FRAME, CONFIG)
    assert text == render_table(FRAME, CONFIG)
    lines = text.splitlines()
    assert lines[0] == "# subcommand=figure"
    assert "# figure=4" in lines
    assert "# fixed=ns:1.0" in lines
    frame = pd.read_csv(io.StringIO(text), comment="#")
    assert list(frame.columns) == ["nth", "qcb_sts"]
    assert frame["qcb_sts"].iloc[0] == 0.1


def test_json_has_config_and_null_for_nan():
    payload = json.loads(render_table(FRAME, CONFIG, OutputFormat.JSON))
    assert payload["config"]["figure_id"] == 4
    assert payload["rows"][1]["qcb_sts"] is None
    assert payload["rows"][0]["qcb_sts"] == 0.1


def test_write_table_to_file(tmp_path):
    path = tmp_path / "table.csv"
    write_table(FRAME, CONFIG, str(path))
    assert path.read_text(encoding="utf-8") == render_table(FRAME, CONFIG)


def test_grid_spec_parse():
    grid = GridSpec.parse("nth:0:2:5")
    assert (grid.name, grid.min, grid.max, grid.steps) == ("nth", 0.0, 2.0, 5)
    np.testing.assert_allclose(grid.values(), [0.0, 0.5, 1.0, 1.5, 2.0])
