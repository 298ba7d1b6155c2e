"""Run the light demo scripts end to end."""

import runpy
from pathlib import Path

import pytest

DEMOS = Path(__file__).resolve().parents[1] / "demos"


@pytest.mark.parametrize("name", ["01_soil_channel.py", "02_wall_and_channel.py", "04_auxin_grid.py", "06_cli_round_trip.py"])
def test_demo_runs(name, capsys):
    runpy.run_path(str(DEMOS / name), run_name="__main__")
    assert capsys.readouterr().out
