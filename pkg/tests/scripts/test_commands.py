"""
Command-line entry points.
"""
import csv
import runpy

import pytest

from entanglement_harvest.__main__ import main as harvest
from entanglement_harvest.scripts import run_preset, run_sweep


def _rows(path):
    with open(path, encoding="utf-8", newline="") as handle:
        return list(csv.reader(handle))


def test_sweep_writes_csv(tmp_path):
    out = tmp_path / "scalar.csv"
    code = run_sweep.main(["--scenario", "scalar", "--set", "sigma=0.5", "--set", "L=6",
                           "--axis", "omega:1:2:2", "--threads", "1", "--out", str(out), "-q"])
    assert code == 0
    rows = _rows(out)
    assert rows[0][:3] == ["omega", "L", "sigma"]
    assert len(rows) == 3


def test_flags_override_config_file(tmp_path):
    config = tmp_path / "sweep.conf"
    config.write_text("scenario = scalar\nsigma = 0.5\nL = 6\nformat = json\nomega = 1\n",
                      encoding="utf-8")
    out = tmp_path / "point.csv"
    code = run_sweep.main(["--config", str(config), "--format", "csv", "--set", "omega=2",
                           "--threads", "1", "--out", str(out), "-q"])
    assert code == 0
    header, row = _rows(out)
    assert float(row[header.index("omega")]) == 2.0
    assert float(row[header.index("sigma")]) == 0.5


def test_flagged_rows_give_exit_one(tmp_path):
    code = run_sweep.main(["--scenario", "scalar", "--axis", "sigma:-0.5:0.5:2",
                           "--threads", "1", "--out", str(tmp_path / "bad.csv"), "-q"])
    assert code == 1


def test_configuration_errors_give_exit_two(tmp_path):
    assert run_sweep.main(["--scenario", "tachyon", "-q"]) == 2
    assert run_sweep.main(["--scenario", "scalar", "--set", "sigma", "-q"]) == 2
    assert run_sweep.main(["-q"]) == 2
    assert run_sweep.main(["--config", str(tmp_path / "missing.conf"), "-q"]) == 2
    assert run_preset.main(["fig-unknown", "-q"]) == 2


def test_preset_listing(capsys):
    assert run_preset.main(["--list"]) == 0
    assert "fig-scalar-omega" in capsys.readouterr().out


def test_dispatcher(capsys):
    assert harvest(["bogus"]) == 2
    assert "Unknown command" in capsys.readouterr().err
    assert harvest(["--help"]) == 0
    assert harvest([]) == 2
    assert harvest(["preset", "--list"]) == 0


@pytest.mark.parametrize("module, argv, expected", [
    ("entanglement_harvest.scripts.run_preset", ["--list"], 0),
    ("entanglement_harvest.scripts.run_sweep", ["-q"], 2),
])
def test_scripts_exit_with_main_return_code(monkeypatch, module, argv, expected):
    monkeypatch.setattr("sys.argv", [module] + argv)
    with pytest.raises(SystemExit) as excinfo:
        runpy.run_module(module, run_name="__main__")
    assert excinfo.value.code == expected
