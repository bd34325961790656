"""
CSV and JSON rendering of sweep tables.
"""
import csv
import io
import json
import math

import pytest

from entanglement_harvest import __version__
from entanglement_harvest.core import coupling_from_mass
from entanglement_harvest.errors import DomainError
from entanglement_harvest.sweeps import Axis, SweepSpec, emit, render
from entanglement_harvest.sweeps.emit import format_value
from entanglement_harvest.sweeps.runner import SweepRow, SweepTable

NAN = float("nan")


@pytest.fixture
def table():
    spec = SweepSpec("scalar", {"L": 6.0}, Axis("omega", 1.0, 2.0, 2))
    rows = [
        SweepRow({"L": 6.0, "omega": 1.0}, 0.1, 0.1, 0.3, 0.2, 1e-12, 2e-12),
        SweepRow({"L": 6.0, "omega": 2.0}, NAN, NAN, NAN, NAN, NAN, NAN, True, "DomainError: bad"),
    ]
    return SweepTable(spec, rows)


def test_format_value():
    assert format_value(0.1) == "0.10000000000000001"
    assert format_value(True) == "1"
    assert format_value(False) == "0"
    assert format_value(NAN) == "nan"
    assert format_value("x") == "x"


def test_csv_layout(table):
    lines = list(csv.reader(io.StringIO(render(table, "csv"))))
    assert lines[0] == ["omega", "L", "L_AA", "L_BB", "abs_M", "negativity", "L_error",
                        "M_error", "flagged", "message"]
    assert lines[1][:3] == ["1", "6", "0.10000000000000001"]
    assert lines[2][8:] == ["1", "DomainError: bad"]
    assert len(lines) == 3


def test_json_metadata_and_nulls(table):
    document = json.loads(render(table, "json"))
    metadata = document["metadata"]
    assert metadata["version"] == __version__
    assert metadata["spec"]["scenario"] == "scalar"
    assert metadata["coupling_factor"] == 1.0
    assert metadata["eps_tail"] > 0
    assert document["rows"][0]["abs_M"] == 0.3
    assert document["rows"][1]["L_AA"] is None
    assert document["rows"][1]["flagged"] is True


def test_mass_rescaling(table):
    document = json.loads(render(table, "json", mass_planck=1e-3))
    factor = coupling_from_mass(1e-3) ** 2
    row = document["rows"][0]
    assert document["metadata"]["coupling_factor"] == pytest.approx(factor)
    assert row["L_AA"] == pytest.approx(0.1 * factor)
    assert row["negativity"] == pytest.approx(0.2 * factor)


def test_empty_table_and_unknown_format(table):
    with pytest.raises(DomainError):
        render(SweepTable(table.spec, []), "csv")
    with pytest.raises(DomainError):
        render(table, "xml")


def test_emit_to_path_and_stream(table, tmp_path):
    path = tmp_path / "out.csv"
    emit(table, "csv", str(path))
    stream = io.StringIO()
    emit(table, "csv", stream)
    assert path.read_text(encoding="utf-8") == stream.getvalue() == render(table, "csv")
    assert not math.isnan(float(stream.getvalue().splitlines()[1].split(",")[2]))
