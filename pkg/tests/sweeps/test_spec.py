"""
Sweep specifications and their text forms.
"""
import pytest

from entanglement_harvest.errors import ConfigurationError
from entanglement_harvest.sweeps import Axis, Overlay, SweepSpec, parse_axis, parse_overlay


def test_parse_linear_axis():
    axis = parse_axis("omega:0:15:151")
    assert axis == Axis("omega", 0.0, 15.0, 151)
    assert axis.values()[1] == pytest.approx(0.1)


def test_parse_log_axis():
    axis = parse_axis("sigma:0.01:1:3:log")
    assert axis.log
    assert list(axis.values()) == pytest.approx([0.01, 0.1, 1.0])
    assert parse_axis(axis.to_text()) == axis


@pytest.mark.parametrize("text", ["omega:0:15", "omega:0:15:ten", ":0:1:3", "omega:a:1:3",
                                  "omega:0:1:3:cubic"])
def test_malformed_axis(text):
    with pytest.raises(ConfigurationError):
        parse_axis(text)


def test_parse_overlay():
    assert parse_overlay("L=4, 6,8") == Overlay("L", (4.0, 6.0, 8.0))
    with pytest.raises(ConfigurationError):
        parse_overlay("L")
    with pytest.raises(ConfigurationError):
        parse_overlay("L=4,x")


def test_points_are_overlay_major():
    spec = SweepSpec("scalar", {"sigma": 0.2}, Axis("omega", 1.0, 2.0, 2),
                     [Overlay("L", (4.0, 8.0))])
    assert [(p["L"], p["omega"]) for p in spec.points()] == [(4.0, 1.0), (4.0, 2.0), (8.0, 1.0), (8.0, 2.0)]
    assert all(p["sigma"] == 0.2 for p in spec.points())


def test_single_point_without_axis():
    spec = SweepSpec("scalar", {"omega": 3.0})
    assert list(spec.points()) == [{"omega": 3.0}]


def test_parameter_names_order():
    spec = SweepSpec("scalar", {"theta": 0.1, "T": 1.0}, Axis("omega", 0.0, 1.0, 2),
                     [Overlay("L", (4.0,))])
    assert spec.parameter_names() == ["omega", "L", "T", "theta"]


@pytest.mark.parametrize("spec", [
    SweepSpec(""),
    SweepSpec("scalar", rel_tol=0.0),
    SweepSpec("scalar", rel_tol=1e-2),
    SweepSpec("scalar", {"sigma": float("nan")}),
    SweepSpec("scalar", axis=Axis("omega", 0.0, 1.0, 1)),
    SweepSpec("scalar", axis=Axis("sigma", 0.0, 1.0, 3, log=True)),
    SweepSpec("scalar", axis=Axis("L", 1.0, 2.0, 3), overlays=[Overlay("L", (4.0,))]),
    SweepSpec("scalar", overlays=[Overlay("L", ())]),
])
def test_invalid_specs(spec):
    with pytest.raises(ConfigurationError):
        spec.validate()


def test_echo_is_plain_data():
    spec = SweepSpec("scalar", {"sigma": 0.2}, Axis("omega", 0.0, 1.0, 2), [Overlay("L", (4.0,))])
    assert spec.echo() == {
        "scenario": "scalar",
        "fixed": {"sigma": 0.2},
        "axis": "omega:0.0:1.0:2",
        "overlays": ["L=4.0"],
        "rel_tol": 1e-8,
        "audit": False,
    }
