"""
Row evaluation, flagging and parallel determinism.
"""
import math

import pytest

from entanglement_harvest.errors import ConfigurationError
from entanglement_harvest.kernels import build_kernels, integrate_kernels
from entanglement_harvest.sweeps import (
    Axis, Overlay, SweepSpec, build_pair, compute_row, render, run_sweep,
)


def _spec(**kwargs):
    defaults = dict(scenario="scalar", fixed={"sigma": 0.5, "L": 6.0},
                    axis=Axis("omega", 0.5, 2.5, 3), rel_tol=1e-8)
    defaults.update(kwargs)
    return SweepSpec(**defaults)


def test_row_matches_direct_kernel_evaluation():
    row = compute_row(_spec(), {"sigma": 0.5, "L": 6.0, "omega": 2.0})
    A, B, geo = build_pair("scalar", {"sigma": 0.5, "L": 6.0, "omega": 2.0})
    integrals = integrate_kernels(build_kernels("scalar", A, B, geo), 1e-8)
    assert not row.flagged
    assert row.L_AA == row.L_BB == integrals.L
    assert row.abs_M == abs(integrals.M)
    assert row.negativity == pytest.approx(max(0.0, abs(integrals.M) - integrals.L), abs=1e-15)


def test_bad_points_are_flagged_not_raised():
    table = run_sweep(_spec(axis=Axis("sigma", -0.5, 0.5, 3), fixed={"omega": 2.0}), threads=1)
    assert table.flagged_count == 2
    bad = table.rows[0]
    assert bad.flagged and math.isnan(bad.L_AA) and math.isnan(bad.negativity)
    assert bad.message.startswith("DomainError")
    assert not table.rows[2].flagged


def test_rows_follow_spec_order():
    spec = _spec(overlays=[Overlay("L", (4.0, 8.0))], fixed={"sigma": 0.5})
    table = run_sweep(spec, threads=2)
    assert [row.params for row in table] == list(spec.points())
    assert table.columns[:3] == ["omega", "L", "sigma"]


def test_thread_count_does_not_change_output():
    spec = _spec(overlays=[Overlay("L", (4.0, 8.0))], fixed={"sigma": 0.5})
    assert render(run_sweep(spec, threads=1), "csv") == render(run_sweep(spec, threads=3), "csv")


def test_unknown_scenario_and_parameter_are_configuration_errors():
    with pytest.raises(ConfigurationError):
        run_sweep(_spec(scenario="tachyon"), threads=1)
    with pytest.raises(ConfigurationError):
        run_sweep(_spec(fixed={"mass": 1.0}), threads=1)


def test_scaled_row_recomputes_negativity():
    row = compute_row(_spec(), {"sigma": 0.5, "L": 6.0, "omega": 2.0})
    scaled = row.scaled(1e-4)
    assert scaled.L_AA == pytest.approx(1e-4 * row.L_AA)
    assert scaled.abs_M == pytest.approx(1e-4 * row.abs_M)
    assert scaled.negativity == pytest.approx(1e-4 * row.negativity, abs=1e-20)
