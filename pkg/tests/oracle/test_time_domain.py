import itertools

import numpy as np
import pytest

from entanglement_harvest.core import SwitchingProfile, q_factor
from entanglement_harvest.errors import DomainError
from entanglement_harvest.oracle import q_time_oracle


def test_zero_momentum_is_real():
    value = q_time_oracle(0.0, 1.5, SwitchingProfile(1.0))
    assert abs(value.imag) < 1e-13
    assert value.real == pytest.approx(q_factor(0.0, 1.5, SwitchingProfile(1.0)).real, abs=1e-12)


def test_matches_closed_form_on_grid():
    sw = SwitchingProfile(1.0)
    grid = np.linspace(0.0, 5.0, 11)
    bad = []
    for k, omega in itertools.product(grid, grid):
        value = q_time_oracle(float(k), float(omega), sw)
        expected = complex(q_factor(k, omega, sw))
        if not np.isfinite(value) or abs(value - expected) > 1e-10:
            bad.append((k, omega, value, expected))
    assert bad == []


@pytest.mark.parametrize("T", [0.5, 2.0])
def test_matches_closed_form_for_other_widths(T):
    sw = SwitchingProfile(T)
    for kT, omegaT in [(0.0, 0.0), (0.5, 3.0), (4.0, 1.0), (10.0, 10.0)]:
        k, omega = kT / T, omegaT / T
        assert q_time_oracle(k, omega, sw) == pytest.approx(complex(q_factor(k, omega, sw)),
                                                            abs=1e-10 * T ** 2)


@pytest.mark.parametrize("k, omega", [(13.0, 1.0), (1.0, 12.5), (-0.1, 1.0)])
def test_argument_range(k, omega):
    with pytest.raises(DomainError):
        q_time_oracle(k, omega, SwitchingProfile(1.0))
