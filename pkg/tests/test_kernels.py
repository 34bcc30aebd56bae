#
#  Multiplier Lab
#  Fourier multipliers near L1, on a grid.
#  Copyright the Multiplier Lab authors 2026
#
#  This program is free software: you can redistribute it and/or modify
#  it under the terms of the GNU General Public License as published by
#  the Free Software Foundation, either version 3 of the License, or
#  (at your option) any later version.
#
#  This program is distributed in the hope that it will be useful,
#  but WITHOUT ANY WARRANTY; without even the implied warranty of
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#  GNU General Public License for more details.
#
#  You should have received a copy of the GNU General Public License
#  along with this program.  If not, see <https://www.gnu.org/licenses/>.
#

import math
import numpy as np
import pytest
from scipy.special import gamma
from mlkernel.bumps import ETA
from mlkernel.dyadic import DyadicInterval
from mlkernel.grid import GridConfig, GridSignal
from mlkernel.kernels import (hl_maximal, littlewood_paley, littlewood_paley_wide, lp_partition,
    lp_partition_defect, lp_symbol, phi_interval, phi_j, phi_kernel)
from mlkernel.utils import BandOverflowError


def test_lp_symbol_band():
    config = GridConfig(8, 1/16)
    m = lp_symbol(config, 0)
    assert np.all(m.values[0, np.abs(m.xi) < 0.5] == 0)
    with pytest.raises(BandOverflowError):
        lp_symbol(config, 2)


def test_wide_projection_reproduces(rng):
    config = GridConfig(10, 1/32)
    f = GridSignal(config, rng.normal(size=config.n))
    for j in (-2, 0, 1):
        narrow = littlewood_paley(j, f)
        both = littlewood_paley(j, littlewood_paley_wide(j, f))
        assert np.allclose(both.samples, narrow.samples, atol=1e-10)


def test_partition_defect():
    eta_defect, beta_defect = lp_partition_defect(GridConfig(10, 1/16), ETA)
    assert beta_defect < 1e-12
    assert eta_defect >= 0


def test_lp_partition_band():
    f = GridSignal.zeros(GridConfig(6, 1/4))
    with pytest.raises(BandOverflowError):
        lp_partition(3, f)


def test_phi_integral():
    config = GridConfig(10, 1/16)
    expected = math.sqrt(math.pi) * gamma(0.25) / gamma(0.75)
    for j in (0, 1):
        phi = phi_j(config, j)
        assert float(np.sum(phi.real) * config.h) == pytest.approx(expected, rel=1e-3)


def test_phi_peak_and_symmetry():
    config = GridConfig(8, 1/8)
    phi = phi_kernel(config, 2.0)
    center = config.n // 2
    assert np.argmax(phi.real[0]) == center
    assert np.allclose(phi.real[0, center+1:], phi.real[0, center-1:0:-1][:config.n//2 - 1])


def test_phi_interval_scale():
    config = GridConfig(8, 1/8)
    a = phi_interval(config, DyadicInterval(2, 1))
    b = phi_interval(config, 0.25)
    assert np.allclose(a.samples, b.samples)
    with pytest.raises(ValueError):
        phi_interval(config, -1.0)
    with pytest.raises(ValueError):
        phi_kernel(config, 1.0, exponent=0.5)


def test_hl_maximal():
    values = np.zeros(8)
    values[0] = 1
    M = hl_maximal(GridSignal(GridConfig(3, 1.0), values))
    assert np.allclose(M.real[0], 1 / np.arange(1, 9))


def test_hl_maximal_dominates(rng):
    f = GridSignal(GridConfig(7, 1/8), rng.normal(size=128))
    assert np.all(hl_maximal(f).real[0] >= f.magnitude() - 1e-12)


def test_hl_maximal_against_all_runs(rng):
    mag = np.abs(rng.normal(size=24))
    M = hl_maximal(GridSignal(GridConfig(3, 1.0), mag[:8])).real[0]
    expected = [max(mag[a:b+1].mean() for a in range(i+1) for b in range(i, 8)) for i in range(8)]
    assert np.allclose(M, expected, rtol=1e-12)

    config = GridConfig(4, 0.5)
    f = GridSignal(config, mag[8:] * np.exp(1j * rng.uniform(0, 2*np.pi, 16)))
    M = hl_maximal(f).real[0]
    expected = [max(mag[8:][a:b+1].mean() for a in range(i+1) for b in range(i, 16)) for i in range(16)]
    assert np.allclose(M, expected, rtol=1e-12)


def test_phi_tail_decay():
    config = GridConfig(21, 1.0)
    phi = phi_j(config, 0, images=4)
    x = phi.x
    window = (x >= 1e2) & (x <= 1e4)
    slope = np.polyfit(np.log(x[window]), np.log(phi.real[0, window]), 1)[0]
    assert slope == pytest.approx(-1.5, abs=0.02)
