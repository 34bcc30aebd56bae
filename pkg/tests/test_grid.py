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

import numpy as np
import pytest
from mlkernel.grid import GridConfig, GridSignal, Symbol, convolve, dft, idft, kernel, unit_config
from mlkernel.utils import GridError


def test_config_derived():
    config = GridConfig(10, 1/16)
    assert config.n == 1024
    assert config.T == 64
    assert config.nyquist == 8
    assert config.freq_step == 1/64
    assert config.frequency_index(0.0) == 512
    assert config.frequencies()[config.frequency_index(1.0)] == 1.0


@pytest.mark.parametrize("L, h", [(0, 1.0), (3, 0.0), (3, -1.0), (2.5, 1.0)])
def test_config_invalid(L, h):
    with pytest.raises(GridError):
        GridConfig(L, h)


def test_signal_shape_mismatch():
    with pytest.raises(GridError):
        GridSignal(GridConfig(3, 1.0), np.zeros(7))


def test_symbol_must_be_finite():
    values = np.zeros(8)
    values[3] = np.nan
    with pytest.raises(GridError):
        Symbol(GridConfig(3, 1.0), values)


def test_gaussian_transform():
    config = GridConfig(10, 1/32)
    f = GridSignal.from_function(config, lambda x: np.exp(-np.pi * x**2), -config.T/2)
    spec = dft(f)
    expected = np.exp(-np.pi * spec.xi**2)
    assert np.allclose(spec.coeffs[0], expected, atol=1e-9)


def test_inverse(rng):
    config = GridConfig(8, 1/8)
    f = GridSignal(config, rng.normal(size=(2, config.n)) + 1j*rng.normal(size=(2, config.n)), 0.75)
    back = idft(dft(f))
    assert back.origin == f.origin
    assert np.allclose(back.samples, f.samples, atol=1e-12)


def test_kernel_of_one_is_delta():
    config = GridConfig(6, 1/4)
    K = kernel(Symbol.constant(config))
    assert K.origin == -config.T/2
    expected = np.zeros(config.n)
    expected[config.n // 2] = 1 / config.h
    assert np.allclose(K.samples[0], expected, atol=1e-9)


def test_convolve_with_delta(rng):
    config = GridConfig(6, 1/4)
    f = GridSignal(config, rng.normal(size=config.n))
    delta = np.zeros(config.n)
    delta[0] = 1 / config.h
    out = convolve(f, GridSignal(config, delta))
    assert np.allclose(out.samples, f.samples, atol=1e-10)


def test_convolve_grid_mismatch():
    a = GridSignal.zeros(GridConfig(4, 1.0))
    b = GridSignal.zeros(GridConfig(4, 0.5))
    with pytest.raises(GridError):
        convolve(a, b)


def test_region_mask():
    f = GridSignal.zeros(unit_config(3))
    assert np.count_nonzero(f.region_mask((0.25, 0.5))) == 2
    assert np.all(f.region_mask(None))
