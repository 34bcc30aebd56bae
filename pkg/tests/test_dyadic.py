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
from mlkernel.dyadic import DyadicInterval, DyadicSet, haar_analyze, haar_synthesize
from mlkernel.grid import GridConfig, GridSignal, unit_config
from mlkernel.utils import GridError


def test_interval():
    I = DyadicInterval(2, 1)
    assert (I.start, I.end, I.length) == (0.25, 0.5, 0.25)
    assert I.children() == (DyadicInterval(3, 2), DyadicInterval(3, 3))
    assert I.parent() == DyadicInterval(1, 0)
    assert I.contains(DyadicInterval(4, 7))
    assert not I.contains(DyadicInterval(4, 8))
    assert I.cells(4) == slice(4, 8)
    assert len(list(I.descendants(3))) == 3


def test_invalid_interval():
    with pytest.raises(ValueError):
        DyadicInterval(2, 4)
    with pytest.raises(ValueError):
        DyadicInterval(0, 0).parent()


def test_set_hex():
    E = DyadicSet.from_hex("0x5", 3)
    assert list(np.flatnonzero(E.mask)) == [0, 2]
    assert E.count == 2
    assert E.measure == 0.25
    assert E.to_hex() == "5"
    assert E.count_in(DyadicInterval(1, 0)) == 2
    assert E.count_in(DyadicInterval(1, 1)) == 0


def test_set_invalid():
    with pytest.raises(ValueError):
        DyadicSet.from_int(2, 1 << 4)
    with pytest.raises(ValueError):
        DyadicSet.from_hex("xyz", 3)


def test_haar_perfect_reconstruction(rng):
    f = GridSignal(unit_config(6), rng.normal(size=64))
    coeffs = haar_analyze(f, 6)
    assert coeffs.max_level == 6
    back = haar_synthesize(coeffs)
    assert np.allclose(back.samples, f.samples, atol=1e-12)
    assert coeffs.energy() == pytest.approx(float(np.sum(f.real**2)) / 64, rel=1e-12)


def test_haar_single_coefficient():
    f = DyadicSet.from_indices(2, [0]).indicator()
    coeffs = haar_analyze(f, 2)
    # <chi_[0,1/4), psi_[0,1)> = 1/4, <., psi_[0,1/2)> = sqrt(2)/4
    assert coeffs[DyadicInterval(0, 0)] == pytest.approx(0.25)
    assert coeffs[DyadicInterval(1, 0)] == pytest.approx(2**0.5 / 4)
    assert coeffs[DyadicInterval(1, 1)] == 0


def test_haar_needs_unit_interval():
    with pytest.raises(GridError):
        haar_analyze(GridSignal.zeros(GridConfig(4, 1/8)), 2)
