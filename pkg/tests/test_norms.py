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
from mlkernel.dyadic import DyadicSet
from mlkernel.grid import GridSignal, unit_config
from mlkernel.norms import (LorentzParams, OrliczParams, decreasing_rearrangement, dyadic_l12, l1_norm,
    level_set_weak_l1, lorentz_norm, lp_norm, orlicz_llogr, s_variation, weak_l1)


@pytest.fixture
def quarter():
    return DyadicSet.from_indices(8, range(64)).indicator()


def test_rearrangement(rng):
    f = GridSignal(unit_config(5), rng.normal(size=32))
    re = decreasing_rearrangement(f)
    assert np.all(np.diff(re.values) < 0)
    assert re.breakpoints[-1] == pytest.approx(1.0)


def test_lorentz_of_indicator(quarter):
    assert lorentz_norm(quarter, LorentzParams(1, 1)) == pytest.approx(0.25)
    assert lorentz_norm(quarter, LorentzParams(2, 2)) == pytest.approx(0.5)
    assert lorentz_norm(quarter, LorentzParams(1, 2)) == pytest.approx(math.sqrt(0.5) * 0.25)
    assert weak_l1(quarter) == pytest.approx(0.25)


def test_lorentz_pp_is_lp(rng):
    f = GridSignal(unit_config(7), rng.normal(size=128))
    for p in (1.0, 1.5, 2.0):
        assert lorentz_norm(f, LorentzParams(p, p)) == pytest.approx(lp_norm(f, p), rel=1e-10)


def test_weak_l1_matches_level_sets(rng):
    f = GridSignal(unit_config(7), rng.standard_cauchy(size=128))
    assert weak_l1(f) == pytest.approx(level_set_weak_l1(f), rel=1e-12)


def test_invalid_params():
    with pytest.raises(ValueError):
        LorentzParams(0, 1)
    with pytest.raises(ValueError):
        OrliczParams(-1)


def test_empty_region(quarter):
    with pytest.raises(ValueError):
        l1_norm(quarter, (2.0, 3.0))


def test_region(quarter):
    assert l1_norm(quarter, (0.0, 0.125)) == pytest.approx(0.125)
    assert l1_norm(quarter, (0.5, 1.0)) == 0


def test_dyadic_l12():
    f = GridSignal(unit_config(4), np.where(np.arange(16) < 8, 3.0, 1.0))
    assert dyadic_l12(f) == pytest.approx(math.sqrt(1.25))
    assert dyadic_l12(GridSignal.zeros(unit_config(4))) == 0


def test_orlicz_r0_is_l1(rng):
    f = GridSignal(unit_config(6), rng.normal(size=64))
    assert orlicz_llogr(f, 0) == pytest.approx(l1_norm(f), rel=1e-12)


def test_orlicz_constant():
    f = GridSignal(unit_config(4), np.full(16, 3.0))
    lam = orlicz_llogr(f, 0.5)
    u = 3.0 / lam
    assert u * math.sqrt(math.log(2 + u)) == pytest.approx(1.0, rel=1e-8)


def test_orlicz_homogeneous(rng):
    f = GridSignal(unit_config(6), rng.exponential(size=64))
    assert orlicz_llogr(f * 2.0, 0.5) == pytest.approx(2 * orlicz_llogr(f, 0.5), rel=1e-8)
    assert orlicz_llogr(GridSignal.zeros(unit_config(3)), 0.5) == 0


def test_s_variation():
    data = np.array([0.0, 1.0, 0.0, 1.0])
    assert s_variation(data, 1) == pytest.approx(3.0)
    assert s_variation(data, 2) == pytest.approx(math.sqrt(3.0))
    monotone = np.linspace(0, 1, 50)
    assert s_variation(monotone, 2) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        s_variation(data, 0.5)


def _variation_by_partitions(values, s):
    n = values.shape[1]
    best = 0.0
    for mask in range(1, 2**n):
        idx = [i for i in range(n) if mask >> i & 1]
        if len(idx) < 2:
            continue
        steps = np.sqrt(np.sum(np.abs(np.diff(values[:, idx], axis=1))**2, axis=0))
        best = max(best, float(np.sum(steps**s)) ** (1/s))
    return best


@pytest.mark.parametrize("s", [1.0, 1.5, 2.0, 3.0])
def test_s_variation_against_all_partitions(rng, s):
    real = rng.normal(size=12)
    assert s_variation(real, s) == pytest.approx(_variation_by_partitions(real[None, :], s), rel=1e-12)
    vector = rng.normal(size=(2, 10)) + 1j*rng.normal(size=(2, 10))
    assert s_variation(vector, s) == pytest.approx(_variation_by_partitions(vector, s), rel=1e-12)


@pytest.mark.parametrize("s", [1.0, 2.0, 4.0])
def test_s_variation_of_a_spike(s):
    assert s_variation(np.array([0.0, 3.0, 0.0]), s) == pytest.approx(2 ** (1/s) * 3.0)
