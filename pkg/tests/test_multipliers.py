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
from mlkernel.grid import Atom, GridConfig, GridSignal, Symbol
from mlkernel.multipliers import (IntervalFamily, apply_multiplier, component_range, dilate,
    frequency_component, jump_atom_bound, marcinkiewicz_functional, r2_functional, split_characteristic,
    variation_functional, verify_basic_inequality, x_atom_norm, x_prime_q_norm)
from mlkernel.utils import BandOverflowError, GridError, OverlapError, SupportError


@pytest.fixture
def config():
    return GridConfig(10, 1/16)


def test_identity(config, rng):
    f = GridSignal(config, rng.normal(size=(3, config.n)))
    out = apply_multiplier(Symbol.constant(config), f)
    assert np.allclose(out.samples, f.samples, atol=1e-12)


def test_composition(config, rng):
    f = GridSignal(config, rng.normal(size=config.n))
    m1 = Symbol(config, rng.normal(size=config.n))
    m2 = Symbol(config, rng.normal(size=config.n))
    twice = apply_multiplier(m1, apply_multiplier(m2, f))
    once = apply_multiplier(m1 * m2, f)
    assert np.allclose(twice.samples, once.samples, atol=1e-10)


def test_vector_symbol_on_scalar(config, rng):
    f = GridSignal(config, rng.normal(size=config.n))
    m = Symbol(config, np.ones((4, config.n)))
    out = apply_multiplier(m, f)
    assert out.channels == 4
    with pytest.raises(GridError):
        apply_multiplier(m, GridSignal(config, np.zeros((3, config.n))))
    with pytest.raises(GridError):
        apply_multiplier(m, GridSignal.zeros(GridConfig(9, 1/16)))


def test_dilate(config):
    m = Symbol.from_function(config, lambda xi: xi)
    d = dilate(m, 2)
    idx = config.frequency_index(1.0)
    assert d.values[0, idx] == pytest.approx(2.0)
    assert d.values[0, 0] == 0
    with pytest.raises(ValueError):
        dilate(m, 3)
    with pytest.raises(ValueError):
        dilate(m, 0.5)


def test_component_support(config):
    assert list(component_range(config)) == list(range(-6, 2))
    mj = frequency_component(Symbol.constant(config), 0)
    assert np.all(mj.values[0, np.abs(mj.xi) < 0.5] == 0)
    assert np.all(mj.values[0, np.abs(mj.xi) > 4] == 0)
    with pytest.raises(BandOverflowError):
        frequency_component(Symbol.constant(config), 2)
    with pytest.raises(ValueError):
        frequency_component(Symbol.constant(config), 0, cutoff="box")


def test_marcinkiewicz_of_constant(config):
    report = marcinkiewicz_functional(Symbol.constant(config), threshold=5)
    assert report.passed
    assert 3.0 <= report.sup <= 4.0 + 1e-9
    assert set(report.per_j) == set(component_range(config))


def test_variation_and_r2_functionals(config):
    m = Symbol.constant(config)
    v1 = marcinkiewicz_functional(m)
    v2 = variation_functional(m, 2, threshold=2.5)
    r2 = r2_functional(m)
    assert v2.name == "V_2"
    assert v2.passed
    assert math.sqrt(3) - 1e-9 <= v2.sup <= 2.0 + 1e-9
    for j, value in v2.per_j.items():
        assert value <= v1.per_j[j] + 1e-9
        assert 0 < r2.per_j[j] <= v1.per_j[j] + 1e-9
    refined = variation_functional(m, 2, refined=Symbol.constant(GridConfig(11, 1/32)))
    assert refined.refinement_change == pytest.approx(0.0, abs=1e-9)


def test_whoop_cutoff(config):
    mj = frequency_component(Symbol.constant(config), 0, cutoff="whoop")
    xi = np.abs(mj.xi)
    assert np.allclose(mj.values[0, (xi >= 1) & (xi <= 2)], 1.0)
    assert np.all(mj.values[0, (xi < 0.5) | (xi > 4)] == 0)
    report = variation_functional(Symbol.constant(config), cutoff="whoop")
    assert report.sup == pytest.approx(4.0)


def _box_component():
    comp = GridConfig(6, 1/8)
    xi = comp.frequencies()
    return Symbol(comp, ((xi >= 1) & (xi < 2)).astype(float))


def test_x_atom_norm_of_box():
    mj = _box_component()
    assert x_atom_norm(mj) == pytest.approx(1.0)
    assert jump_atom_bound(mj) == pytest.approx(2.0)


def test_x_atom_support():
    comp = GridConfig(6, 1/8)
    with pytest.raises(SupportError):
        x_atom_norm(Symbol.constant(comp))


def test_x_prime_q_norm():
    atoms = [Atom((0, 1), 3, 0.5), Atom((1, 2), 4, 1.5), Atom((2, 2.5), 1, 2.25)]
    assert x_prime_q_norm(atoms, 2) == pytest.approx(math.sqrt(26))
    assert x_prime_q_norm(atoms, math.inf) == pytest.approx(5)
    assert x_prime_q_norm([], 2) == 0


def test_split_reconstructs_indicator(config):
    pieces = split_characteristic(config, (1.0, 2.0))
    assert np.allclose(pieces.reconstruct().values, pieces.indicator().values, atol=1e-15)
    with pytest.raises(ValueError):
        split_characteristic(config, (1.0, 1.0 + config.freq_step))
    with pytest.raises(BandOverflowError):
        split_characteristic(config, (6.0, 7.0))


def _box(config, a, b):
    xi = config.frequencies()
    return Symbol(config, ((xi >= a) & (xi < b)).astype(float))


def test_family_validation(config):
    family = IntervalFamily([(1, 2), (1.5, 3)], [_box(config, 1, 2), _box(config, 1.5, 3)])
    assert family.measured_overlap() == 2
    with pytest.raises(OverlapError):
        family.validate()
    family = IntervalFamily([(1, 2)], [_box(config, 0.5, 2)])
    with pytest.raises(SupportError):
        family.validate()
    with pytest.raises(ValueError):
        IntervalFamily([(1, 2)], [_box(config, 1, 2)], bases=[3.0])


def test_basic_inequality_disjoint(config, rng):
    intervals = [(0.5, 1.0), (1.0, 2.0), (2.0, 3.5)]
    family = IntervalFamily(intervals, [_box(config, a, b) for a, b in intervals])
    h = [GridSignal(config, rng.normal(size=config.n)) for _ in intervals]
    report = verify_basic_inequality(family, h)
    assert report.holds
    assert report.ratio == pytest.approx(1.0, rel=1e-10)


def test_basic_inequality_overlap(config, rng):
    intervals = [(1.0, 2.0), (1.0, 2.0), (1.5, 2.5)]
    family = IntervalFamily(intervals, [_box(config, a, b) for a, b in intervals], overlap=3)
    h = [GridSignal(config, rng.normal(size=config.n)) for _ in intervals]
    report = verify_basic_inequality(family, h)
    assert report.holds
    assert report.ratio <= 3
