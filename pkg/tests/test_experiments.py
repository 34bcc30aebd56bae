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
from mlkernel.counterexamples import CounterexampleSpec, generate
from mlkernel.dyadic import DyadicInterval
from mlkernel.experiments import (evaluate_gate, fit_slope, iter_probe_inputs, llog_family, measure_operator_norm,
    probe_inputs, random_main_instance, verify_l12_lemma, verify_main_estimate, verify_zygmund)
from mlkernel.grid import GridConfig, GridSignal, Symbol, unit_config
from mlkernel.multipliers import IntervalFamily
from mlkernel.utils import GridError, OverlapError, ResolutionError


class Gate:
    prediction = None
    tolerance = 0.0
    max_ratio = None
    monotone = None
    min_value = None
    max_value = None
    max_growth = None
    min_r2 = 0.9
    informational = False

    def __init__(self, **kwargs):
        for key, value in kwargs.items():
            setattr(self, key, value)


def test_llog_family_mean_zero():
    f = llog_family(unit_config(12), 6)
    assert float(np.sum(f.real) / f.config.n) == pytest.approx(0.0, abs=1e-9)
    with pytest.raises(ResolutionError):
        llog_family(unit_config(6), 6)


def test_zygmund_single_frequency():
    config = unit_config(8)
    f = GridSignal.from_function(config, lambda x: np.exp(2j*np.pi*4*x))
    report = verify_zygmund(f)
    assert report.lhs == pytest.approx(1.0)
    assert report.ratio > 0
    with pytest.raises(GridError):
        verify_zygmund(GridSignal.zeros(GridConfig(8, 1/128)))


def test_l12_lemma_single_spike():
    config = GridConfig(10, 1/16)
    values = np.zeros(config.n)
    values[0] = 1 / config.h
    report = verify_l12_lemma([(DyadicInterval(0, 0), GridSignal(config, values))])
    assert report.rhs == pytest.approx(1.0)
    assert 0 < report.ratio < math.inf
    assert verify_l12_lemma([]).ratio == 0


def test_l12_lemma_rejects_negative():
    config = GridConfig(6, 1/4)
    with pytest.raises(ValueError):
        verify_l12_lemma([(1.0, GridSignal(config, -np.ones(config.n)))])


@pytest.mark.parametrize("variant", ["L1inf", "L12"])
def test_main_estimate_random(variant, rng):
    config = GridConfig(11, 1/16)
    family, F, a = random_main_instance(config, 2, rng, variant)
    assert family.overlap == 2
    assert len(F) == len(a) == len(family.intervals) == 8
    report = verify_main_estimate(family, F, a, variant)
    assert report.details["overlap"] == 2
    assert 0 < report.ratio < math.inf


def test_main_estimate_homogeneous(rng):
    config = GridConfig(11, 1/16)
    family, F, a = random_main_instance(config, 1, rng, "L12")
    base = verify_main_estimate(family, F, a, "L12")
    scaled = verify_main_estimate(family, [f * 3.0 for f in F], a, "L12")
    assert scaled.ratio == pytest.approx(base.ratio, rel=1e-9)


def test_main_estimate_checks(rng):
    config = GridConfig(11, 1/16)
    family, F, a = random_main_instance(config, 2, rng)
    with pytest.raises(ValueError):
        verify_main_estimate(family, F, a, "L2")
    with pytest.raises(ValueError):
        verify_main_estimate(family, F, [2.0] + a[1:])
    doubled = IntervalFamily(family.intervals[:1] * 2, family.symbols[:1] * 2, overlap=1)
    with pytest.raises(OverlapError):
        verify_main_estimate(doubled, F[:1] * 2, a[:1] * 2)


def test_probe_inputs():
    inputs = probe_inputs(GridConfig(10, 1/16), trials=3)
    assert {"delta", "cz_atom", "bump", "lacunary_signs_0", "lacunary_signs_2"} <= set(inputs)
    atom = inputs["cz_atom"]
    assert float(np.sum(atom.real)) == pytest.approx(0.0, abs=1e-12)


def test_inputs_are_built_lazily():
    config = GridConfig(10, 1/16)
    inputs = iter_probe_inputs(config, trials=2, seed=3)
    assert next(inputs)[0] == "delta"
    names = ["delta"] + [name for name, _ in inputs]
    collected = probe_inputs(config, trials=2, seed=3)
    assert names == list(collected)
    assert names[-2:] == ["lacunary_signs_0", "lacunary_signs_1"]


def test_operator_norm_of_identity():
    config = GridConfig(10, 1/16)
    bound = measure_operator_norm(Symbol.constant(config), 1.5, trials=2)
    assert bound.value == pytest.approx(1.0, rel=1e-9)
    with pytest.raises(ValueError):
        measure_operator_norm(Symbol.constant(config), 1.0)


def test_operator_norm_with_companion():
    ce = generate(CounterexampleSpec("hilbertTest", 4))
    bound = measure_operator_norm(ce.symbol, 1.5, trials=2, companions={"companion": ce.companion})
    assert "companion" in bound.per_input
    assert bound.value >= bound.per_input["companion"]


def test_fit_slope():
    xs = [1, 2, 4, 8]
    fit = fit_slope(xs, [3 * x**0.5 for x in xs])
    assert fit.slope == pytest.approx(0.5)
    assert fit.r2 == pytest.approx(1.0)
    flat = fit_slope(xs, [2, 2, 2, 2])
    assert (flat.slope, flat.r2) == (0.0, 1.0)
    with pytest.raises(ValueError):
        fit_slope([1], [1])
    with pytest.raises(ValueError):
        fit_slope(xs, [1, 0, 1, 1])


def test_gates():
    fit = fit_slope([1, 2, 4], [1, 2**0.5, 2])
    assert evaluate_gate(Gate(prediction=0.5, tolerance=0.05), [1, 1.4, 2], fit).passed
    assert not evaluate_gate(Gate(prediction=1.0, tolerance=0.05), [1, 1.4, 2], fit).passed
    assert not evaluate_gate(Gate(prediction=1.0), [1, 2], None).passed
    assert evaluate_gate(Gate(max_ratio=3), [1, 2.5], None).passed
    assert not evaluate_gate(Gate(max_ratio=3), [1, 4], None).passed
    assert evaluate_gate(Gate(monotone="increasing"), [1, 2, 3], None).passed
    assert not evaluate_gate(Gate(monotone="increasing"), [1, 3, 2], None).passed
    assert not evaluate_gate(Gate(min_value=0.5), [0.4, 1], None).passed
    assert not evaluate_gate(Gate(max_value=1.0), [0.4, 1.1], None).passed
    assert evaluate_gate(Gate(max_growth=0.1), [1, 1.05, 1.1], None).passed
    assert not evaluate_gate(Gate(max_growth=0.1), [1, 1.2], None).passed


def test_gate_without_checks():
    result = evaluate_gate(Gate(informational=True), [1, 2], None)
    assert result.passed
    assert result.message == "no gate"
    assert result.informational
