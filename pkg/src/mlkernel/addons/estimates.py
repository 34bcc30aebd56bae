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

"""
Estimate experiments: the orthogonality inequality, Calderon-Zygmund
constants, Zygmund's lacunary inequality, the L^{1,2} lemma and the main
interval estimate.

Will register experiments ``basic_inequality``, ``cz_constants``,
``zygmund``, ``zygmund_random``, ``l12_lemma``, ``main_L1inf`` and
``main_L12``.
"""

import numpy as np
import mlab
from mlkernel import Lab
from mlkernel.czdecomp import cz_decompose, cz_report
from mlkernel.experiments import (llog_family, random_main_instance, verify_l12_lemma,
    verify_main_estimate, verify_zygmund)
from mlkernel.grid import GridConfig, GridSignal, unit_config
from mlkernel.multipliers import verify_basic_inequality


class BUILTIN_ET_BasicInequality(mlab.Experiment):
    idname = "basic_inequality"
    label = "Almost orthogonality"
    description = "max ||sum T_I h_I||_2^2 / (N sum ||T_I h_I||_2^2) over random families"
    default_points = (1, 2, 4, 8)
    quantity = "max_normalized"
    max_value = 1 + 1e-10

    samples = 200

    def measure(self, lab: Lab, value: float, seed: int):
        N = int(value)
        config = GridConfig(10, 1/8)
        rng = np.random.default_rng([seed, N])
        worst = 0.0
        for _ in range(self.samples):
            family, _, _ = random_main_instance(config, N, rng, "L12")
            h = [GridSignal(config, rng.standard_normal(config.n) + 1j*rng.standard_normal(config.n))
                for _ in family.intervals]
            rep = verify_basic_inequality(family, h)
            worst = max(worst, rep.ratio / N)
        return {"max_normalized": worst, "grid_n": config.n}


class BUILTIN_ET_CZConstants(mlab.Experiment):
    idname = "cz_constants"
    label = "Calderon-Zygmund constants"
    description = "Largest observed contract constant of the dyadic decomposition"
    param_name = "channels"
    default_points = (1, 2, 3)
    quantity = "max_constant"
    max_value = 4.0

    samples = 500

    def measure(self, lab: Lab, value: float, seed: int):
        d = int(value)
        config = unit_config(8)
        rng = np.random.default_rng([seed, d])
        worst = g_sup = moment = recon = 0.0
        for _ in range(self.samples):
            F = GridSignal(config, rng.standard_cauchy((d, config.n)))
            height = float(np.mean(F.magnitude())) * rng.uniform(1, 16)
            rep = cz_report(F, cz_decompose(F, height))
            worst = max(worst, rep.good_constant, rep.bad_constant, rep.measure_constant)
            g_sup = max(g_sup, rep.g_sup)
            moment = max(moment, rep.moment_error)
            recon = max(recon, rep.reconstruction_error)
        return {"max_constant": worst, "g_sup": g_sup, "moment_error": moment,
            "reconstruction_error": recon, "grid_n": config.n}


class BUILTIN_ET_Zygmund(mlab.Experiment):
    idname = "zygmund"
    label = "Zygmund lacunary inequality"
    description = "(sum |fhat(2^j)|^2)^(1/2) / ||f||_{L log^(1/2) L} for 2^N N^(-1/2) psi_N"
    default_points = tuple(range(4, 15))
    quantity = "ratio"
    max_ratio = 3.0

    def measure(self, lab: Lab, value: float, seed: int):
        N = int(value)
        f = llog_family(unit_config(N+4), N, psi=lab.psi_spec())
        rep = verify_zygmund(f)
        return {"ratio": rep.ratio, "lhs": rep.lhs, "rhs": rep.rhs, "grid_n": f.config.n}


class BUILTIN_ET_ZygmundRandom(mlab.Experiment):
    idname = "zygmund_random"
    label = "Zygmund on random signals"
    description = "Largest lacunary ratio over random mean-zero signals, pinned on first run"
    param_name = "level"
    default_points = (8,)
    quantity = "max_ratio"

    samples = 1000

    def measure(self, lab: Lab, value: float, seed: int):
        config = unit_config(int(value))
        rng = np.random.default_rng([seed, int(value)])
        ratios = []
        for _ in range(self.samples):
            x = rng.standard_normal(config.n)
            ratios.append(verify_zygmund(GridSignal(config, x - x.mean())).ratio)
        return {"max_ratio": max(ratios), "min_ratio": min(ratios), "grid_n": config.n}


class BUILTIN_ET_L12Lemma(mlab.Experiment):
    idname = "l12_lemma"
    label = "L^{1,2} lemma"
    description = "Largest ||(sum |F_I * phi_I|^2)^(1/2)||_{L^{1,2}} / ||(sum F_I^2)^(1/2)||_1 under grid doubling"
    param_name = "level"
    default_points = (10, 11)
    quantity = "max_ratio"
    max_ratio = 1.25

    samples = 200
    period = 16.0

    def measure(self, lab: Lab, value: float, seed: int):
        config = GridConfig(int(value), self.period / 2**int(value))
        coarse = self.period / 2**10
        rng = np.random.default_rng(seed)
        worst = 0.0
        for _ in range(self.samples):
            instances = []
            for _ in range(int(rng.integers(1, 17))):
                length = 2.0 ** int(rng.integers(-2, 5))
                pos = int(rng.integers(0, 2**10)) * coarse
                F = np.zeros(config.n)
                F[int(round(pos / config.h))] = rng.exponential(1.0) / config.h
                instances.append((length, GridSignal(config, F)))
            worst = max(worst, verify_l12_lemma(instances, **lab.phi_options()).ratio)
        return {"max_ratio": worst, "grid_n": config.n}


class _MainEstimate(mlab.Experiment):
    default_points = (1, 2, 4, 8)
    quantity = "max_ratio"
    variant: str

    samples = 24

    def measure(self, lab: Lab, value: float, seed: int):
        N = int(value)
        config = GridConfig(11, 1/16)
        rng = np.random.default_rng([seed, N])
        ratios = []
        for _ in range(self.samples):
            family, F, a = random_main_instance(config, N, rng, self.variant)
            ratios.append(verify_main_estimate(family, F, a, self.variant, **lab.phi_options()).ratio)
        return {"max_ratio": max(ratios), "mean_ratio": float(np.mean(ratios)), "grid_n": config.n}


class BUILTIN_ET_MainL1inf(_MainEstimate):
    idname = "main_L1inf"
    label = "Main estimate, order-0 symbols"
    description = "||sum T_I (a_I F_I * phi_I)||_{L^{1,inf}} / (N^(1/2) ||(sum F_I^2)^(1/2)||_1), pinned"
    variant = "L1inf"


class BUILTIN_ET_MainL12(_MainEstimate):
    idname = "main_L12"
    label = "Main estimate, adapted bumps"
    description = "||sum T_I (a_I F_I * phi_I)||_{L^{1,2}} / (N^(1/2) ||(sum F_I^2)^(1/2)||_1), pinned"
    variant = "L12"


classes = (
    BUILTIN_ET_BasicInequality,
    BUILTIN_ET_CZConstants,
    BUILTIN_ET_Zygmund,
    BUILTIN_ET_ZygmundRandom,
    BUILTIN_ET_L12Lemma,
    BUILTIN_ET_MainL1inf,
    BUILTIN_ET_MainL12,
)

def register():
    for cls in classes:
        mlab.utils.register_class(cls)
