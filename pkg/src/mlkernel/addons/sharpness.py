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
Sharpness experiments: kernel asymptotics of the counterexample
multipliers, the Hilbert transform test and operator-norm probing.

Will register experiments ``mN_l12``, ``mDoublePrime_central``,
``mPrime_xsup``, ``hilbert_l12``, ``hilbert_llog``, ``m0_remainder``,
``mTriplePrime_growth`` and ``mN_opnorm``.
"""

import functools
import math
import mlab
from mlkernel import Lab
from mlkernel.bumps import PsiSpec
from mlkernel.counterexamples import CounterexampleSpec, generate, kernel_profile
from mlkernel.experiments import measure_operator_norm
from mlkernel.grid import GridConfig
from mlkernel.multipliers import apply_multiplier
from mlkernel.norms import LorentzParams, lorentz_norm, lp_norm, orlicz_llogr

# n = 2^22, h = 2^-8
M0_ORACLE_GRID = GridConfig(22, 2.0 ** -8)


def _generate(lab: Lab, family: str, N: int, **kwargs):
    return generate(CounterexampleSpec(family, int(N), **kwargs), psi=lab.psi_spec())


@functools.lru_cache(maxsize=4)
def m0_oracle_remainder(psi: PsiSpec) -> float:
    """``m0`` stationary phase remainder on :data:`M0_ORACLE_GRID`."""
    ce = generate(CounterexampleSpec("m0"), M0_ORACLE_GRID, psi)
    return kernel_profile(ce.symbol, "m0").diagnostics["remainder"]


class BUILTIN_ET_MNL12(mlab.Experiment):
    idname = "mN_l12"
    label = "m_N kernel L^{1,2}"
    description = "||m_N^||_{L^{1,2}([0,1])} of the vector-valued Marcinkiewicz counterexample"
    default_points = tuple(range(6, 13))
    quantity = "l12_unit"
    prediction = 1.0
    tolerance = 0.15

    def measure(self, lab: Lab, value: float, seed: int):
        ce = _generate(lab, "mN", value)
        prof = kernel_profile(ce.symbol, "mN", int(value))
        return {"l12_unit": prof.diagnostics["l12_unit"], "tail_l1": ce.notes["tail_l1"],
            "grid_n": ce.symbol.config.n}


class BUILTIN_ET_MDoublePrimeCentral(mlab.Experiment):
    idname = "mDoublePrime_central"
    label = "m''_N central height"
    description = "|m''_N^(0)|, channel l2 norm over the N+1 channels, against log N"
    default_points = tuple(range(6, 15))
    quantity = "central"
    prediction = 0.5
    tolerance = 0.05

    def measure(self, lab: Lab, value: float, seed: int):
        ce = _generate(lab, "mDoublePrimeN", value)
        prof = kernel_profile(ce.symbol, "mDoublePrimeN", int(value))
        return {"central": prof.diagnostics["central"], "grid_n": ce.symbol.config.n}


class BUILTIN_ET_MPrimeXSup(mlab.Experiment):
    idname = "mPrime_xsup"
    label = "m'_N kernel decay"
    description = "sup |x m'_N^(x)| over [4, 2^(N-1)]"
    default_points = tuple(range(6, 13))
    quantity = "x_sup"
    prediction = -0.5
    tolerance = 0.1

    def measure(self, lab: Lab, value: float, seed: int):
        ce = _generate(lab, "mPrimeN", value)
        prof = kernel_profile(ce.symbol, "mPrimeN", int(value))
        return {"x_sup": prof.diagnostics["x_sup"], "grid_n": ce.symbol.config.n}


class BUILTIN_ET_HilbertL12(mlab.Experiment):
    idname = "hilbert_l12"
    label = "Hilbert test, L^{1,2}"
    description = "||H f_N||_{L^{1,2}([-1,1])} for f_N = 2^N chi_[0, 2^-N]; [0,1] reported alongside"
    default_points = tuple(range(6, 15))
    quantity = "l12_local"
    prediction = 0.5
    tolerance = 0.1

    window = (-1.0, 1.0)

    def measure(self, lab: Lab, value: float, seed: int):
        ce = _generate(lab, "hilbertTest", value)
        Hf = apply_multiplier(ce.symbol, ce.companion)
        return {
            "l12_local": lorentz_norm(Hf, LorentzParams(1, 2), self.window),
            "l12_unit": lorentz_norm(Hf, LorentzParams(1, 2), (0.0, 1.0)),
            "grid_n": Hf.config.n,
        }


class BUILTIN_ET_HilbertLlog(mlab.Experiment):
    idname = "hilbert_llog"
    label = "Hilbert test, L log^(1/2) L"
    description = "||f_N||_{L log^(1/2) L} for f_N = 2^N chi_[0, 2^-N]"
    default_points = tuple(range(6, 15))
    quantity = "llog"
    prediction = 0.5
    tolerance = 0.05

    def measure(self, lab: Lab, value: float, seed: int):
        ce = _generate(lab, "hilbertTest", value)
        return {"llog": orlicz_llogr(ce.companion, 0.5), "grid_n": ce.companion.config.n}


class BUILTIN_ET_M0Remainder(mlab.Experiment):
    idname = "m0_remainder"
    label = "m0 stationary phase remainder"
    description = "sup x^2 |m0^(x) - leading term| over [10, T/8], against the n = 2^22, h = 2^-8 oracle"
    param_name = "L"
    default_points = (14,)
    quantity = "ratio"
    max_value = 1.2

    def measure(self, lab: Lab, value: float, seed: int):
        ce = generate(CounterexampleSpec("m0"), GridConfig(int(value), 1/16), lab.psi_spec())
        remainder = kernel_profile(ce.symbol, "m0").diagnostics["remainder"]
        oracle = m0_oracle_remainder(lab.psi_spec())
        return {"ratio": remainder / oracle, "remainder": remainder, "oracle": oracle,
            "grid_n": ce.symbol.config.n}


class BUILTIN_ET_MTriplePrimeGrowth(mlab.Experiment):
    idname = "mTriplePrime_growth"
    label = "m'''_N L^p growth"
    description = "||T f||_p / ||f||_p at p = 1.2, q = 4 for vector-valued m'''_N and its periodic companion"
    default_points = (21, 24, 28, 40)
    quantity = "ratio"
    monotone = "increasing"

    p = 1.2
    q = 4.0

    def measure(self, lab: Lab, value: float, seed: int):
        ce = _generate(lab, "mTriplePrimeN", value, q=self.q)
        f = ce.companion
        ratio = lp_norm(apply_multiplier(ce.symbol, f), self.p) / lp_norm(f, self.p)
        return {"ratio": ratio, "channels": ce.symbol.channels, "bumps": ce.notes["bumps"],
            "grid_n": f.config.n}


class BUILTIN_ET_MNOpNorm(mlab.Experiment):
    idname = "mN_opnorm"
    label = "m_N operator norm growth"
    description = "Lower bound on ||T_m||_p for signed m_N, N = 10, against log 1/(p-1); 3/2 predicted"
    param_name = "p"
    default_points = (1.05, 1.1, 1.2, 1.3, 1.5)
    quantity = "bound"
    prediction = 1.5
    tolerance = 0.5
    informational = True

    N = 10
    trials = 8
    # period 2^10 keeps the kernel tail [1, T/2] in play at p near 1
    grid = GridConfig(22, 2.0 ** -12)

    def slope_x(self, value: float) -> float:
        return math.log(1 / (value-1))

    def measure(self, lab: Lab, value: float, seed: int):
        spec = CounterexampleSpec("mN", self.N, seed=seed)
        ce = generate(spec, self.grid, lab.psi_spec(), signed=True)
        bound = measure_operator_norm(ce.symbol, value, self.trials, seed, {"companion": ce.companion})
        return {"bound": bound.value, "grid_n": self.grid.n}


classes = (
    BUILTIN_ET_MNL12,
    BUILTIN_ET_MDoublePrimeCentral,
    BUILTIN_ET_MPrimeXSup,
    BUILTIN_ET_HilbertL12,
    BUILTIN_ET_HilbertLlog,
    BUILTIN_ET_M0Remainder,
    BUILTIN_ET_MTriplePrimeGrowth,
    BUILTIN_ET_MNOpNorm,
)

def register():
    for cls in classes:
        mlab.utils.register_class(cls)
