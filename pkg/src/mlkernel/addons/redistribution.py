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
Redistribution and square function experiments.

Will register experiments ``char_exact``, ``char_ratio``, ``gen_family``,
``squarefn_norm``, ``squarefn_nodes`` and ``normal_theta_min``.
"""

import numpy as np
import mlab
from mlkernel import Lab
from mlkernel.dyadic import DyadicSet
from mlkernel.experiments import llog_family
from mlkernel.grid import unit_config
from mlkernel.squarefn import (build_gen, continuous_squarefn, normal_theta, redistribute_char,
    squarefn_report, verify_char, verify_gen)


def random_set(rng: np.random.Generator, level: int) -> DyadicSet:
    """Random set whose density is log-uniform in ``[2^-level, 1]``."""
    density = 2.0 ** -rng.uniform(0, level)
    mask = rng.random(2**level) < density
    if not mask.any():
        mask[rng.integers(0, 2**level)] = True
    return DyadicSet(level, mask)


def _char_reports(lab: Lab, level: int, seed: int, samples: int):
    rng = np.random.default_rng([seed, level])
    eps = lab.props.squarefn.eps
    for _ in range(samples):
        E = random_set(rng, level)
        yield verify_char(E, redistribute_char(E, eps))


class BUILTIN_ET_CharExact(mlab.Experiment):
    idname = "char_exact"
    label = "Redistribution exactness"
    description = "Largest mean-2 slack and combination error over random sets"
    default_points = tuple(range(4, 11))
    quantity = "max_slack"
    max_value = 1e-9

    samples = 200

    def measure(self, lab: Lab, value: float, seed: int):
        slack = comb = -np.inf
        failures = 0
        for rep in _char_reports(lab, int(value), seed, self.samples):
            slack = max(slack, rep.mean2_slack)
            comb = max(comb, rep.combination_error)
            failures += rep.partition_ok is False
        return {"max_slack": slack, "combination_error": comb, "partition_failures": failures,
            "grid_n": 2**int(value)}


class BUILTIN_ET_CharRatio(mlab.Experiment):
    idname = "char_ratio"
    label = "Redistribution constant"
    description = "95th percentile of ||(sum f_I^2)^(1/2)||_1 / (|E| log^(1/2)(2 + 1/|E|))"
    default_points = tuple(range(4, 11))
    quantity = "p95_ratio"
    max_growth = 0.1

    samples = 200

    def measure(self, lab: Lab, value: float, seed: int):
        ratios = [rep.ratio for rep in _char_reports(lab, int(value), seed, self.samples)]
        return {"p95_ratio": float(np.percentile(ratios, 95)), "max_ratio": max(ratios),
            "grid_n": 2**int(value)}


class BUILTIN_ET_GenFamily(mlab.Experiment):
    idname = "gen_family"
    label = "Layer-cake square function"
    description = "||(sum f_j^2)^(1/2)||_1 for 2^N N^(-1/2) psi_N"
    default_points = tuple(range(4, 13))
    quantity = "square_l1"
    max_ratio = 3.0

    def measure(self, lab: Lab, value: float, seed: int):
        N = int(value)
        f = llog_family(unit_config(N+3), N, psi=lab.psi_spec())
        out = build_gen(f, lab.props.squarefn.eps)
        rep = verify_gen(f, out)
        return {"square_l1": rep.square_l1, "mean_slack": rep.mean_slack, "grid_n": f.config.n}


def _squarefn(lab: Lab, N: int, nodes: int):
    f = llog_family(unit_config(N+3), N, psi=lab.psi_spec())
    out = continuous_squarefn(f, nodes, lab.props.squarefn.eps)
    return f, squarefn_report(f, out, **lab.phi_options())


class BUILTIN_ET_SquareFnNorm(mlab.Experiment):
    idname = "squarefn_norm"
    label = "Continuous square function norm"
    description = "||(sum F_j^2)^(1/2)||_1 and the pointwise constant for 2^N N^(-1/2) psi_N"
    default_points = tuple(range(4, 13))
    quantity = "norm"
    max_ratio = 3.0

    def measure(self, lab: Lab, value: float, seed: int):
        f, rep = _squarefn(lab, int(value), lab.props.squarefn.theta_nodes)
        return {"norm": rep.norm, "support_constant": rep.support_constant, "grid_n": f.config.n}


class BUILTIN_ET_SquareFnNodes(mlab.Experiment):
    idname = "squarefn_nodes"
    label = "Translation quadrature"
    description = "Square function norm at N = 6 under theta-node doubling"
    param_name = "theta_nodes"
    default_points = (16, 32)
    quantity = "norm"
    max_ratio = 1.02

    N = 6

    def measure(self, lab: Lab, value: float, seed: int):
        f, rep = _squarefn(lab, self.N, int(value))
        return {"norm": rep.norm, "support_constant": rep.support_constant, "grid_n": f.config.n}


class BUILTIN_ET_NormalTheta(mlab.Experiment):
    idname = "normal_theta_min"
    label = "Normal translations"
    description = "Smallest measure of normal theta over random x"
    param_name = "j"
    default_points = (0, 2, 4, 6, 8, 10)
    quantity = "min_measure"
    min_value = 0.5

    samples = 1000

    def slope_x(self, value: float) -> float:
        return float(value)

    def measure(self, lab: Lab, value: float, seed: int):
        rng = np.random.default_rng([seed, int(value)])
        xs = rng.uniform(0, 1, self.samples)
        return {"min_measure": min(normal_theta(x, int(value)) for x in xs)}


classes = (
    BUILTIN_ET_CharExact,
    BUILTIN_ET_CharRatio,
    BUILTIN_ET_GenFamily,
    BUILTIN_ET_SquareFnNorm,
    BUILTIN_ET_SquareFnNodes,
    BUILTIN_ET_NormalTheta,
)

def register():
    for cls in classes:
        mlab.utils.register_class(cls)
