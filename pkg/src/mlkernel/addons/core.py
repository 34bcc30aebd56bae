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
Core properties and suites.

Will register:

* Property groups ``grid``, ``kernel``, ``bump``, ``squarefn``, ``sweep``, ``verify``
* Suites ``acceptance`` and ``quick``
"""

import mlab
from mlab.props import FloatProp, IntProp, StrProp


class BUILTIN_PT_Grid(mlab.PropertyGroup):
    idname = "grid"

    L = IntProp(
        name="Grid Exponent",
        description="Number of samples is 2^L",
        default=12,
        min=1,
        max=26,
    )

    spacing = FloatProp(
        name="Spacing",
        description="Sample spacing h; the period is 2^L * h",
        default=1/64,
        min=2.0**-30,
    )

    seed = IntProp(
        name="Seed",
        description="Seed of every random generator",
        default=0,
        min=0,
    )


class BUILTIN_PT_Kernel(mlab.PropertyGroup):
    idname = "kernel"

    phi_exponent = FloatProp(
        name="Phi Exponent",
        description="Decay exponent a of phi_j(x) = 2^j (1 + 2^(2j) x^2)^(-a)",
        default=0.75,
        min=0.5 + 1e-9,
    )

    phi_images = IntProp(
        name="Phi Images",
        description="Periodic images summed directly before the zeta tail",
        default=64,
        min=1,
    )


class BUILTIN_PT_Bump(mlab.PropertyGroup):
    idname = "bump"

    smoothness_order = IntProp(
        name="Smoothness Order",
        description="Continuous derivatives recorded for adapted bumps",
        default=10,
        min=0,
    )

    psi_radius = FloatProp(
        name="Psi Radius",
        description="Support radius of the positive-definite bump psi",
        default=0.25,
        min=1e-6,
    )


class BUILTIN_PT_SquareFn(mlab.PropertyGroup):
    idname = "squarefn"

    eps = FloatProp(
        name="Epsilon",
        description="Density threshold of the redistribution recursion",
        default=2.0**-8,
        min=1e-12,
        max=0.25,
    )

    theta_nodes = IntProp(
        name="Theta Nodes",
        description="Midpoint nodes of the translation average",
        default=16,
        min=16,
    )


class BUILTIN_PT_Sweep(mlab.PropertyGroup):
    idname = "sweep"

    workers = IntProp(
        name="Workers",
        description="Threads running sweep points",
        default=1,
        min=1,
    )

    out = StrProp(
        name="Output Folder",
        description="Folder of sweep and verify reports",
        default="results",
    )


class BUILTIN_PT_Verify(mlab.PropertyGroup):
    idname = "verify"

    baseline_dir = StrProp(
        name="Baseline Folder",
        description="Where pinned oracle values are stored",
        default=".mlcache",
    )

    pin_tolerance = FloatProp(
        name="Pin Tolerance",
        description="Allowed relative deviation from a pinned value",
        default=0.2,
        min=0,
    )


class BUILTIN_ST_Quick(mlab.Suite):
    idname = "quick"
    experiments = (
        "basic_inequality",
        "cz_constants",
        "hilbert_llog",
        "mDoublePrime_central",
        "normal_theta_min",
    )


class BUILTIN_ST_Acceptance(mlab.Suite):
    idname = "acceptance"
    experiments = (
        "basic_inequality",
        "char_exact",
        "char_ratio",
        "gen_family",
        "zygmund",
        "zygmund_random",
        "mN_l12",
        "mDoublePrime_central",
        "mPrime_xsup",
        "hilbert_l12",
        "hilbert_llog",
        "m0_remainder",
        "mTriplePrime_growth",
        "l12_lemma",
        "main_L1inf",
        "main_L12",
        "squarefn_norm",
        "squarefn_nodes",
        "cz_constants",
        "normal_theta_min",
        "mN_opnorm",
    )


classes = (
    BUILTIN_PT_Grid,
    BUILTIN_PT_Kernel,
    BUILTIN_PT_Bump,
    BUILTIN_PT_SquareFn,
    BUILTIN_PT_Sweep,
    BUILTIN_PT_Verify,
    BUILTIN_ST_Quick,
    BUILTIN_ST_Acceptance,
)

def register():
    for cls in classes:
        mlab.utils.register_class(cls)
