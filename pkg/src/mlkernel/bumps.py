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
Smooth bumps built from the ``exp(-1/t)`` transition.
"""

__all__ = (
    "BumpSpec",
    "PsiSpec",
    "PsiBump",
    "transition",
    "bump_values",
    "make_bump",
    "ETA",
    "ETA_WIDE",
    "WHOOP",
    "LP_CHI",
)

import numpy as np
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple, Union
from scipy.interpolate import CubicSpline
from scipy.signal import fftconvolve
from .grid import GridConfig, GridSignal, Symbol, convolve
from .utils import ResolutionError


def transition(t) -> np.ndarray:
    """
    C-infinity step, 0 for ``t <= 0`` and 1 for ``t >= 1``.
    """
    t = np.asarray(t, dtype=np.float64)
    inner = (t > 0) & (t < 1)
    tc = np.where(inner, t, 0.5)
    a = np.exp(-1/tc)
    b = np.exp(-1/(1-tc))
    out = np.where(t >= 1, 1.0, 0.0)
    return np.where(inner, a/(a+b), out)


@dataclass(frozen=True)
class BumpSpec:
    """
    Equal to 1 on ``plateau``, vanishing outside ``support``, built from
    :func:`transition`. With ``symmetric`` the bump is evaluated at ``|x|``,
    so it is even and lives on ``±support``.

    ``smoothness_order`` is the number of continuous derivatives asked for.
    The exponential glue has all of them; the order is recorded and checked
    by callers that need a minimum (10 for adapted bumps).
    """
    support: Tuple[float, float]
    plateau: Tuple[float, float]
    symmetric: bool = False
    smoothness_order: int = 10

    def __post_init__(self) -> None:
        a, b = self.support
        c, d = self.plateau
        if not (a < b and a <= c <= d <= b):
            raise ValueError(f"plateau {self.plateau} is not inside support {self.support}")
        if self.symmetric and a < 0:
            raise ValueError("symmetric bump needs a support on the positive half-line")
        if self.smoothness_order < 0:
            raise ValueError("smoothness order must be nonnegative")

    def scaled(self, factor: float) -> "BumpSpec":
        return BumpSpec(
            (self.support[0]*factor, self.support[1]*factor),
            (self.plateau[0]*factor, self.plateau[1]*factor),
            self.symmetric, self.smoothness_order)


ETA = BumpSpec((0.5, 4.0), (0.75, 3.0), symmetric=True)
ETA_WIDE = BumpSpec((0.375, 6.0), (0.5, 4.0), symmetric=True)
WHOOP = BumpSpec((0.5, 4.0), (1.0, 2.0), symmetric=True)
LP_CHI = BumpSpec((0.0, 2.0), (0.0, 1.0), symmetric=True)


def bump_values(spec: BumpSpec, x) -> np.ndarray:
    """Evaluate the bump at ``x``."""
    x = np.asarray(x, dtype=np.float64)
    if spec.symmetric:
        x = np.abs(x)
    a, b = spec.support
    c, d = spec.plateau

    out = np.zeros_like(x)
    out[(x >= c) & (x <= d)] = 1.0
    if c > a:
        rise = (x > a) & (x < c)
        out[rise] = transition((x[rise]-a) / (c-a))
    if b > d:
        fall = (x > d) & (x < b)
        out[fall] = transition((b-x[fall]) / (b-d))
    return out


@dataclass(frozen=True)
class PsiSpec:
    """
    Nonnegative even bump ``c*(g*g)`` with ``g`` a bump of radius
    ``radius/2``, normalized so its value at 0 is 1. Its Fourier transform is
    ``c*ghat**2 >= 0``.
    """
    radius: float = 0.25
    smoothness_order: int = 10

    def __post_init__(self) -> None:
        if not self.radius > 0:
            raise ValueError("psi radius must be positive")


def _psi_generator(radius: float) -> BumpSpec:
    r = radius / 2
    return BumpSpec((0.0, r), (0.0, r/4), symmetric=True)


class PsiBump:
    """
    Callable version of the ``PsiSpec`` bump, for arguments that are not grid
    samples (dilates and translates). The self-convolution is tabulated on a
    fine grid and interpolated with a cubic spline.
    """
    def __init__(self, spec: PsiSpec = PsiSpec(), resolution: int = 14) -> None:
        self.spec = spec
        self.radius = spec.radius
        self._spline = _psi_table(spec.radius, resolution)

    def __call__(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=np.float64)
        out = np.zeros_like(x)
        inside = np.abs(x) < self.radius
        out[inside] = self._spline(np.abs(x[inside]))
        return np.maximum(out, 0.0)


@lru_cache(maxsize=8)
def _psi_table(radius: float, resolution: int) -> CubicSpline:
    n = 2 ** resolution
    gen = _psi_generator(radius)
    y = np.linspace(-radius/2, radius/2, n+1)
    dy = y[1] - y[0]
    g = bump_values(gen, y)
    conv = fftconvolve(g, g) * dy
    xs = dy * (np.arange(len(conv)) - n)
    conv /= conv[n]
    keep = xs >= 0
    return CubicSpline(xs[keep], conv[keep], bc_type=((1, 0.0), (1, 0.0)))


def make_bump(spec: Union[BumpSpec, PsiSpec], config: GridConfig,
        domain: str = "frequency", origin: float = None) -> Union[Symbol, GridSignal]:
    """
    Sample a bump on the grid.

    :param spec: ``BumpSpec`` for plateau bumps, ``PsiSpec`` for the
        positive-definite bump.
    :param config: Grid.
    :param domain: ``"frequency"`` returns a Symbol, ``"space"`` a GridSignal
        centered at 0 (origin ``-T/2`` unless given).
    """
    if domain not in ("frequency", "space"):
        raise ValueError(f"unknown domain {domain}")

    if isinstance(spec, PsiSpec):
        values = _discrete_psi(spec, config, domain)
    else:
        points = config.frequencies() if domain == "frequency" else \
            config.positions(-config.T/2 if origin is None else origin)
        values = bump_values(spec, points)

    if domain == "frequency":
        return Symbol(config, values)
    if isinstance(spec, PsiSpec) or origin is None:
        origin = -config.T/2
    return GridSignal(config, values, origin)


def _discrete_psi(spec: PsiSpec, config: GridConfig, domain: str) -> np.ndarray:
    # Exact discrete self-convolution on the sample lattice, so the discrete
    # transform of the result is a square and nonnegative.
    step = config.freq_step if domain == "frequency" else config.h
    if spec.radius / step < 4:
        raise ResolutionError(f"psi radius {spec.radius} is below 4 samples of spacing {step}")

    lattice = GridConfig(config.L, step)
    gen = _psi_generator(spec.radius)
    g = GridSignal(lattice, bump_values(gen, lattice.positions(-lattice.T/2)), -lattice.T/2)
    conv = convolve(g, g)
    # origin -T maps back onto the centered lattice by a half-period roll
    values = np.roll(conv.samples[0], -lattice.n//2).real
    values /= values[lattice.n//2]
    return np.maximum(values, 0.0)
