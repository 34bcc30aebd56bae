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
Littlewood-Paley projections, the weights ``phi_j``, ``phi_I`` and the
Hardy-Littlewood maximal function.
"""

__all__ = (
    "lp_symbol",
    "littlewood_paley",
    "littlewood_paley_wide",
    "lp_partition",
    "lp_partition_defect",
    "phi_kernel",
    "phi_j",
    "phi_interval",
    "hl_maximal",
)

import numpy as np
from typing import Tuple, Union
from scipy.special import zeta
from .bumps import ETA, ETA_WIDE, LP_CHI, BumpSpec, bump_values
from .dyadic import DyadicInterval
from .grid import GridConfig, GridSignal, Symbol
from .multipliers import apply_multiplier
from .utils import BandOverflowError

PHI_EXPONENT = 0.75
PHI_IMAGES = 64
# images summed directly before the zeta tail takes over, at most
PHI_MAX_IMAGES = 4096


def lp_symbol(config: GridConfig, j: int, spec: BumpSpec = ETA) -> Symbol:
    """
    ``spec(2^-j xi)`` on the frequency grid.

    :raises BandOverflowError: if the dilated support passes Nyquist.
    """
    top = spec.support[1] * 2.0**j
    if top > config.nyquist:
        raise BandOverflowError(f"band 2^{j}*{spec.support[1]} = {top} exceeds Nyquist {config.nyquist}")
    return Symbol(config, bump_values(spec, config.frequencies() * 2.0**-j))


def littlewood_paley(j: int, f: GridSignal) -> GridSignal:
    """``Delta_j f``, symbol ``eta(2^-j xi)``."""
    return apply_multiplier(lp_symbol(f.config, j, ETA), f)


def littlewood_paley_wide(j: int, f: GridSignal) -> GridSignal:
    """
    Widened projection with symbol equal to 1 on ``±2^j[1/2, 4]``, so that
    ``Delta_j = Delta_j Delta~_j``.
    """
    return apply_multiplier(lp_symbol(f.config, j, ETA_WIDE), f)


def _beta(config: GridConfig, j: int) -> np.ndarray:
    xi = config.frequencies() * 2.0**-j
    return bump_values(LP_CHI, xi) - bump_values(LP_CHI, 2*xi)


def lp_partition(j: int, f: GridSignal) -> GridSignal:
    """
    Projection with the telescoping symbol ``chi(2^-j xi) - chi(2^(1-j) xi)``.
    The pieces for ``j0 <= j <= j1`` sum to ``chi(2^-j1 xi) - chi(2^(1-j0) xi)``,
    which is exactly 1 on ``2^(j0-1) <= |xi| <= 2^j1``.
    """
    top = LP_CHI.support[1] * 2.0**(j-1)
    if top > f.config.nyquist:
        raise BandOverflowError(f"band 2^{j} exceeds Nyquist {f.config.nyquist}")
    return apply_multiplier(Symbol(f.config, _beta(f.config, j)), f)


def lp_partition_defect(config: GridConfig, spec: BumpSpec = ETA) -> Tuple[float, float]:
    """
    Partition-of-unity defects over the covered band ``[1/T, Nyquist/4]``.

    :return: ``(eta_defect, beta_defect)``: max of ``|sum_j eta(2^-j xi) - 1|``
        and of the same sum for the telescoping family.
    """
    xi = np.abs(config.frequencies())
    j_lo = int(np.floor(np.log2(config.freq_step))) - 3
    j_hi = int(np.floor(np.log2(config.nyquist / spec.support[1])))
    eta_sum = np.zeros_like(xi)
    beta_sum = np.zeros_like(xi)
    for j in range(j_lo, j_hi+1):
        eta_sum += bump_values(spec, xi * 2.0**-j)
        beta_sum += _beta(config, j)

    covered = (xi >= 2*config.freq_step) & (xi <= 2.0**j_hi)
    return (float(np.max(np.abs(eta_sum[covered]-1))),
            float(np.max(np.abs(beta_sum[covered]-1))))


def _scale(scale: Union[int, float, DyadicInterval], is_interval: bool) -> float:
    if isinstance(scale, DyadicInterval):
        return scale.length
    if is_interval:
        if not scale > 0:
            raise ValueError(f"interval length must be positive, got {scale}")
        return float(scale)
    return 2.0 ** scale


def phi_kernel(config: GridConfig, scale: float, exponent: float = PHI_EXPONENT,
        images: int = PHI_IMAGES, origin: float = None) -> GridSignal:
    """
    Periodized weight ``s (1 + s^2 x^2)^(-exponent)``.

    Images ``|m| <= M`` are summed directly; the rest come from a Hurwitz-zeta
    expansion of ``sum (x + mT)^(-2a)`` to third order. ``M`` grows for small
    ``s*T`` so the expansion variable stays large.

    :param scale: ``s`` (``2^j`` for ``phi_j``, ``|I|`` for ``phi_I``).
    :param exponent: ``a``, must exceed 1/2 for the image sum to converge.
    :param origin: Spatial origin, default ``-T/2``.
    """
    if not exponent > 0.5:
        raise ValueError(f"phi exponent must exceed 1/2, got {exponent}")
    s = float(scale)
    T = config.T
    origin = -T/2 if origin is None else origin
    x = config.positions(origin)
    x = (x + T/2) % T - T/2

    def phi(y):
        return s * (1 + (s*y)**2) ** -exponent

    M = int(min(max(images, np.ceil(64 / (s*T))), PHI_MAX_IMAGES))
    values = phi(x)
    for m in range(1, M+1):
        values += phi(x + m*T) + phi(x - m*T)

    a = exponent
    coef = s ** (1 - 2*a)
    for sign in (1, -1):
        q = M + 1 + sign*x/T
        values += coef * (T ** (-2*a) * zeta(2*a, q)
            - a * s**-2 * T ** (-2*a-2) * zeta(2*a+2, q)
            + a*(a+1)/2 * s**-4 * T ** (-2*a-4) * zeta(2*a+4, q))

    return GridSignal(config, values, origin)


def phi_j(config: GridConfig, j: int, **kwargs) -> GridSignal:
    """``phi_j(x) = 2^j (1 + 2^(2j) x^2)^(-3/4)``, periodized."""
    return phi_kernel(config, _scale(j, False), **kwargs)


def phi_interval(config: GridConfig, interval: Union[DyadicInterval, float], **kwargs) -> GridSignal:
    """``phi_I(x) = |I| (1 + |I|^2 x^2)^(-3/4)``, periodized."""
    return phi_kernel(config, _scale(interval, True), **kwargs)


def hl_maximal(f: GridSignal) -> GridSignal:
    """
    Discrete uncentered maximal function: at each sample, the largest
    average of ``|f|`` over runs of consecutive samples containing it.
    Runs do not wrap around the period.
    """
    mag = f.magnitude()
    n = len(mag)
    prefix = np.concatenate([[0.0], np.cumsum(mag)])
    out = np.zeros(n)
    for i in range(n):
        # averages of runs starting at i, one per length
        avg = (prefix[i+1:] - prefix[i]) / np.arange(1, n-i+1)
        best = np.maximum.accumulate(avg[::-1])[::-1]
        np.maximum(out[i:], best, out=out[i:])
    return GridSignal(f.config, out, f.origin)
