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
Rearrangement-invariant norms (Lorentz, weak-L1, Lp, dyadic L^{1,2},
Luxemburg ``L log^r L``) and the s-variation of sampled data.
"""

__all__ = (
    "LorentzParams",
    "OrliczParams",
    "Rearrangement",
    "decreasing_rearrangement",
    "lorentz_norm",
    "weak_l1",
    "level_set_weak_l1",
    "lp_norm",
    "l1_norm",
    "dyadic_l12",
    "orlicz_llogr",
    "s_variation",
)

import math
import numpy as np
from dataclasses import dataclass
from typing import Optional, Tuple, Union
from scipy.optimize import bisect
from .grid import GridSignal, Symbol

Region = Optional[Tuple[float, float]]


@dataclass(frozen=True)
class LorentzParams:
    p: float
    q: float = math.inf

    def __post_init__(self) -> None:
        if not (self.p > 0 and self.q > 0):
            raise ValueError(f"Lorentz exponents must be positive, got p={self.p}, q={self.q}")


@dataclass(frozen=True)
class OrliczParams:
    r: float
    domain: Region = None

    def __post_init__(self) -> None:
        if not self.r >= 0:
            raise ValueError(f"Orlicz exponent must be nonnegative, got {self.r}")


@dataclass(frozen=True)
class Rearrangement:
    """
    Step function ``f*``: ``values[i]`` on ``[t[i-1], t[i])`` with
    ``t = cumsum(measures)``. Values strictly decreasing and positive.
    """
    values: np.ndarray
    measures: np.ndarray

    @property
    def breakpoints(self) -> np.ndarray:
        return np.cumsum(self.measures)

    def __len__(self) -> int:
        return len(self.values)


def _restricted(f: GridSignal, region: Region) -> np.ndarray:
    mask = f.region_mask(region)
    if not np.any(mask):
        raise ValueError(f"region {region} contains no samples")
    return f.magnitude()[mask]


def decreasing_rearrangement(f: GridSignal, region: Region = None) -> Rearrangement:
    """
    ``|f|`` (channel-l2) sorted descending, equal values merged, zeros
    dropped. Each sample carries measure ``h``.
    """
    mag = _restricted(f, region)
    mag = mag[mag > 0]
    values, counts = np.unique(mag, return_counts=True)
    return Rearrangement(values[::-1], counts[::-1] * f.config.h)


def lorentz_norm(f: GridSignal, params: LorentzParams, region: Region = None) -> float:
    """
    ``(int (t^(1/p) f*(t))^q dt/t)^(1/q)``, exact on the step function.
    ``q = inf`` gives ``sup t^(1/p) f*(t)``.
    """
    re = decreasing_rearrangement(f, region)
    if len(re) == 0:
        return 0.0
    p, q = params.p, params.q
    t = re.breakpoints
    if math.isinf(q):
        return float(np.max(re.values * t**(1/p)))
    tq = t ** (q/p)
    dt = np.diff(np.concatenate([[0.0], tq]))
    return float(((p/q) * np.sum(re.values**q * dt)) ** (1/q))


def weak_l1(f: GridSignal, region: Region = None) -> float:
    """``L^{1,inf}`` quasi-norm."""
    return lorentz_norm(f, LorentzParams(1, math.inf), region)


def level_set_weak_l1(f: GridSignal, region: Region = None) -> float:
    """``sup_lambda lambda |{|f| > lambda}|`` by a scan over level sets."""
    mag = _restricted(f, region)
    best = 0.0
    for v in np.unique(mag[mag > 0]):
        best = max(best, v * np.count_nonzero(mag >= v) * f.config.h)
    return float(best)


def lp_norm(f: GridSignal, p: float, region: Region = None) -> float:
    mag = _restricted(f, region)
    if math.isinf(p):
        return float(np.max(mag))
    return float((np.sum(mag**p) * f.config.h) ** (1/p))


def l1_norm(f: GridSignal, region: Region = None) -> float:
    return lp_norm(f, 1, region)


def dyadic_l12(f: GridSignal, region: Region = None) -> float:
    """
    ``(sum_j (2^j |A_j|)^2)^(1/2)`` with ``A_j = {2^j <= |f| < 2^(j+1)}``.
    """
    mag = _restricted(f, region)
    mag = mag[mag > 0]
    if len(mag) == 0:
        return 0.0
    # frexp: mag = mant * 2^e with mant in [1/2, 1), so floor(log2) = e-1
    _, e = np.frexp(mag)
    e = e - 1
    lo = e.min()
    measures = np.bincount(e-lo) * f.config.h
    scales = 2.0 ** (np.arange(len(measures)) + lo)
    return float(np.sqrt(np.sum((scales*measures)**2)))


def orlicz_llogr(f: GridSignal, r: Union[float, OrliczParams], region: Region = None,
        rtol: float = 1e-10) -> float:
    """
    Luxemburg norm ``inf{lam: int (|f|/lam) log^r(2 + |f|/lam) <= 1}``.
    ``r = 0`` is the L1 norm.
    """
    if isinstance(r, OrliczParams):
        params = r
        region = params.domain if region is None else region
    else:
        params = OrliczParams(r)
    mag = _restricted(f, region)
    h = f.config.h
    l1 = float(np.sum(mag) * h)
    if l1 == 0:
        return 0.0
    if params.r == 0:
        return l1

    def excess(lam: float) -> float:
        u = mag / lam
        return float(np.sum(u * np.log(2+u)**params.r) * h) - 1

    lo = hi = l1
    while excess(hi) > 0:
        hi *= 2
    while excess(lo) < 0:
        lo /= 2
    if lo == hi:
        return lo
    return float(bisect(excess, lo, hi, xtol=np.finfo(float).tiny, rtol=rtol, maxiter=500))


def s_variation(data: Union[Symbol, np.ndarray], s: float, interval: Region = None) -> float:
    """
    ``sup (sum |m(a_{i+1}) - m(a_i)|^s)^(1/s)`` over partitions with
    breakpoints at samples.

    Multi-channel data uses the channel-l2 distance. Real single-channel data
    is first reduced to its turning points, which does not change the
    supremum for ``s >= 1``.

    :param interval: Restrict a Symbol to frequencies in ``[a, b]``.
    """
    if not s >= 1:
        raise ValueError(f"s-variation needs s >= 1, got {s}")
    if isinstance(data, Symbol):
        values = data.values
        if interval is not None:
            xi = data.xi
            values = values[:, (xi >= interval[0]) & (xi <= interval[1])]
    else:
        values = np.asarray(data)
        if values.ndim == 1:
            values = values[None, :]
    if values.shape[1] < 2:
        raise ValueError("s-variation needs at least 2 samples")

    if s == 1:
        steps = np.sqrt(np.sum(np.abs(np.diff(values, axis=1))**2, axis=0))
        return float(np.sum(steps))

    if values.shape[0] == 1 and np.all(np.imag(values) == 0):
        pts = _turning_points(np.real(values[0]))[None, :]
    else:
        pts = values

    m = pts.shape[1]
    best = np.zeros(m)
    for i in range(1, m):
        dist = np.sqrt(np.sum(np.abs(pts[:, :i] - pts[:, i:i+1])**2, axis=0))
        best[i] = np.max(best[:i] + dist**s)
    return float(np.max(best) ** (1/s))


def _turning_points(x: np.ndarray) -> np.ndarray:
    keep = np.concatenate([[True], np.diff(x) != 0])
    x = x[keep]
    if len(x) <= 2:
        return x
    d = np.sign(np.diff(x))
    inner = d[1:] != d[:-1]
    return np.concatenate([[x[0]], x[1:-1][inner], [x[-1]]])
