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
Vector-valued dyadic Calderon-Zygmund decomposition.

Dyadic intervals are taken relative to the signal's period: level ``j``
splits ``[origin, origin + T)`` into ``2^j`` equal blocks, and the finest
level is one sample.
"""

__all__ = (
    "BadPart",
    "CZOutput",
    "CZReport",
    "cz_decompose",
    "cz_report",
)

import numpy as np
from dataclasses import dataclass
from typing import List, Tuple
from .dyadic import DyadicInterval
from .grid import GridSignal

CZ_CONSTANT = 4.0


@dataclass(frozen=True)
class BadPart:
    """
    ``b_J = (F - avg_J F) chi_J``. ``values`` holds the samples on ``J``
    (channels x samples), ``a`` and ``b`` the absolute endpoints.
    """
    interval: DyadicInterval
    a: float
    b: float
    values: np.ndarray

    def signal(self, like: GridSignal) -> GridSignal:
        full = np.zeros_like(like.samples)
        full[:, self.interval.cells(like.config.L)] = self.values
        return GridSignal(like.config, full, like.origin)


@dataclass(frozen=True)
class CZOutput:
    good: GridSignal
    bad: Tuple[BadPart, ...]
    height: float

    def reconstruct(self) -> GridSignal:
        total = self.good.samples.copy()
        L = self.good.config.L
        for part in self.bad:
            total[:, part.interval.cells(L)] += part.values
        return self.good.with_samples(total)


def cz_decompose(F: GridSignal, height: float) -> CZOutput:
    """
    Stop at the maximal dyadic intervals where the average of ``|F|`` (channel
    l2 norm) exceeds ``height``; replace ``F`` by its average there.

    When the average over the whole period already exceeds ``height`` the
    period itself is the one stopping interval and ``g`` is that average.

    :raises ValueError: ``height <= 0``.
    """
    if not height > 0:
        raise ValueError(f"height must be positive, got {height}")
    config = F.config
    L = config.L
    mag = F.magnitude()

    covered = np.zeros(config.n, dtype=bool)
    stops: List[DyadicInterval] = []
    for j in range(L+1):
        avg = mag.reshape(2**j, -1).mean(axis=1)
        free = ~covered.reshape(2**j, -1).any(axis=1)
        for k in np.flatnonzero((avg > height) & free):
            interval = DyadicInterval(j, int(k))
            stops.append(interval)
            covered[interval.cells(L)] = True

    good = F.samples.copy()
    bad = []
    for interval in sorted(stops):
        sl = interval.cells(L)
        block = F.samples[:, sl]
        mean = block.mean(axis=1, keepdims=True)
        good[:, sl] = mean
        a = F.origin + interval.start * config.T
        bad.append(BadPart(interval, a, a + interval.length * config.T, block - mean))

    return CZOutput(F.with_samples(good), tuple(bad), float(height))


@dataclass(frozen=True)
class CZReport:
    """
    Observed constants of the decomposition contract. ``passed`` requires
    each to be at most ``C`` and ``g_sup <= 2`` (in units of the height).
    """
    g_sup: float
    good_constant: float
    bad_constant: float
    measure_constant: float
    moment_error: float
    reconstruction_error: float
    disjoint: bool
    C: float

    @property
    def passed(self) -> bool:
        return (self.g_sup <= 2 and self.disjoint
            and max(self.good_constant, self.bad_constant, self.measure_constant) <= self.C)


def cz_report(F: GridSignal, out: CZOutput, C: float = CZ_CONSTANT) -> CZReport:
    config = F.config
    h = config.h
    height = out.height
    f_l1 = float(np.sum(F.magnitude()) * h)

    g_sup = float(np.max(out.good.magnitude())) / height
    good = float(np.sum(out.good.magnitude()**2) * h)
    good_constant = good / (height*f_l1) if f_l1 > 0 else 0.0

    bad_constant = 0.0
    moment = 0.0
    measure = 0.0
    for part in out.bad:
        length = part.b - part.a
        mass = float(np.sum(np.sqrt(np.sum(np.abs(part.values)**2, axis=0))) * h)
        bad_constant = max(bad_constant, mass / (height*length))
        moment = max(moment, float(np.max(np.abs(part.values.sum(axis=1)))) * h)
        measure += length
    measure_constant = measure * height / f_l1 if f_l1 > 0 else 0.0

    recon = float(np.max(np.abs(out.reconstruct().samples - F.samples)))
    disjoint = _disjoint([p.interval for p in out.bad])

    return CZReport(g_sup, good_constant, bad_constant, measure_constant, moment, recon, disjoint, C)


def _disjoint(intervals: List[DyadicInterval]) -> bool:
    spans = sorted((I.start, I.end) for I in intervals)
    return all(spans[i][1] <= spans[i+1][0] for i in range(len(spans) - 1))
