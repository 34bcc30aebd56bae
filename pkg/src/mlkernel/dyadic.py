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
Dyadic intervals of ``[0, 1)``, dyadic sets and the Haar system.
"""

__all__ = (
    "DyadicInterval",
    "DyadicSet",
    "HaarCoeffs",
    "haar_analyze",
    "haar_synthesize",
)

import numpy as np
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple
from .grid import GridConfig, GridSignal, unit_config
from .utils import GridError, ResolutionError


@dataclass(frozen=True, order=True)
class DyadicInterval:
    """``[k 2^-j, (k+1) 2^-j)``."""
    level: int
    index: int

    def __post_init__(self) -> None:
        if self.level < 0 or not 0 <= self.index < 2**self.level:
            raise ValueError(f"no dyadic interval with level {self.level}, index {self.index}")

    @property
    def length(self) -> float:
        return 2.0 ** -self.level

    @property
    def start(self) -> float:
        return self.index * self.length

    @property
    def end(self) -> float:
        return (self.index+1) * self.length

    def children(self) -> Tuple["DyadicInterval", "DyadicInterval"]:
        return (DyadicInterval(self.level+1, 2*self.index),
                DyadicInterval(self.level+1, 2*self.index+1))

    def parent(self) -> "DyadicInterval":
        if self.level == 0:
            raise ValueError("[0, 1) has no parent")
        return DyadicInterval(self.level-1, self.index//2)

    def contains(self, other: "DyadicInterval") -> bool:
        if other.level < self.level:
            return False
        return other.index >> (other.level-self.level) == self.index

    def cells(self, level: int) -> slice:
        """Slice of the level-``level`` cells inside this interval."""
        if level < self.level:
            raise ValueError(f"level {level} is coarser than {self}")
        width = 2 ** (level-self.level)
        return slice(self.index*width, (self.index+1)*width)

    def descendants(self, max_level: int) -> Iterator["DyadicInterval"]:
        for level in range(self.level, max_level+1):
            sl = self.cells(level)
            for k in range(sl.start, sl.stop):
                yield DyadicInterval(level, k)


@dataclass(frozen=True)
class DyadicSet:
    """
    Union of level-``level`` intervals of ``[0, 1)``. ``mask[k]`` marks
    interval ``k``; in hex form bit ``k`` is interval ``k``.
    """
    level: int
    mask: np.ndarray

    def __post_init__(self) -> None:
        mask = np.array(self.mask, dtype=bool)
        if mask.shape != (2**self.level,):
            raise ValueError(f"mask of a level {self.level} set needs {2**self.level} entries, got {mask.shape}")
        mask.setflags(write=False)
        object.__setattr__(self, "mask", mask)

    @classmethod
    def from_indices(cls, level: int, indices: Sequence[int]) -> "DyadicSet":
        mask = np.zeros(2**level, dtype=bool)
        mask[list(indices)] = True
        return cls(level, mask)

    @classmethod
    def from_int(cls, level: int, value: int) -> "DyadicSet":
        size = 2 ** level
        if value < 0 or value >> size:
            raise ValueError(f"bitmask {value:x} does not fit level {level}")
        bits = [(value >> k) & 1 for k in range(size)]
        return cls(level, np.array(bits, dtype=bool))

    @classmethod
    def from_hex(cls, text: str, level: int) -> "DyadicSet":
        text = text.strip().lower()
        if text.startswith("0x"):
            text = text[2:]
        try:
            value = int(text, 16)
        except ValueError:
            raise ValueError(f"not a hex bitmask: {text!r}") from None
        return cls.from_int(level, value)

    def to_int(self) -> int:
        return sum(1 << int(k) for k in np.flatnonzero(self.mask))

    def to_hex(self) -> str:
        return f"{self.to_int():x}"

    @property
    def count(self) -> int:
        return int(np.count_nonzero(self.mask))

    @property
    def measure(self) -> float:
        return self.count * 2.0**-self.level

    def count_in(self, interval: DyadicInterval) -> int:
        return int(np.count_nonzero(self.mask[interval.cells(self.level)]))

    def indicator(self) -> GridSignal:
        """``chi_E`` on the unit grid of the set's level."""
        return GridSignal(unit_config(self.level), self.mask.astype(np.float64))


@dataclass(frozen=True)
class HaarCoeffs:
    """
    ``coeffs[j][k] = <f, psi_I>`` for ``I = DyadicInterval(j, k)``,
    ``j < max_level``, plus the mean ``int f``.
    """
    config: GridConfig
    mean: float
    coeffs: Tuple[np.ndarray, ...]

    @property
    def max_level(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, interval: DyadicInterval) -> float:
        return float(self.coeffs[interval.level][interval.index])

    def energy(self) -> float:
        """``sum <f, psi_I>^2 + (int f)^2``."""
        return self.mean**2 + sum(float(np.sum(c**2)) for c in self.coeffs)


def _check_unit(f: GridSignal) -> None:
    if f.config.T != 1 or f.origin != 0:
        raise GridError(f"Haar analysis needs a signal on [0, 1), got T={f.config.T}, origin={f.origin}")
    if f.channels != 1:
        raise GridError("Haar analysis needs a single-channel signal")


def haar_analyze(f: GridSignal, max_level: int) -> HaarCoeffs:
    """
    Exact Haar coefficients of the real part of ``f`` up to level
    ``max_level - 1``.

    :param f: Signal on ``[0, 1)``.
    :param max_level: Level ``N``. Coefficients of intervals of length at
        least ``2**-(N-1)`` are computed; together with the mean they
        determine the level-``N`` conditional expectation.
    """
    _check_unit(f)
    if max_level < 0 or 2**max_level > f.config.n:
        raise ResolutionError(f"level {max_level} is finer than the grid of {f.config.n} samples")

    cells = f.real[0] * f.config.h
    cells = cells.reshape(2**max_level, -1).sum(axis=1)
    coeffs: List[np.ndarray] = []
    for j in range(max_level):
        halves = cells.reshape(2**(j+1), -1).sum(axis=1)
        left, right = halves[0::2], halves[1::2]
        coeffs.append((left-right) * 2.0**(j/2))

    return HaarCoeffs(f.config, float(np.sum(cells)), tuple(coeffs))


def haar_synthesize(coeffs: HaarCoeffs) -> GridSignal:
    """
    ``int f + sum <f, psi_I> psi_I`` on the grid of the analyzed signal.
    """
    n = coeffs.config.n
    values = np.full(n, coeffs.mean)
    for j, c in enumerate(coeffs.coeffs):
        pair = np.stack([c, -c], axis=1).ravel() * 2.0**(j/2)
        values += np.repeat(pair, n // 2**(j+1))
    return GridSignal(coeffs.config, values)
