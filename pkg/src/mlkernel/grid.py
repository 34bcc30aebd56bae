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
Periodic uniform grids and the discrete Fourier transform contract.

The real line is replaced by the torus of period ``T = n*h``. Spatial
samples sit at ``x0 + k*h``. Frequency samples are stored in centered order,
index ``i`` holding integer frequency ``k = i - n/2`` at ``xi_k = k/T``.
The transform is the Riemann sum of the continuous one::

    fhat(xi_k) = h * sum_x f(x) exp(-2 pi i xi_k x)
"""

__all__ = (
    "GridConfig",
    "GridSignal",
    "Spectrum",
    "Symbol",
    "Atom",
    "unit_config",
    "dft",
    "idft",
    "kernel",
    "convolve",
)

import numpy as np
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Tuple
from scipy import fft as sfft
from .utils import GridError


@dataclass(frozen=True)
class GridConfig:
    """
    ``n = 2**L`` points with spacing ``h``. Period ``T = n*h``.
    """
    L: int
    h: float

    def __post_init__(self) -> None:
        if int(self.L) != self.L or self.L < 1:
            raise GridError(f"grid exponent must be a positive integer, got {self.L}")
        if not self.h > 0:
            raise GridError(f"grid spacing must be positive, got {self.h}")
        object.__setattr__(self, "L", int(self.L))
        object.__setattr__(self, "h", float(self.h))

    @property
    def n(self) -> int:
        return 2 ** self.L

    @property
    def T(self) -> float:
        return self.n * self.h

    @property
    def nyquist(self) -> float:
        """Largest representable frequency, ``n/(2T)``."""
        return 0.5 / self.h

    @property
    def freq_step(self) -> float:
        return 1 / self.T

    def positions(self, origin: float = 0.0) -> np.ndarray:
        return origin + self.h * np.arange(self.n)

    def frequencies(self) -> np.ndarray:
        return (np.arange(self.n) - self.n//2) / self.T

    def frequency_index(self, xi: float) -> int:
        """Centered index of the sample nearest to ``xi``."""
        return int(np.rint(xi * self.T)) + self.n//2


def unit_config(level: int) -> GridConfig:
    """Grid on ``[0, 1)`` with ``2**level`` cells."""
    return GridConfig(level, 2.0 ** -level)


def _as_channels(samples, n: int) -> np.ndarray:
    arr = np.array(samples, dtype=np.complex128)
    if arr.ndim == 1:
        arr = arr[None, :]
    if arr.ndim != 2 or arr.shape[1] != n:
        raise GridError(f"expected samples of shape (d, {n}), got {np.shape(samples)}")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class GridSignal:
    """
    Samples of a d-channel function on the periodic grid.
    ``samples[c, k]`` is channel ``c`` at ``origin + k*h``.
    """
    config: GridConfig
    samples: np.ndarray
    origin: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "samples", _as_channels(self.samples, self.config.n))
        object.__setattr__(self, "origin", float(self.origin))

    @classmethod
    def from_function(cls, config: GridConfig, func: Callable, origin: float = 0.0) -> "GridSignal":
        return cls(config, func(config.positions(origin)), origin)

    @classmethod
    def zeros(cls, config: GridConfig, channels: int = 1, origin: float = 0.0) -> "GridSignal":
        return cls(config, np.zeros((channels, config.n)), origin)

    @property
    def channels(self) -> int:
        return self.samples.shape[0]

    @property
    def x(self) -> np.ndarray:
        return self.config.positions(self.origin)

    @property
    def real(self) -> np.ndarray:
        return self.samples.real

    def magnitude(self) -> np.ndarray:
        """Pointwise channel-l2 magnitude."""
        return np.sqrt(np.sum(np.abs(self.samples)**2, axis=0))

    def channel(self, c: int) -> "GridSignal":
        return GridSignal(self.config, self.samples[c], self.origin)

    def with_samples(self, samples) -> "GridSignal":
        return GridSignal(self.config, samples, self.origin)

    def region_mask(self, region: Optional[Tuple[float, float]]) -> np.ndarray:
        """Boolean mask of samples with ``a <= x < b``; all samples if ``None``."""
        if region is None:
            return np.ones(self.config.n, dtype=bool)
        a, b = region
        x = self.x
        return (x >= a) & (x < b)

    def __add__(self, other: "GridSignal") -> "GridSignal":
        _check_same(self.config, other.config)
        return self.with_samples(self.samples + other.samples)

    def __sub__(self, other: "GridSignal") -> "GridSignal":
        _check_same(self.config, other.config)
        return self.with_samples(self.samples - other.samples)

    def __mul__(self, c) -> "GridSignal":
        return self.with_samples(self.samples * c)

    __rmul__ = __mul__


@dataclass(frozen=True)
class Spectrum:
    """
    Fourier coefficients in centered order. ``origin`` is the spatial origin
    of the signal it came from, kept so the inverse is exact.
    """
    config: GridConfig
    coeffs: np.ndarray
    origin: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _as_channels(self.coeffs, self.config.n))
        object.__setattr__(self, "origin", float(self.origin))

    @property
    def channels(self) -> int:
        return self.coeffs.shape[0]

    @property
    def xi(self) -> np.ndarray:
        return self.config.frequencies()

    def at(self, xi: float) -> np.ndarray:
        """Per-channel coefficient at the sample nearest ``xi``."""
        return self.coeffs[:, self.config.frequency_index(xi)]


@dataclass(frozen=True)
class Atom:
    """One annotated term ``c * bump_I`` of a symbol built from atoms."""
    interval: Tuple[float, float]
    coefficient: float
    base: float
    channel: int = 0

    @property
    def length(self) -> float:
        return self.interval[1] - self.interval[0]


@dataclass(frozen=True)
class Symbol:
    """
    Frequency samples ``m(xi_k)`` of a multiplier, centered order.
    """
    config: GridConfig
    values: np.ndarray
    annotation: Tuple[Atom, ...] = field(default=())

    def __post_init__(self) -> None:
        values = _as_channels(self.values, self.config.n)
        if not np.all(np.isfinite(values)):
            raise GridError("symbol values must be finite")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "annotation", tuple(self.annotation))

    @classmethod
    def from_function(cls, config: GridConfig, func: Callable) -> "Symbol":
        return cls(config, func(config.frequencies()))

    @classmethod
    def constant(cls, config: GridConfig, value: complex = 1.0) -> "Symbol":
        return cls(config, np.full(config.n, value, dtype=np.complex128))

    @property
    def channels(self) -> int:
        return self.values.shape[0]

    @property
    def xi(self) -> np.ndarray:
        return self.config.frequencies()

    def sup(self) -> float:
        return float(np.max(np.sqrt(np.sum(np.abs(self.values)**2, axis=0))))

    def channel(self, c: int) -> "Symbol":
        return Symbol(self.config, self.values[c], [a for a in self.annotation if a.channel == c])

    def with_values(self, values) -> "Symbol":
        return Symbol(self.config, values, self.annotation)

    def __add__(self, other: "Symbol") -> "Symbol":
        _check_same(self.config, other.config)
        return Symbol(self.config, self.values + other.values, self.annotation + other.annotation)

    def __mul__(self, other) -> "Symbol":
        if isinstance(other, Symbol):
            _check_same(self.config, other.config)
            return Symbol(self.config, self.values * other.values)
        return Symbol(self.config, self.values * other)

    __rmul__ = __mul__


def _check_same(a: GridConfig, b: GridConfig) -> None:
    if a != b:
        raise GridError(f"grid mismatch: {a} vs {b}")


def _phase(config: GridConfig, origin: float) -> np.ndarray:
    return np.exp(-2j * np.pi * config.frequencies() * origin)


def dft(signal: GridSignal) -> Spectrum:
    """
    Riemann-sum Fourier transform of every channel.
    """
    config = signal.config
    raw = sfft.fftshift(sfft.fft(signal.samples, axis=1), axes=1)
    coeffs = config.h * _phase(config, signal.origin) * raw
    return Spectrum(config, coeffs, signal.origin)


def idft(spectrum: Spectrum) -> GridSignal:
    """
    Inverse of :func:`dft`. ``idft(dft(f))`` reproduces ``f``.
    """
    config = spectrum.config
    raw = spectrum.coeffs / _phase(config, spectrum.origin) / config.h
    samples = sfft.ifft(sfft.ifftshift(raw, axes=1), axis=1)
    return GridSignal(config, samples, spectrum.origin)


def kernel(symbol: Symbol) -> GridSignal:
    """
    Convolution kernel of a symbol, ``int m(xi) exp(2 pi i x xi) dxi``,
    sampled on ``[-T/2, T/2)``.
    """
    config = symbol.config
    return idft(Spectrum(config, symbol.values, -config.T/2))


def convolve(f: GridSignal, g: GridSignal) -> GridSignal:
    """
    Circular convolution ``h * sum_y f(y) g(x-y)`` channel by channel.
    ``g`` may be single-channel. The origin of the result is the sum of the
    origins.
    """
    _check_same(f.config, g.config)
    if g.channels not in (1, f.channels):
        raise GridError(f"cannot convolve {f.channels} channels with {g.channels}")
    fh = dft(f).coeffs
    gh = dft(g).coeffs
    origin = f.origin + g.origin
    return idft(Spectrum(f.config, fh*gh, origin))
