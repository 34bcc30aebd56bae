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
Generators for the sharpness families: multipliers that sit at the edge of
the Marcinkiewicz and ``R^2`` classes, their companion test functions, the
oscillating Hirschman symbols and the Hilbert transform test pair.

Channel ``c`` of a vector-valued symbol is the coefficient of the basis
vector ``e_j`` with ``j = c + j_min``. :func:`randomize_signs` scalarizes.
"""

__all__ = (
    "FAMILIES",
    "CounterexampleSpec",
    "Counterexample",
    "KernelProfile",
    "default_grid",
    "triple_prime_range",
    "triple_prime_periods",
    "generate",
    "randomize_signs",
    "kernel_profile",
)

import math
import numpy as np
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple
from .bumps import BumpSpec, PsiBump, PsiSpec, bump_values
from .grid import Atom, GridConfig, GridSignal, Symbol, kernel
from .norms import LorentzParams, lorentz_norm
from .utils import BandOverflowError, ResolutionError

FAMILIES = (
    "m0",
    "mN",
    "mPrimeN",
    "mDoublePrimeN",
    "mTriplePrimeN",
    "hirschman",
    "hilbertTest",
)

MIN_SAMPLES = 4
# signed scalar symbols are summed channel by channel
SIGNED_FAMILIES = ("mN", "mDoublePrimeN", "mTriplePrimeN")


@dataclass(frozen=True)
class CounterexampleSpec:
    family: str
    N: int = 1
    q: float = 2.0
    alpha: float = 0.5
    beta: float = 0.25
    seed: int = 0
    literal: bool = False

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family}, choose from {FAMILIES}")
        if int(self.N) != self.N or self.N < 1:
            raise ValueError(f"N must be a positive integer, got {self.N}")
        if not self.q > 0:
            raise ValueError(f"q must be positive, got {self.q}")
        if self.family == "hirschman" and not (0 < self.alpha and self.beta >= 0):
            raise ValueError(f"hirschman needs alpha > 0 and beta >= 0, got {self.alpha}, {self.beta}")


@dataclass(frozen=True)
class Counterexample:
    """
    :param j_min: Scale of channel 0.
    :param notes: Truncation and cap records (``tail_l1``, ``bumps``...).
    """
    spec: CounterexampleSpec
    symbol: Symbol
    companion: Optional[GridSignal] = None
    j_min: int = 0
    notes: Dict[str, float] = field(default_factory=dict)


def triple_prime_range(N: int, literal: bool = False) -> Tuple[int, int]:
    """
    Scales of ``m'''_N``: ``[ceil(N/10), floor(N/4)]``, or the printed
    ``[ceil(N/100), floor(N/10)]`` when ``literal``.
    """
    lo, hi = (math.ceil(N/100), N // 10) if literal else (math.ceil(N/10), N // 4)
    if hi < lo:
        raise ValueError(f"N={N} gives an empty scale range [{lo}, {hi}]")
    return lo, hi


def _pow2_at_least(x: float) -> int:
    return int(math.ceil(math.log2(x)))


def default_grid(family: str, N: int = 1, literal: bool = False) -> GridConfig:
    """Grid that resolves every scale of ``family`` at parameter ``N``."""
    if family == "m0":
        return GridConfig(14, 1/16)
    if family == "mN":
        return GridConfig(N+7, 2.0 ** -(N+3))
    if family == "mPrimeN":
        return GridConfig(N+7, 1/8)
    if family == "mDoublePrimeN":
        return GridConfig(N+5, 2.0 ** -(N+2))
    if family == "mTriplePrimeN":
        _, hi = triple_prime_range(N, literal)
        periods = 2 ** max(0, _pow2_at_least(8 * 2.0**hi / N))
        L = _pow2_at_least(8 * N * periods)
        return GridConfig(L, N * periods / 2**L)
    if family == "hirschman":
        return GridConfig(12, 1/64)
    if family == "hilbertTest":
        return GridConfig(N+8, 2.0 ** -(N+4))
    raise ValueError(f"unknown family {family}")


def triple_prime_periods(config: GridConfig, N: int) -> int:
    """
    Number of companion periods ``T/N`` on ``config``.

    :raises ResolutionError: ``T/N`` or ``N/h`` is not an integer.
    """
    periods = config.T / N
    samples = N / config.h
    if abs(periods - round(periods)) > 1e-9 * periods or abs(samples - round(samples)) > 1e-9 * samples:
        raise ResolutionError(f"period {N} does not tile T = {config.T:g} at spacing {config.h:g}")
    return int(round(periods))


def _require_band(config: GridConfig, top: float, what: str) -> None:
    if top > config.nyquist:
        raise BandOverflowError(f"{what} reaches frequency {top:g}, beyond Nyquist {config.nyquist:g}")


def _require_width(step: float, width: float, what: str) -> None:
    if width < MIN_SAMPLES * step:
        raise ResolutionError(f"{what} has width {width:g}, below {MIN_SAMPLES} samples of {step:g}")


def _m0(psi: PsiBump, xi: np.ndarray) -> np.ndarray:
    return np.where(xi >= 1, psi(xi-1), 0.0)


def _signs(count: int, seed: int) -> np.ndarray:
    return np.random.default_rng(seed).choice([-1.0, 1.0], size=count)


def _channels(config: GridConfig, scales, func, seed: Optional[int] = None) -> np.ndarray:
    xi = config.frequencies()
    scales = list(scales)
    if seed is None:
        return np.stack([func(xi, j) for j in scales]).astype(np.complex128)
    out = np.zeros(config.n, dtype=np.complex128)
    for sign, j in zip(_signs(len(scales), seed), scales):
        out += sign * func(xi, j)
    return out


def generate(spec: CounterexampleSpec, config: GridConfig = None, psi: PsiSpec = PsiSpec(),
        signed: bool = False) -> Counterexample:
    """
    Sample the family's symbol (and companion signal where one is defined).

    :param config: Grid, :func:`default_grid` when omitted.
    :param signed: Return ``randomize_signs(symbol, spec.seed)`` for the
        vector-valued families, summed without holding every channel.
    :raises BandOverflowError: The symbol reaches past Nyquist.
    :raises ResolutionError: A bump is narrower than 4 samples.
    """
    N = spec.N
    config = default_grid(spec.family, N, spec.literal) if config is None else config
    bump = PsiBump(psi)
    r = psi.radius
    step = config.freq_step
    family = spec.family
    if signed and family not in SIGNED_FAMILIES:
        raise ValueError(f"{family} is scalar already, signed applies to {SIGNED_FAMILIES}")
    seed = spec.seed if signed else None

    if family == "m0":
        _require_band(config, 1+r, "m0")
        _require_width(step, r, "m0 at scale 1")
        return Counterexample(spec, Symbol(config, _m0(bump, config.frequencies())))

    if family == "mN":
        _require_band(config, (1+r) * 2**N, f"m0(xi/2^{N})")
        _require_width(step, r, "m0 at scale 1")
        values = _channels(config, range(N+1), lambda xi, j: _m0(bump, xi / 2**j), seed)
        top = 2.0 ** N
        f_hat = bump_values(BumpSpec((-2*top, 2*top), (-top, top)), config.frequencies())
        f = kernel(Symbol(config, f_hat))
        far = np.abs(f.x) >= 1
        tail = float(np.sum(f.magnitude()[far]) * config.h)
        samples = f.samples.copy()
        samples[:, far] = 0
        companion = f.with_samples(samples)
        return Counterexample(spec, Symbol(config, values), companion, 0, {"tail_l1": tail})

    if family == "mPrimeN":
        _require_band(config, 1 + 1 + r, "m'_N at scale 0")
        _require_width(step, 2*r * 2.0**-N, f"m'_N at scale 2^-{N}")
        xi = config.frequencies()
        values = sum(bump(2.0**j * (xi-1) - 1) for j in range(N+1)) / math.sqrt(N)
        return Counterexample(spec, Symbol(config, values))

    if family == "mDoublePrimeN":
        _require_band(config, 2.0**N + r, f"m''_N at 2^{N}")
        _require_width(step, 2*r, "m''_N at scale 1")
        values = _channels(config, range(N+1), lambda xi, j: bump(xi - 2.0**j), seed)
        return Counterexample(spec, Symbol(config, values))

    if family == "mTriplePrimeN":
        lo, hi = triple_prime_range(N, spec.literal)
        _require_band(config, hi/N + r * 2.0**-lo, "m'''_N")
        _require_width(step, 2*r * 2.0**-hi, f"m'''_N at scale 2^-{hi}")
        _require_width(config.h, 2*r, "companion bump")
        coef = N ** (-1/spec.q)
        values = _channels(config, range(lo, hi+1), lambda xi, j: coef * bump(2.0**j * (xi - j/N)), seed)
        atoms = () if signed else tuple(
            Atom((j/N - r*2.0**-j, j/N + r*2.0**-j), coef, j/N, j-lo) for j in range(lo, hi+1))

        # one bump per period N, filling the torus
        periods = triple_prime_periods(config, N)
        x = config.positions(-config.T/2)
        f = bump(np.mod(x + N/2, N) - N/2)
        companion = GridSignal(config, f, -config.T/2)
        return Counterexample(spec, Symbol(config, values, atoms), companion, lo,
            {"bumps": float(periods), "clean": float(2.0**lo >= r*N)})

    if family == "hirschman":
        xi = np.abs(config.frequencies())
        phase = xi ** spec.alpha
        if np.max(np.abs(np.diff(phase))) >= math.pi / 2:
            raise ResolutionError(f"phase |xi|^{spec.alpha} moves by a quarter turn per sample at scale {step:g}")
        values = np.exp(1j*phase) / (1 + xi**2) ** (spec.beta/2)
        return Counterexample(spec, Symbol(config, values))

    # hilbertTest
    width = 2.0 ** -N
    _require_width(config.h, width, f"2^-{N} spike")
    x = config.positions(-config.T/2)
    f = np.where((x >= 0) & (x < width), 2.0**N, 0.0)
    m = Symbol(config, -1j * np.sign(config.frequencies()))
    return Counterexample(spec, m, GridSignal(config, f, -config.T/2))


def randomize_signs(m: Symbol, seed: int = 0) -> Symbol:
    """``sum_j eps_j m^(j)`` with seeded signs ``eps_j = ±1``."""
    rng = np.random.default_rng(seed)
    signs = rng.choice([-1.0, 1.0], size=m.channels)
    return Symbol(m.config, signs @ m.values)


@dataclass(frozen=True)
class KernelProfile:
    """Kernel ``m^`` on ``[-T/2, T/2)`` and named diagnostics."""
    kernel: GridSignal
    diagnostics: Dict[str, float]


def _m0_leading(x: np.ndarray, T: float) -> np.ndarray:
    # closed-form Riemann sum of the jump at xi = 1, with the xi = 1 sample
    return np.exp(2j*np.pi*x) * (1 + 1j / np.tan(np.pi*x/T)) / (2*T)


def kernel_profile(m: Symbol, family: str = None, N: int = None) -> KernelProfile:
    """
    Kernel of ``m`` plus ``sup``, ``l12`` and ``weak_l1`` over one period,
    and the family diagnostic when ``family`` is given:

    - ``m0``: ``remainder``, ``sup x^2 |m0^(x) - lead(x)|`` over ``[10, T/8]``,
      ``lead`` the periodized ``i e^(2 pi i x) / (2 pi x)``.
    - ``mN``: ``l12_unit``, ``||m_N^||_{L^{1,2}([0,1])}``.
    - ``mPrimeN``: ``x_sup``, ``sup |x m'_N^(x)|`` over ``[4, 2^(N-1)]``.
    - ``mDoublePrimeN``: ``central``, ``|m''_N^(0)|``.
    - ``hilbertTest``, ``mTriplePrimeN``, ``hirschman``: none beyond the generic ones.
    """
    K = kernel(m)
    T = m.config.T
    diag = {
        "sup": float(np.max(K.magnitude())),
        "l12": lorentz_norm(K, LorentzParams(1, 2)),
        "weak_l1": lorentz_norm(K, LorentzParams(1, math.inf)),
    }
    x = K.x
    if family == "m0":
        if T/8 < 20:
            raise ResolutionError(f"m0 remainder needs T >= 160, got {T:g}")
        window = (x >= 10) & (x <= T/8)
        diff = np.abs(K.samples[0, window] - _m0_leading(x[window], T))
        diag["remainder"] = float(np.max(x[window]**2 * diff))
    elif family == "mN":
        if T < 4:
            raise ResolutionError(f"L^(1,2)([0,1]) needs T >= 4, got {T:g}")
        diag["l12_unit"] = lorentz_norm(K, LorentzParams(1, 2), (0.0, 1.0))
    elif family == "mPrimeN":
        if N is None:
            raise ValueError("mPrimeN profile needs N")
        if T/2 <= 2.0 ** (N-1):
            raise ResolutionError(f"x window up to 2^{N-1} needs T > 2^{N}, got {T:g}")
        window = (x >= 4) & (x <= 2.0 ** (N-1))
        diag["x_sup"] = float(np.max(x[window] * K.magnitude()[window]))
    elif family == "mDoublePrimeN":
        if T < 4:
            raise ResolutionError(f"central height needs T >= 4, got {T:g}")
        diag["central"] = float(K.magnitude()[m.config.n // 2])
    return KernelProfile(K, diag)
