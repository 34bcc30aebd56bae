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
Multiplier application, frequency components and the class functionals.
"""

__all__ = (
    "apply_multiplier",
    "frequency_component",
    "dilate",
    "component_range",
    "ClassReport",
    "variation_functional",
    "marcinkiewicz_functional",
    "r2_functional",
    "x_atom_norm",
    "jump_atom_bound",
    "x_prime_q_norm",
    "SplitPieces",
    "split_characteristic",
    "IntervalFamily",
    "BasicReport",
    "verify_basic_inequality",
)

import math
import numpy as np
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple
from .bumps import ETA, WHOOP, BumpSpec, bump_values, transition
from .grid import Atom, GridConfig, GridSignal, Spectrum, Symbol, dft, idft
from .norms import s_variation
from .utils import BandOverflowError, GridError, OverlapError, ResolutionError, SupportError

CUTOFFS = {
    "eta": ETA,
    "whoop": WHOOP,
}


def apply_multiplier(m: Symbol, f: GridSignal) -> GridSignal:
    """
    ``T_m f``: multiply the spectrum by ``m`` and invert.

    A scalar symbol acts on every channel of ``f``; a d-channel symbol acts on
    a scalar ``f`` (d-channel output) or channelwise on a d-channel ``f``.
    """
    if m.config != f.config:
        raise GridError(f"symbol grid {m.config} does not match signal grid {f.config}")
    if not (m.channels == 1 or f.channels == 1 or m.channels == f.channels):
        raise GridError(f"cannot apply a {m.channels}-channel symbol to a {f.channels}-channel signal")
    spec = dft(f)
    return idft(Spectrum(f.config, m.values * spec.coeffs, spec.origin))


def _dyadic_exponent(factor: float) -> int:
    e = math.log2(factor) if factor > 0 else -1.0
    if e != int(e) or e < 0:
        raise ValueError(f"dilation factor must be 2^d with d >= 0, got {factor}")
    return int(e)


def dilate(m: Symbol, factor: float) -> Symbol:
    """
    ``m(factor * xi)`` on the same grid, for ``factor = 2^d``, ``d >= 0``.
    Samples whose dilate falls beyond the band are 0.
    """
    d = _dyadic_exponent(factor)
    n = m.config.n
    k = np.arange(n) - n//2
    src = k * 2**d
    valid = (src >= -n//2) & (src < n//2)
    out = np.zeros_like(m.values)
    out[:, valid] = m.values[:, src[valid] + n//2]
    return m.with_values(out)


def _component_config(config: GridConfig, j: int) -> GridConfig:
    Tj = config.T * 2.0**j
    if Tj < 1:
        raise ResolutionError(f"component {j} needs 2^{j}*T >= 1, got {Tj}")
    Lj = max(int(math.ceil(math.log2(8*Tj))), 3)
    return GridConfig(Lj, Tj / 2**Lj)


def component_range(config: GridConfig, spec: BumpSpec = ETA) -> range:
    """Components ``j`` representable on ``config``."""
    lo = int(math.ceil(-math.log2(config.T)))
    hi = int(math.floor(math.log2(config.nyquist / spec.support[1])))
    return range(lo, hi+1)


def frequency_component(m: Symbol, j: int, cutoff: str = "eta") -> Symbol:
    """
    ``m_j(xi) = eta(xi) m(2^j xi)`` on its own grid with period ``2^j T``,
    whose sample ``k`` sits at ``2^-j`` times sample ``k`` of ``m``.

    :param cutoff: ``"eta"`` (1 on ±[3/4,3]) or ``"whoop"`` (1 on ±[1,2]);
        both supported in ±[1/2,4].
    """
    if cutoff not in CUTOFFS:
        raise ValueError(f"unknown cutoff {cutoff}, choose from {tuple(CUTOFFS)}")
    spec = CUTOFFS[cutoff]
    config = m.config
    if spec.support[1] * 2.0**j > config.nyquist:
        raise BandOverflowError(f"component {j} reaches 2^{j}*{spec.support[1]}, beyond Nyquist {config.nyquist}")

    comp = _component_config(config, j)
    k = np.arange(comp.n) - comp.n//2
    valid = (k >= -config.n//2) & (k < config.n//2)
    values = np.zeros((m.channels, comp.n), dtype=np.complex128)
    values[:, valid] = m.values[:, k[valid] + config.n//2]
    values *= bump_values(spec, comp.frequencies())
    return Symbol(comp, values)


@dataclass(frozen=True)
class ClassReport:
    """
    Per-component values of a class functional. ``refined_sup`` is the sup on
    a refined sampling of the same symbol when one was given.
    """
    name: str
    per_j: Dict[int, float]
    sup: float
    threshold: float
    passed: bool
    refined_sup: Optional[float] = None

    @property
    def refinement_change(self) -> Optional[float]:
        if self.refined_sup is None or self.sup == 0:
            return None
        return abs(self.refined_sup - self.sup) / self.sup


def _class_report(name: str, m: Symbol, func, threshold: float, refined: Optional[Symbol],
        cutoff: str) -> ClassReport:
    def run(sym: Symbol) -> Dict[int, float]:
        return {j: func(frequency_component(sym, j, cutoff)) for j in component_range(sym.config, CUTOFFS[cutoff])}

    per_j = run(m)
    sup = max(per_j.values()) if per_j else 0.0
    refined_sup = None
    if refined is not None:
        values = run(refined).values()
        refined_sup = max(values) if values else 0.0
    return ClassReport(name, per_j, sup, threshold, sup <= threshold, refined_sup)


def variation_functional(m: Symbol, s: float = 1, threshold: float = math.inf,
        refined: Symbol = None, cutoff: str = "eta") -> ClassReport:
    """
    ``V_s`` class functional: s-variation of each frequency component.
    """
    name = "marcinkiewicz" if s == 1 else f"V_{s:g}"
    return _class_report(name, m, lambda mj: s_variation(mj, s), threshold, refined, cutoff)


def marcinkiewicz_functional(m: Symbol, threshold: float = math.inf, refined: Symbol = None) -> ClassReport:
    """Total variation of the frequency components, uniformly in ``j``."""
    return variation_functional(m, 1, threshold, refined)


def r2_functional(m: Symbol, threshold: float = math.inf, refined: Symbol = None) -> ClassReport:
    """Atomic-norm bound of each component in the span of ``X``."""
    return _class_report("R2", m, x_atom_norm, threshold, refined, "eta")


def _constancy_runs(values: np.ndarray, tol: float) -> List[Tuple[int, int, np.ndarray]]:
    n = values.shape[-1]
    jumps = np.max(np.abs(np.diff(values, axis=1)), axis=0) > tol
    starts = np.concatenate([[0], np.flatnonzero(jumps) + 1])
    stops = np.concatenate([starts[1:], [n]])
    return [(int(a), int(b), values[:, a]) for a, b in zip(starts, stops)]


def _check_component_support(m: Symbol, tol: float) -> np.ndarray:
    xi = np.abs(m.xi)
    outside = (xi < 0.5) | (xi > 4)
    if np.any(np.abs(m.values[:, outside]) > tol):
        raise SupportError("component is not supported in ±[1/2, 4]")
    return m.values


def x_atom_norm(mj: Symbol, tol: float = 1e-12) -> float:
    """
    Upper bound on the ``X-bar`` norm of a component.

    The component is read as ``sum c_I chi_I`` over its maximal constancy
    runs. Terms are grouped left to right; a group closes when the next
    coefficient would push its l2 mass over 1. A group of mass ``mu`` is
    ``mu`` times an atom, so the sum of the masses bounds the norm. The result
    is the smaller of this and :func:`jump_atom_bound`.
    """
    values = _check_component_support(mj, tol)
    total = 0.0
    group = 0.0
    for _, _, c in _constancy_runs(values, tol):
        c2 = float(np.sum(np.abs(c)**2))
        if c2 <= tol**2:
            continue
        if group > 0 and group + c2 > 1:
            total += math.sqrt(group)
            group = 0.0
        group += c2
    total += math.sqrt(group)
    return min(total, jump_atom_bound(mj, tol))


def jump_atom_bound(mj: Symbol, tol: float = 1e-12) -> float:
    """
    Bound from writing each half of the component as a sum of jumps
    ``d_i chi_[xi_i, edge)``, every term an atom: ``sum |d_i|``.
    """
    values = _check_component_support(mj, tol)
    xi = mj.xi
    total = 0.0
    for side in (xi < 0, xi > 0):
        part = values[:, side]
        if xi[side][0] < 0:
            part = part[:, ::-1]
        # jumps away from the origin, starting from 0
        steps = np.diff(np.concatenate([np.zeros((part.shape[0], 1)), part], axis=1), axis=1)
        total += float(np.sum(np.sqrt(np.sum(np.abs(steps)**2, axis=0))))
    return total


def x_prime_q_norm(atoms: Sequence[Atom], q: float) -> float:
    """
    ``(sum_k (sum_{|I| ~ 2^k} c_I^2)^(q/2))^(1/q)`` with ``k = floor(log2 |I|)``.
    """
    if not atoms:
        return 0.0
    per_scale: Dict[int, float] = {}
    for atom in atoms:
        k = math.floor(math.log2(atom.length))
        per_scale[k] = per_scale.get(k, 0.0) + abs(atom.coefficient)**2
    sums = np.sqrt(np.array(list(per_scale.values())))
    if math.isinf(q):
        return float(np.max(sums))
    return float(np.sum(sums**q) ** (1/q))


@dataclass(frozen=True)
class SplitPieces:
    """
    ``chi_I = bump*left*H(xi - a) + bump*right*H(b - xi)`` with
    ``H = chi_(0, inf)``.
    """
    interval: Tuple[float, float]
    bump: Symbol
    left: Symbol
    right: Symbol
    piece_left: Symbol
    piece_right: Symbol

    def reconstruct(self) -> Symbol:
        return self.piece_left + self.piece_right

    def indicator(self) -> Symbol:
        a, b = self.interval
        xi = self.bump.xi
        return Symbol(self.bump.config, ((xi > a) & (xi < b)).astype(np.float64))


def split_characteristic(config: GridConfig, interval: Tuple[float, float]) -> SplitPieces:
    """
    Split ``chi_(a,b)`` into a left piece cut by ``H(xi - a)`` and a right piece
    cut by ``H(b - xi)``. ``left`` is a bump adapted to ``[a-|I|, a+|I|]``,
    ``right`` to ``[b-|I|, b+|I|]``; ``bump`` is 1 on ``3I`` and supported on
    ``5I``.
    """
    a, b = interval
    ell = b - a
    if not ell >= 2*config.freq_step:
        raise ValueError(f"interval {interval} spans fewer than 2 frequency samples")
    if max(abs(a - 2*ell), abs(b + 2*ell)) > config.nyquist:
        raise BandOverflowError(f"5I around {interval} exceeds Nyquist {config.nyquist}")

    xi = config.frequencies()
    bump = bump_values(BumpSpec((a-2*ell, b+2*ell), (a-ell, b+ell)), xi)

    ramp = transition((xi - a) / ell)
    left = np.where(xi <= a, transition((xi - (a-ell)) / ell), 1 - ramp)
    right = np.where(xi >= b, transition((b+ell - xi) / ell), ramp)

    h_left = (xi > a).astype(np.float64)
    h_right = (xi < b).astype(np.float64)
    return SplitPieces(
        interval,
        Symbol(config, bump),
        Symbol(config, left),
        Symbol(config, right),
        Symbol(config, bump * left * h_left),
        Symbol(config, bump * right * h_right),
    )


@dataclass(frozen=True)
class IntervalFamily:
    """
    Frequency intervals ``[a, b)`` with symbols ``m_I`` supported on them,
    base points and a declared overlap bound.
    """
    intervals: Tuple[Tuple[float, float], ...]
    symbols: Tuple[Symbol, ...]
    bases: Tuple[float, ...] = ()
    overlap: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "intervals", tuple(tuple(i) for i in self.intervals))
        object.__setattr__(self, "symbols", tuple(self.symbols))
        bases = tuple(self.bases) or tuple(0.5*(a+b) for a, b in self.intervals)
        object.__setattr__(self, "bases", bases)
        if len(self.symbols) != len(self.intervals) or len(bases) != len(self.intervals):
            raise ValueError("interval family needs one symbol and one base point per interval")
        for (a, b), base in zip(self.intervals, bases):
            if not a <= base <= b:
                raise ValueError(f"base point {base} is not in [{a}, {b}]")

    @property
    def config(self) -> GridConfig:
        return self.symbols[0].config

    def counts(self) -> np.ndarray:
        xi = self.config.frequencies()
        total = np.zeros(len(xi), dtype=int)
        for a, b in self.intervals:
            total += (xi >= a) & (xi < b)
        return total

    def measured_overlap(self) -> int:
        """``max sum_I chi_I`` over the frequency samples."""
        if not self.intervals:
            return 0
        return int(np.max(self.counts()))

    def validate(self, tol: float = 0.0) -> None:
        """
        :raises OverlapError: measured overlap above the declared bound.
        :raises SupportError: a symbol is nonzero off its interval.
        """
        measured = self.measured_overlap()
        if measured > self.overlap:
            raise OverlapError(f"intervals overlap {measured} times, declared {self.overlap}")
        xi = self.config.frequencies()
        for (a, b), m in zip(self.intervals, self.symbols):
            off = (xi < a) | (xi >= b)
            if np.any(np.abs(m.values[:, off]) > tol):
                raise SupportError(f"symbol is not supported on [{a}, {b})")


@dataclass(frozen=True)
class BasicReport:
    lhs: float
    rhs: float
    ratio: float
    overlap: int
    holds: bool


def verify_basic_inequality(family: IntervalFamily, h: Sequence[GridSignal]) -> BasicReport:
    """
    ``||sum T_{m_I} h_I||_2^2 <= N sum ||T_{m_I} h_I||_2^2`` by Plancherel.
    """
    if len(h) != len(family.symbols):
        raise ValueError("need one signal per interval")
    family.validate()
    config = family.config
    total = None
    rhs = 0.0
    for m, f in zip(family.symbols, h):
        if f.config != config or f.origin != h[0].origin:
            raise GridError("signals must share the family grid and origin")
        piece = m.values * dft(f).coeffs
        rhs += float(np.sum(np.abs(piece)**2)) / config.T
        total = piece if total is None else total + piece
    lhs = float(np.sum(np.abs(total)**2)) / config.T if total is not None else 0.0
    N = family.overlap
    ratio = lhs / rhs if rhs > 0 else 0.0
    return BasicReport(lhs, rhs, ratio, N, lhs <= N * rhs * (1 + 1e-10))
