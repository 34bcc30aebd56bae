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
Square functions for ``L log^{1/2} L``.

:func:`redistribute_char` builds nonnegative ``f_I`` for an indicator
``chi_E`` of a dyadic set so that ``|<chi_E, psi_I>| <= |I|^(-1/2) ||f_I||_1``
while ``(sum f_I^2)^(1/2)`` stays integrable at the ``|E| log^(1/2)`` rate.
:func:`build_gen` lifts this to general functions by a layer-cake
superposition, and :func:`continuous_squarefn` smooths the dyadic structure
by averaging over translations.

Everything is stored per cell of the level-``N`` grid: row ``j`` of
``rows`` is ``f_j = sum_{|I| = 2^-j} f_I`` (the ``f_I`` of one level have
disjoint supports, so ``f_I`` is the restriction of row ``j`` to ``I``).
"""

__all__ = (
    "RedistributionOutput",
    "CharReport",
    "GenReport",
    "SquareFnOutput",
    "SquareFnReport",
    "redistribute_char",
    "verify_char",
    "build_gen",
    "verify_gen",
    "continuous_squarefn",
    "squarefn_report",
    "normal_theta",
)

import math
import numpy as np
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple
from .dyadic import DyadicInterval, DyadicSet, haar_analyze
from .grid import GridSignal, convolve, unit_config
from .kernels import PHI_EXPONENT, PHI_IMAGES, littlewood_paley, littlewood_paley_wide, phi_j
from .utils import GridError, SupportError

EPS = 2.0 ** -8
# eps above 1/4 admits level N-1 intervals into the family
EPS_MAX = 0.25
THETA_NODES = 16


@dataclass(frozen=True)
class RedistributionOutput:
    """
    :param rows: ``(N+1, 2**N)`` cell values, row ``j`` is ``f_j``.
    :param stopping: Top-level stopping intervals (empty in the easy case).
    :param combined: Intervals assigned by the combination formula.
    :param layers: Layer-cake weight per dyadic band ``[2^k, 2^(k+1))``.
    """
    level: int
    rows: np.ndarray
    eps: float
    A: float = 1.0
    stopping: Tuple[DyadicInterval, ...] = ()
    combined: Tuple[DyadicInterval, ...] = ()
    layers: Dict[int, float] = field(default_factory=dict)

    def f_I(self, interval: DyadicInterval) -> np.ndarray:
        return self.rows[interval.level, interval.cells(self.level)]

    def f_j(self, j: int) -> GridSignal:
        return GridSignal(unit_config(self.level), self.rows[j])

    def square_function(self) -> np.ndarray:
        return np.sqrt(np.sum(self.rows**2, axis=0))

    def square_l1(self) -> float:
        return float(np.sum(self.square_function()) * 2.0**-self.level)


class _Redistributor:
    def __init__(self, E: DyadicSet, eps: float) -> None:
        self.N = E.level
        self.mask = E.mask
        self.eps = eps
        self.prefix = np.concatenate([[0], np.cumsum(E.mask)])
        self.rows = np.zeros((self.N+1, 2**self.N))
        self.stopping: List[DyadicInterval] = []
        self.combined: List[DyadicInterval] = []

    def count(self, interval: DyadicInterval) -> int:
        sl = interval.cells(self.N)
        return int(self.prefix[sl.stop] - self.prefix[sl.start])

    def haar_mass(self, interval: DyadicInterval) -> float:
        """``|I|^(1/2) |<chi_E, psi_I>|``."""
        if interval.level == self.N:
            return 0.0
        left, right = interval.children()
        return abs(self.count(left) - self.count(right)) * 2.0**-self.N

    def solve(self, J: DyadicInterval, depth: int) -> None:
        assert depth <= self.N, f"recursion depth {depth} exceeds level {self.N}"
        cE = self.count(J)
        if cE == 0:
            return
        size = 2 ** (self.N - J.level)
        if cE >= self.eps * size:
            self.easy_case(J)
            return

        chain = []
        stops = []
        stack = [J]
        while stack:
            I = stack.pop()
            chain.append(I)
            for child in I.children():
                if child.level < self.N and self.in_family(child, J, cE):
                    stack.append(child)
                else:
                    stops.append(child)
        stops.sort()
        assert all(K.level < self.N for K in stops), f"stopping interval of length 2^-{self.N} under {J}"
        if depth == 0:
            self.stopping = list(stops)

        for K in stops:
            self.solve(K, depth+1)

        base = J.cells(self.N).start
        H = np.zeros(size)
        for K in stops:
            cK = self.count(K)
            if cK == 0:
                continue
            sl = K.cells(self.N)
            F = np.sqrt(np.sum(self.rows[K.level:, sl]**2, axis=0))
            mass = float(np.sum(F)) * 2.0**-self.N
            if mass > 0:
                H[sl.start-base:sl.stop-base] += cK * F / mass
            else:
                # F_K vanishes only when E fills K; use chi_{E cap K} / |E cap K|
                H[sl.start-base:sl.stop-base] += self.mask[sl] * 2.0**self.N

        for I in chain:
            cI = self.count(I)
            if cI == 0:
                continue
            sl = I.cells(self.N)
            self.rows[I.level, sl] = self.haar_mass(I) / cI * H[sl.start-base:sl.stop-base]
            self.combined.append(I)

    def in_family(self, I: DyadicInterval, J: DyadicInterval, cE: int) -> bool:
        # eps |E||I| <= |E cap I| <= 2 |E||I|, measured relative to J
        scaled = self.count(I) * 2 ** (I.level - J.level)
        return self.eps * cE <= scaled <= 2 * cE

    def easy_case(self, J: DyadicInterval) -> None:
        sl = J.cells(self.N)
        sub = self.mask[sl].astype(np.float64)
        for j in range(J.level, self.N):
            width = 2 ** (self.N - j)
            blocks = sub.reshape(-1, width)
            diff = np.abs(blocks[:, :width//2].sum(axis=1) - blocks[:, width//2:].sum(axis=1))
            self.rows[j, sl] = np.repeat(diff / width, width)


def redistribute_char(E: DyadicSet, eps: float = EPS, A: float = 1.0) -> RedistributionOutput:
    """
    Nonnegative ``f_I`` supported on ``I`` for every dyadic ``I`` of length at
    least ``2^-N``, with ``|<chi_E, psi_I>| <= |I|^(-1/2) ||f_I||_1``.

    If ``|E| >= eps``: ``f_I = |I|^(-1/2) |<chi_E, psi_I>| chi_I``. Otherwise
    the intervals with ``eps|E||I| <= |E cap I| <= 2|E||I|`` are kept, the
    maximal intervals outside that family form a partition of ``[0, 1)`` on
    which the construction recurses, and each kept interval spreads its mass
    over the recursive square functions ``F_J`` in proportion to
    ``|E cap J|``.

    :param eps: Threshold in ``(0, 1/4]``, so every stopping interval has
        length in ``(2^-N, 1)``.
    :param A: Target constant, recorded for the verifier only.
    """
    if not 0 < eps <= EPS_MAX:
        raise ValueError(f"eps must lie in (0, {EPS_MAX}], got {eps}")
    solver = _Redistributor(E, eps)
    solver.solve(DyadicInterval(0, 0), 0)
    rows = solver.rows
    rows.setflags(write=False)
    return RedistributionOutput(E.level, rows, eps, A, tuple(solver.stopping), tuple(solver.combined))


@dataclass(frozen=True)
class CharReport:
    """
    :param mean2_slack: ``max_I |<chi_E, psi_I>| - |I|^(-1/2) ||f_I||_1``.
    :param ratio: ``||(sum f_I^2)^(1/2)||_1 / (|E| log^(1/2)(2 + 1/|E|))``,
        0 when ``|E| = 0``.
    :param combination_error: Largest ``| ||f_I||_1 - |I|^(1/2)|<chi_E, psi_I>| |``
        over the combination-formula intervals.
    :param partition_ok: Stopping intervals partition ``[0, 1)`` with
        ``2^-N < |J| < 1``; ``None`` in the easy case.
    """
    mean2_slack: float
    square_l1: float
    ratio: float
    combination_error: float
    partition_ok: Optional[bool]
    eps: float
    A: float

    @property
    def within_A(self) -> bool:
        return self.ratio <= self.A


def _level_masses(mask: np.ndarray, N: int, j: int) -> np.ndarray:
    width = 2 ** (N - j)
    blocks = mask.reshape(-1, width).astype(np.float64)
    return np.abs(blocks[:, :width//2].sum(axis=1) - blocks[:, width//2:].sum(axis=1)) * 2.0**-N


def verify_char(E: DyadicSet, out: RedistributionOutput) -> CharReport:
    if E.level != out.level:
        raise ValueError(f"set level {E.level} does not match output level {out.level}")
    N = E.level
    slack = -math.inf
    for j in range(N+1):
        coef = _level_masses(E.mask, N, j) * 2.0**(j/2) if j < N else np.zeros(2**N)
        norms = out.rows[j].reshape(2**j, -1).sum(axis=1) * 2.0**-N * 2.0**(j/2)
        slack = max(slack, float(np.max(coef - norms)))

    measure = E.measure
    sq = out.square_l1()
    ratio = sq / (measure * math.sqrt(math.log(2 + 1/measure))) if measure > 0 else 0.0

    comb = 0.0
    solver = _Redistributor(E, out.eps)
    for I in out.combined:
        comb = max(comb, abs(float(np.sum(out.f_I(I))) * 2.0**-N - solver.haar_mass(I)))

    partition_ok = None
    if out.stopping:
        ends = 0.0
        partition_ok = True
        for J in sorted(out.stopping, key=lambda J: J.start):
            partition_ok &= (J.start == ends) and (2.0**-N < J.length < 1)
            ends = J.end
        partition_ok &= ends == 1.0

    return CharReport(slack, sq, ratio, comb, partition_ok, out.eps, out.A)


def build_gen(f: GridSignal, eps: float = EPS) -> RedistributionOutput:
    """
    Per-level ``f_j >= 0`` with ``|<f, psi_I>| <= |I|^(-1/2) int_I f_j`` for every
    ``I`` of level ``j``.

    The positive and negative parts are written as exact layer cakes
    ``sum_i (t_i - t_(i-1)) chi_{part >= t_i}`` over their distinct values;
    each layer is redistributed and the outputs are superposed with the
    layer weights.
    """
    if f.config.T != 1 or f.origin != 0 or f.channels != 1:
        raise GridError("build_gen needs a single-channel signal on [0, 1)")
    values = f.real[0]
    if not np.all(np.isfinite(values)):
        raise ValueError("signal has non-finite samples, its Orlicz integral diverges")
    N = f.config.L

    rows = np.zeros((N+1, 2**N))
    layers: Dict[int, float] = {}
    for part in (np.maximum(values, 0), np.maximum(-values, 0)):
        levels = np.unique(part[part > 0])
        prev = 0.0
        for t in levels:
            weight = float(t - prev)
            prev = t
            out = redistribute_char(DyadicSet(N, part >= t), eps)
            rows += weight * out.rows
            band = math.frexp(t)[1] - 1
            layers[band] = layers.get(band, 0.0) + weight

    rows.setflags(write=False)
    return RedistributionOutput(N, rows, eps, layers=dict(sorted(layers.items())))


@dataclass(frozen=True)
class GenReport:
    mean_slack: float
    square_l1: float


def verify_gen(f: GridSignal, out: RedistributionOutput) -> GenReport:
    """``max_I |<f, psi_I>| - |I|^(-1/2) int_I f_j`` and ``||(sum f_j^2)^(1/2)||_1``."""
    N = out.level
    coeffs = haar_analyze(f, N)
    slack = -math.inf
    for j, c in enumerate(coeffs.coeffs):
        norms = out.rows[j].reshape(2**j, -1).sum(axis=1) * 2.0**-N * 2.0**(j/2)
        slack = max(slack, float(np.max(np.abs(c) - norms)))
    return GenReport(slack, out.square_l1())


@dataclass(frozen=True)
class SquareFnOutput:
    """
    ``F[j]`` for ``j`` in ``j_range``; provenance of the translation average.
    """
    F: Dict[int, GridSignal]
    thetas: Tuple[float, ...]
    shifts: Tuple[int, ...]
    k_range: Tuple[int, int]
    eps: float

    def square_function(self) -> np.ndarray:
        return np.sqrt(sum(np.abs(F.samples[0])**2 for F in self.F.values()))

    def norm(self) -> float:
        """``||(sum_j F_j^2)^(1/2)||_1``."""
        h = next(iter(self.F.values())).config.h
        return float(np.sum(self.square_function()) * h)


def _unit_level(f: GridSignal) -> int:
    N = -math.log2(f.config.h)
    if N != int(N) or N < 1 or f.config.T < 1:
        raise GridError(f"grid spacing must be 2^-N with period >= 1, got h={f.config.h}, T={f.config.T}")
    return int(N)


def continuous_squarefn(f: GridSignal, theta_nodes: int = THETA_NODES, eps: float = EPS) -> SquareFnOutput:
    """
    Substitute square function ``{F_j}`` of a function supported in ``[1/3, 2/3]``.

    For ``j >= 0``: ``F_j(x) = sum_k 2^(-|j-k|/2) int_{-1/3}^{1/3} f^theta_k(x+theta) dtheta``
    with ``f^theta = f(. - theta)`` and ``f^theta_k`` from :func:`build_gen`;
    the integral is a midpoint rule on ``theta_nodes`` nodes rounded to grid
    shifts. For ``j < 0``: ``F_j = |Delta~_j f|``.

    :param f: Single-channel signal, origin 0, spacing ``2^-N``, period >= 1.
    """
    if f.channels != 1 or f.origin != 0:
        raise GridError("continuous square function needs a single-channel signal with origin 0")
    if theta_nodes < 16:
        raise ValueError(f"need at least 16 theta nodes, got {theta_nodes}")
    N = _unit_level(f)
    x = f.x
    outside = (x < 1/3) | (x > 2/3)
    if np.any(np.abs(f.samples[0, outside]) > 0):
        raise SupportError("signal is not supported in [1/3, 2/3]")

    n = f.config.n
    unit = 2 ** N
    values = f.real[0]
    thetas = tuple(-1/3 + (i+0.5) * (2/3) / theta_nodes for i in range(theta_nodes))
    shifts = tuple(int(round(t * unit)) for t in thetas)

    avg = np.zeros((N+1, n))
    for s in shifts:
        shifted = np.roll(values, s)
        out = build_gen(GridSignal(unit_config(N), shifted[:unit]), eps)
        padded = np.zeros((N+1, n))
        padded[:, :unit] = out.rows
        # F at x reads f^theta_k at x + theta; no wrap around the period
        if s >= 0:
            avg[:, :n-s] += padded[:, s:]
        else:
            avg[:, -s:] += padded[:, :n+s]
    avg *= (2/3) / theta_nodes

    F: Dict[int, GridSignal] = {}
    k = np.arange(N+1)
    for j in range(N+1):
        weights = 2.0 ** (-np.abs(j-k) / 2)
        F[j] = GridSignal(f.config, weights @ avg)
    j_low = int(math.ceil(-math.log2(f.config.T))) - 2
    for j in range(j_low, 0):
        F[j] = GridSignal(f.config, np.abs(littlewood_paley_wide(j, f).samples[0]))

    return SquareFnOutput(dict(sorted(F.items())), thetas, shifts, (0, N), eps)


@dataclass(frozen=True)
class SquareFnReport:
    """
    :param support_constant: ``max_{x,j} |Delta_j f(x)| / (F_j * phi_j)(x)``.
    :param norm: ``||(sum F_j^2)^(1/2)||_1``.
    """
    support_constant: float
    per_j: Dict[int, float]
    norm: float


def squarefn_report(f: GridSignal, out: SquareFnOutput, exponent: float = PHI_EXPONENT,
        images: int = PHI_IMAGES) -> SquareFnReport:
    config = f.config
    j_top = int(math.floor(math.log2(config.nyquist / 4)))
    per_j: Dict[int, float] = {}
    for j, Fj in out.F.items():
        if j > j_top:
            continue
        delta = np.abs(littlewood_paley(j, f).samples[0])
        if np.max(delta) == 0:
            per_j[j] = 0.0
            continue
        weight = convolve(Fj, phi_j(config, j, exponent=exponent, images=images, origin=0.0)).real[0]
        keep = delta > 1e-10 * np.max(delta)
        if np.any(weight[keep] <= 0):
            per_j[j] = math.inf
        else:
            per_j[j] = float(np.max(delta[keep] / weight[keep]))
    constant = max(per_j.values()) if per_j else 0.0
    return SquareFnReport(constant, per_j, out.norm())


def normal_theta(x: float, j: int, scale: float = 1.0) -> float:
    """
    Measure of the ``theta`` in ``[-1/3, 1/3]`` with
    ``dist(x + theta, 2^-k Z) >= scale/100 * 2^(-|j-k|/10) 2^-k`` for all
    ``0 <= k <= j``.
    """
    if j < 0:
        raise ValueError(f"j must be nonnegative, got {j}")
    starts = []
    ends = []
    for k in range(j+1):
        step = 2.0 ** -k
        r = scale / 100 * 2.0 ** (-abs(j-k) / 10) * step
        lo = math.ceil((x - 1/3 - r) / step)
        hi = math.floor((x + 1/3 + r) / step)
        centers = np.arange(lo, hi+1) * step - x
        starts.append(centers - r)
        ends.append(centers + r)

    starts = np.clip(np.concatenate(starts), -1/3, 1/3)
    ends = np.clip(np.concatenate(ends), -1/3, 1/3)
    order = np.argsort(starts)
    starts, ends = starts[order], ends[order]
    reach = np.maximum.accumulate(ends)
    prev = np.concatenate([[-np.inf], reach[:-1]])
    covered = np.sum(np.maximum(0.0, ends - np.maximum(starts, prev)))
    return float(2/3 - covered)
