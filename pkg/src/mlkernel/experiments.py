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
Inequality verifiers, operator-norm probing and slope fits.

Every verifier returns both sides of its inequality and their ratio; a
``0/0`` ratio is reported as 0 and ``x/0`` as infinity.
"""

__all__ = (
    "llog_family",
    "RatioReport",
    "verify_zygmund",
    "verify_l12_lemma",
    "verify_main_estimate",
    "random_main_instance",
    "OperatorNormBound",
    "iter_probe_inputs",
    "probe_inputs",
    "measure_operator_norm",
    "SlopeFit",
    "fit_slope",
    "GateResult",
    "evaluate_gate",
)

import itertools
import math
import numpy as np
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union
from scipy.stats import linregress
from .bumps import BumpSpec, PsiBump, PsiSpec, bump_values
from .dyadic import DyadicInterval
from .grid import GridConfig, GridSignal, Symbol, convolve, dft, kernel
from .kernels import PHI_EXPONENT, PHI_IMAGES, lp_symbol, phi_interval
from .multipliers import IntervalFamily, apply_multiplier, component_range, split_characteristic
from .norms import LorentzParams, l1_norm, lorentz_norm, lp_norm, orlicz_llogr
from .utils import GridError, ResolutionError


def _ratio(lhs: float, rhs: float) -> float:
    if rhs > 0:
        return lhs / rhs
    return 0.0 if lhs == 0 else math.inf


@dataclass(frozen=True)
class RatioReport:
    lhs: float
    rhs: float
    ratio: float
    details: Dict[str, float] = field(default_factory=dict)


def llog_family(config: GridConfig, N: int, center: float = 0.5, psi: PsiSpec = PsiSpec()) -> GridSignal:
    """
    ``2^N N^(-1/2) psi_N(x - center)`` with ``psi_N(x) = g(2^N x)`` and ``g``
    the odd, mean-zero pair ``psi(y + r) - psi(y - r)``.
    """
    width = 4 * psi.radius * 2.0**-N
    if width < 8 * config.h:
        raise ResolutionError(f"scale 2^-{N} is below 8 samples of spacing {config.h}")
    bump = PsiBump(psi)
    r = psi.radius
    y = 2.0**N * (config.positions(0.0) - center)
    values = 2.0**N / math.sqrt(N) * (bump(y + r) - bump(y - r))
    return GridSignal(config, values)


def verify_zygmund(f: GridSignal) -> RatioReport:
    """
    ``(sum_j |fhat(2^j)|^2)^(1/2) / ||f||_{L log^(1/2) L}`` on the unit circle,
    ``j >= 0`` up to Nyquist.
    """
    config = f.config
    if config.T != 1:
        raise GridError(f"lacunary test lives on the unit circle, got T={config.T}")
    spec = dft(f)
    total = 0.0
    j = 0
    while 2**j < config.nyquist:
        total += float(np.sum(np.abs(spec.at(2**j))**2))
        j += 1
    lhs = math.sqrt(total)
    rhs = orlicz_llogr(f, 0.5)
    return RatioReport(lhs, rhs, _ratio(lhs, rhs))


def _phi(config: GridConfig, length: Union[float, DyadicInterval], exponent: float, images: int) -> GridSignal:
    return phi_interval(config, length, exponent=exponent, images=images, origin=0.0)


def _check_nonnegative(F: GridSignal) -> None:
    if np.any(np.abs(F.samples.imag) > 0) or np.any(F.samples.real < 0):
        raise ValueError("F_I must be real and nonnegative")


def verify_l12_lemma(instances: Sequence[Tuple[Union[float, DyadicInterval], GridSignal]],
        exponent: float = PHI_EXPONENT, images: int = PHI_IMAGES) -> RatioReport:
    """
    ``||(sum |F_I * phi_I|^2)^(1/2)||_{L^{1,2}} / ||(sum F_I^2)^(1/2)||_1``.

    :param instances: Pairs ``(|I| or I, F_I)`` with ``F_I >= 0`` on a common grid.
    """
    if not instances:
        return RatioReport(0.0, 0.0, 0.0)
    config = instances[0][1].config
    smoothed = []
    raw = []
    for length, F in instances:
        if F.config != config:
            raise GridError("all F_I must share one grid")
        _check_nonnegative(F)
        smoothed.append(convolve(F, _phi(config, length, exponent, images)).samples[0])
        raw.append(F.samples[0])
    lhs = lorentz_norm(GridSignal(config, np.stack(smoothed)), LorentzParams(1, 2))
    rhs = l1_norm(GridSignal(config, np.stack(raw)))
    return RatioReport(lhs, rhs, _ratio(lhs, rhs))


def verify_main_estimate(family: IntervalFamily, F: Sequence[GridSignal], a: Sequence[float],
        variant: str = "L1inf", exponent: float = PHI_EXPONENT, images: int = PHI_IMAGES) -> RatioReport:
    """
    ``||sum_I T_{m_I}(a_I (F_I * phi_I))||_X / (N^(1/2) ||(sum F_I^2)^(1/2)||_1)``
    with ``X = L^{1,inf}`` (``"L1inf"``) or ``L^{1,2}`` (``"L12"``) and ``N``
    the declared overlap.

    :raises OverlapError: The family overlaps more than declared.
    """
    if variant not in ("L1inf", "L12"):
        raise ValueError(f"unknown variant {variant}, choose L1inf or L12")
    if not (len(F) == len(a) == len(family.symbols)):
        raise ValueError("need one F_I and one a_I per interval")
    if any(abs(c) > 1 for c in a):
        raise ValueError("coefficients a_I must satisfy |a_I| <= 1")
    family.validate(tol=1e-12)
    config = family.config

    total = None
    for (lo, hi), m, FI, aI in zip(family.intervals, family.symbols, F, a):
        if FI.config != config:
            raise GridError("F_I must live on the family grid")
        _check_nonnegative(FI)
        fI = convolve(FI, _phi(config, hi-lo, exponent, images)) * aI
        piece = apply_multiplier(m, fI)
        total = piece if total is None else total + piece

    q = math.inf if variant == "L1inf" else 2
    lhs = lorentz_norm(total, LorentzParams(1, q)) if total is not None else 0.0
    square = np.sqrt(sum(np.abs(FI.samples[0])**2 for FI in F)) if F else np.zeros(config.n)
    rhs = math.sqrt(family.overlap) * float(np.sum(square) * config.h)
    return RatioReport(lhs, rhs, _ratio(lhs, rhs), {"overlap": float(family.overlap)})


def random_main_instance(config: GridConfig, N: int, rng: np.random.Generator, variant: str = "L1inf",
        per_layer: int = 4, spikes: int = 3) -> Tuple[IntervalFamily, List[GridSignal], List[float]]:
    """
    ``N`` layers of ``per_layer`` disjoint frequency intervals (so the overlap
    is at most ``N``), each with a symbol, a sparse nonnegative ``F_I`` and a
    coefficient in ``[-1, 1]``.

    ``L12`` symbols are plateau bumps on ``I``; ``L1inf`` symbols are the
    left split pieces of ``chi_I``, which jump at the left endpoint.
    """
    step = config.freq_step
    lo_len, hi_len = 8, 32
    reach = 4*hi_len + 16 + per_layer*(hi_len + 8)
    if reach * step > config.nyquist:
        raise ResolutionError(f"{per_layer} intervals per layer need {reach} frequency samples below Nyquist")

    intervals = []
    symbols = []
    xi = config.frequencies()
    for _ in range(N):
        start = 2*hi_len + int(rng.integers(0, 16))
        for _ in range(per_layer):
            length = int(rng.integers(lo_len, hi_len+1))
            a, b = start * step, (start+length) * step
            if variant == "L12":
                ell = b - a
                values = bump_values(BumpSpec((a, b), (a + ell/4, b - ell/4)), xi)
                symbols.append(Symbol(config, values))
            else:
                symbols.append(split_characteristic(config, (a, b)).piece_left)
            intervals.append((a, b))
            start += length + int(rng.integers(0, 9))

    F = []
    for _ in intervals:
        values = np.zeros(config.n)
        idx = rng.integers(0, config.n, size=spikes)
        values[idx] = rng.exponential(1.0, size=spikes) / config.h
        F.append(GridSignal(config, values))
    a = list(rng.uniform(-1, 1, size=len(intervals)))
    return IntervalFamily(intervals, symbols, overlap=N), F, a


@dataclass(frozen=True)
class OperatorNormBound:
    """Lower bound ``max ||T_m f||_p / ||f||_p`` over the probe inputs."""
    value: float
    best_input: str
    p: float
    per_input: Dict[str, float]


def iter_probe_inputs(config: GridConfig, trials: int = 8, seed: int = 0) -> Iterator[Tuple[str, GridSignal]]:
    """
    The fixed menu: ``delta``, ``cz_atom``, ``bump`` and ``trials`` random
    sign sums ``lacunary_signs_<t>`` of Littlewood-Paley blocks, built one
    at a time.
    """
    h = config.h
    T = config.T
    x = config.positions(-T/2)

    delta = np.zeros(config.n)
    delta[config.n // 2] = 1 / h
    yield "delta", GridSignal(config, delta, -T/2)
    del delta

    w = 8 * h
    atom = np.where((x >= 0) & (x < w), 1.0, 0.0) - np.where((x >= w) & (x < 2*w), 1.0, 0.0)
    yield "cz_atom", GridSignal(config, atom / (2*w), -T/2)
    del atom

    yield "bump", GridSignal(config, bump_values(BumpSpec((-w, w), (-w/2, w/2)), x), -T/2)

    blocks = [j for j in component_range(config) if j >= 0]
    if not blocks:
        return
    rng = np.random.default_rng(seed)
    for t in range(trials):
        signs = rng.choice([-1.0, 1.0], size=len(blocks))
        spectrum = np.zeros(config.n, dtype=np.complex128)
        for sign, j in zip(signs, blocks):
            spectrum += sign * lp_symbol(config, j).values[0]
        yield f"lacunary_signs_{t}", kernel(Symbol(config, spectrum))


def probe_inputs(config: GridConfig, trials: int = 8, seed: int = 0) -> Dict[str, GridSignal]:
    """:func:`iter_probe_inputs` collected into a dict."""
    return dict(iter_probe_inputs(config, trials, seed))


def measure_operator_norm(m: Symbol, p: float, trials: int = 8, seed: int = 0,
        companions: Optional[Dict[str, GridSignal]] = None) -> OperatorNormBound:
    """
    Empirical lower bound on ``||T_m||_{L^p -> L^p}``.

    :param companions: Extra named inputs (the counterexample companions).
    """
    if not 1 < p <= 2:
        raise ValueError(f"p must lie in (1, 2], got {p}")
    inputs = itertools.chain(iter_probe_inputs(m.config, trials, seed), (companions or {}).items())

    per_input = {}
    for name, f in inputs:
        norm = lp_norm(f, p)
        if norm == 0:
            continue
        per_input[name] = lp_norm(apply_multiplier(m, f), p) / norm
    best = max(per_input, key=per_input.get)
    return OperatorNormBound(per_input[best], best, p, per_input)


@dataclass(frozen=True)
class SlopeFit:
    slope: float
    intercept: float
    r2: float


def fit_slope(xs: Sequence[float], ys: Sequence[float], log_x: bool = True) -> SlopeFit:
    """
    Least-squares slope of ``log y`` against ``log x`` (or ``x`` as given).
    A flat ``y`` fits exactly with slope 0.
    """
    xs = np.asarray(xs, dtype=np.float64)
    ys = np.asarray(ys, dtype=np.float64)
    if len(xs) < 2 or len(xs) != len(ys):
        raise ValueError(f"need at least 2 matching points, got {len(xs)} and {len(ys)}")
    if np.any(ys <= 0) or (log_x and np.any(xs <= 0)):
        raise ValueError("log-log fit needs positive values")
    lx = np.log(xs) if log_x else xs
    ly = np.log(ys)
    if np.ptp(ly) == 0:
        return SlopeFit(0.0, float(ly[0]), 1.0)
    res = linregress(lx, ly)
    return SlopeFit(float(res.slope), float(res.intercept), float(res.rvalue**2))


@dataclass(frozen=True)
class GateResult:
    passed: bool
    message: str
    informational: bool = False


def evaluate_gate(experiment, values: Sequence[float], fit: Optional[SlopeFit]) -> GateResult:
    """
    Check a sweep against the experiment's declared gate. A prediction of 0
    waives the R^2 requirement.
    """
    values = np.asarray(values, dtype=np.float64)
    checks = []
    if experiment.prediction is not None:
        if fit is None:
            checks.append((False, "no slope fit"))
        else:
            close = abs(fit.slope - experiment.prediction) <= experiment.tolerance
            good_fit = experiment.prediction == 0 or fit.r2 >= experiment.min_r2
            checks.append((close and good_fit, f"slope {fit.slope:.4f} vs {experiment.prediction:g}"
                f" ± {experiment.tolerance:g} (R^2 {fit.r2:.3f})"))
    if experiment.max_ratio is not None:
        spread = float(np.max(values) / np.min(values)) if np.min(values) > 0 else math.inf
        checks.append((spread <= experiment.max_ratio, f"max/min {spread:.4f} <= {experiment.max_ratio:g}"))
    if experiment.monotone == "increasing":
        ok = bool(np.all(np.diff(values) > 0))
        checks.append((ok, "strictly increasing" if ok else "not strictly increasing"))
    if experiment.min_value is not None:
        low = float(np.min(values))
        checks.append((low >= experiment.min_value, f"min {low:.4g} >= {experiment.min_value:g}"))
    if experiment.max_value is not None:
        high = float(np.max(values))
        checks.append((high <= experiment.max_value, f"max {high:.4g} <= {experiment.max_value:g}"))
    if experiment.max_growth is not None and len(values) > 1:
        growth = float(np.max(values[1:] / values[:-1] - 1)) if np.all(values > 0) else math.inf
        checks.append((growth < experiment.max_growth, f"growth per step {growth:.4f} < {experiment.max_growth:g}"))
    if not checks:
        return GateResult(True, "no gate", experiment.informational)
    passed = all(ok for ok, _ in checks)
    return GateResult(passed, "; ".join(msg for _, msg in checks), experiment.informational)
