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
Parameter sweeps: run an experiment over a list of points, fit the log-log
slope, evaluate its gate and write CSV + JSON reports.
"""

__all__ = (
    "SweepSpec",
    "SweepRow",
    "SweepReport",
    "run_sweep",
    "write_csv",
    "write_json",
)

import os
import csv
import json
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, TYPE_CHECKING, Tuple
from tqdm.contrib.concurrent import thread_map
from .experiments import GateResult, SlopeFit, evaluate_gate, fit_slope
from .utils import QUIET, log

Lab = None
if TYPE_CHECKING:
    from .lab import Lab

CSV_COLUMNS = ("experiment", "param_name", "param_value", "quantity", "value", "grid_n", "seed")


@dataclass(frozen=True)
class SweepSpec:
    """
    :param out: Path prefix; ``<out>.csv`` and ``<out>.json`` are written.
        ``None`` writes nothing.
    """
    experiment: str
    points: Tuple[float, ...]
    seed: int = 0
    out: Optional[str] = None
    workers: int = 1


@dataclass(frozen=True)
class SweepRow:
    experiment: str
    param_name: str
    param_value: float
    quantity: str
    value: float
    grid_n: int
    seed: int


@dataclass(frozen=True)
class SweepReport:
    experiment: str
    param_name: str
    quantity: str
    rows: Tuple[SweepRow, ...]
    fit: Optional[SlopeFit]
    gate: GateResult
    fingerprint: Dict[str, Any] = field(default_factory=dict)

    def values(self, quantity: str = None) -> List[float]:
        quantity = self.quantity if quantity is None else quantity
        return [r.value for r in self.rows if r.quantity == quantity]

    def to_json(self) -> Dict[str, Any]:
        return {
            "schema": "1",
            "experiment": self.experiment,
            "param_name": self.param_name,
            "quantity": self.quantity,
            "fit": None if self.fit is None else {
                "slope": self.fit.slope, "intercept": self.fit.intercept, "r2": self.fit.r2},
            "gate": {"passed": self.gate.passed, "message": self.gate.message,
                "informational": self.gate.informational},
            "fingerprint": self.fingerprint,
            "rows": [r.__dict__ for r in self.rows],
        }


def _check_writable(prefix: str) -> None:
    folder = os.path.dirname(os.path.abspath(prefix))
    if not os.path.isdir(folder) or not os.access(folder, os.W_OK):
        raise ValueError(f"cannot write reports under {folder}")


def write_csv(path: str, rows: Sequence[SweepRow]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as file:
        writer = csv.writer(file, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in rows:
            writer.writerow((r.experiment, r.param_name, repr(float(r.param_value)), r.quantity,
                repr(float(r.value)), r.grid_n, r.seed))


def write_json(path: str, report: SweepReport) -> None:
    with open(path, "w", encoding="utf-8") as file:
        json.dump(report.to_json(), file, indent=4)
        file.write("\n")


def run_sweep(lab: "Lab", spec: SweepSpec) -> SweepReport:
    """
    Execute ``spec``. Points run on a thread pool of ``spec.workers``; rows
    come back in parameter order regardless of completion order.

    :raises ValueError: Empty grid, unknown experiment or unwritable output.
    """
    if not spec.points:
        raise ValueError("parameter grid is empty")
    if spec.experiment not in lab.experiments:
        raise ValueError(f"unknown experiment {spec.experiment}")
    if spec.out is not None:
        _check_writable(spec.out)

    experiment = getattr(lab.experiments, spec.experiment)
    log(f"sweep {spec.experiment} over {len(spec.points)} points")
    results = thread_map(lambda v: experiment(v, spec.seed), spec.points,
        max_workers=max(1, spec.workers), desc=f"Sweeping {spec.experiment}", disable=QUIET)

    rows = []
    for value, result in zip(spec.points, results):
        result = dict(result)
        grid_n = int(result.pop("grid_n", 0))
        names = [experiment.quantity] + sorted(k for k in result if k != experiment.quantity)
        for name in names:
            rows.append(SweepRow(spec.experiment, experiment.param_name, float(value), name,
                float(result[name]), grid_n, spec.seed))

    main = [r.value for r in rows if r.quantity == experiment.quantity]
    fit = None
    if len(main) >= 2 and all(v > 0 and math.isfinite(v) for v in main):
        fit = fit_slope([experiment.slope_x(v) for v in spec.points], main, log_x=False)
    gate = evaluate_gate(experiment, main, fit)

    report = SweepReport(spec.experiment, experiment.param_name, experiment.quantity, tuple(rows),
        fit, gate, lab.fingerprint())
    if spec.out is not None:
        write_csv(spec.out + ".csv", rows)
        write_json(spec.out + ".json", report)
        log(f"wrote {spec.out}.csv and {spec.out}.json", "ok")
    return report
