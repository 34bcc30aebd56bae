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

__all__ = (
    "Lab",
    "VerifyEntry",
)

import os
import numpy as np
import mlab
from dataclasses import dataclass
from typing import Any, List, Optional, Sequence, Type
from mlab.types import Baselines, Experiment, PropertyGroup, Suite
from mlab.utils import get
from .bumps import ETA, PsiSpec, bump_values
from .grid import GridConfig
from .sweep import SweepReport, SweepSpec, run_sweep
from .utils import Namespace, array_hash, log


@dataclass(frozen=True)
class VerifyEntry:
    experiment: str
    report: SweepReport
    pinned: Optional[bool]

    @property
    def passed(self) -> bool:
        gate = self.report.gate
        return (gate.passed or gate.informational) and self.pinned is not False


class Lab:
    """
    This class holds all the settings of a session.
    It is also used like a "context" for experiments.

    Attributes users can use:

    * ``props``: Property groups, ``lab.props.<group>.<name>``.
    * ``load_config(path)``: Read ``group.name = value`` lines.
    * ``set_option(key, value)``: Set ``group.name``.
    * ``run_sweep(idname, points)``: Sweep an experiment.
    * ``verify(suite)``: Run a suite and check its gates.

    Attributes experiments can use:

    * ``grid_config()``: Grid from ``props.grid``.
    * ``rng(seed)``: Seeded generator.
    * ``phi_options()``, ``psi_spec()``: Kernel and bump settings.
    * ``fingerprint()``: Settings that numerical results depend on.
    """
    props: Namespace
    experiments: Namespace
    suites: Namespace

    def __init__(self) -> None:
        self._add_callbacks()

    def load_config(self, path: str) -> None:
        """
        Read a config file of ``group.name = value`` lines; ``#`` starts a
        comment.

        :raises ValueError: Malformed line or unknown key.
        """
        with open(path, "r") as fp:
            for num, line in enumerate(fp, start=1):
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise ValueError(f"{path}:{num}: expected group.name = value, got {line!r}")
                key, value = (s.strip() for s in line.split("=", 1))
                self.set_option(key, value)

    def set_option(self, key: str, value: Any) -> None:
        """
        Set a property by its dotted key, e.g. ``squarefn.eps``.
        """
        group, _, name = key.partition(".")
        if not name or group not in self.props:
            raise ValueError(f"unknown option {key}")
        getattr(self.props, group)._get_prop(name)
        setattr(getattr(self.props, group), name, value)

    def grid_config(self) -> GridConfig:
        return GridConfig(self.props.grid.L, self.props.grid.spacing)

    def phi_options(self) -> dict:
        """Keyword arguments for the phi kernels."""
        return {"exponent": self.props.kernel.phi_exponent, "images": self.props.kernel.phi_images}

    def psi_spec(self) -> PsiSpec:
        return PsiSpec(self.props.bump.psi_radius, self.props.bump.smoothness_order)

    def rng(self, seed: int = None) -> np.random.Generator:
        return np.random.default_rng(self.props.grid.seed if seed is None else seed)

    def fingerprint(self) -> dict:
        eta = bump_values(ETA, np.linspace(0, 5, 4097))
        return {
            "eta_hash": array_hash(eta),
            "eps": self.props.squarefn.eps,
            "grid": {"L": self.props.grid.L, "h": self.props.grid.spacing},
            "seed": self.props.grid.seed,
            "phi_exponent": self.props.kernel.phi_exponent,
            "psi_radius": self.props.bump.psi_radius,
            "smoothness_order": self.props.bump.smoothness_order,
            "version": mlab.__version__,
        }

    def experiment(self, idname: str) -> Experiment:
        if idname not in self.experiments:
            raise ValueError(f"unknown experiment {idname}")
        return getattr(self.experiments, idname)

    def run_sweep(self, idname: str, points: Sequence[float] = None, seed: int = None,
            out: str = None, workers: int = None) -> SweepReport:
        """
        Calls ``mlkernel.sweep.run_sweep``. Missing arguments come from the
        experiment's default points and ``props.grid`` / ``props.sweep``.
        """
        exp = self.experiment(idname)
        points = tuple(exp.default_points if points is None else points)
        seed = self.props.grid.seed if seed is None else seed
        workers = self.props.sweep.workers if workers is None else workers
        return run_sweep(self, SweepSpec(idname, points, seed, out, workers))

    def verify(self, suite: str, out_dir: str = None) -> List[VerifyEntry]:
        """
        Run every experiment of a suite. Experiments without a gate are
        compared against their pinned baseline (pinned on first run).
        """
        cls = get(mlab.utils.registered("suite"), suite)
        baselines = Baselines(self.props.verify.baseline_dir, self.fingerprint())
        tolerance = self.props.verify.pin_tolerance

        entries = []
        for idname in cls.experiments:
            out = None if out_dir is None else os.path.join(out_dir, idname)
            if out_dir is not None:
                os.makedirs(out_dir, exist_ok=True)
            report = self.run_sweep(idname, out=out)
            pinned = None
            if report.gate.message == "no gate":
                values = report.values()
                pinned = baselines.compare(f"{idname}.max", max(values), tolerance)
            entry = VerifyEntry(idname, report, pinned)
            log(f"{idname}: {report.gate.message}", "ok" if entry.passed else "error")
            entries.append(entry)
        return entries

    def _add_callbacks(self) -> None:
        """
        Adds callbacks. Internal use.
        """
        self.props = Namespace()
        self.experiments = Namespace()
        self.suites = Namespace()

        mlab.utils.add_callback(self._add_pgroup, ("pgroup",))
        mlab.utils.add_callback(self._add_experiment, ("experiment",))
        mlab.utils.add_callback(self._add_suite, ("suite",))

        for cls in mlab.utils.registered("pgroup"):
            self._add_pgroup(cls)
        for cls in mlab.utils.registered("experiment"):
            self._add_experiment(cls)
        for cls in mlab.utils.registered("suite"):
            self._add_suite(cls)

    def _add_pgroup(self, cls: Type[PropertyGroup]) -> None:
        """
        Callback function to add PropertyGroup props to internal list.
        """
        setattr(self.props, cls.idname, cls())

    def _add_experiment(self, cls: Type[Experiment]) -> None:
        setattr(self.experiments, cls.idname, cls(self))

    def _add_suite(self, cls: Type[Suite]) -> None:
        setattr(self.suites, cls.idname, cls)
