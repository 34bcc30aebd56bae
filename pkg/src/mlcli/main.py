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
Command line front end.

Global flags override the config file, which overrides property defaults.
Results go to stdout as JSON; messages go to stderr.
"""

import sys
import os
import json
import argparse
import numpy as np
from typing import List, Optional, Sequence
from termcolor import colored

try:
    import mlab
    from mlkernel import Lab
except ModuleNotFoundError:
    print("mlcli: error importing one or more of \"mlab\", \"mlkernel\"", file=sys.stderr)
    print("mlcli: exiting", file=sys.stderr)
    sys.exit(1)

from mlkernel.counterexamples import FAMILIES, CounterexampleSpec, default_grid, generate, kernel_profile
from mlkernel.czdecomp import cz_decompose, cz_report
from mlkernel.dyadic import DyadicSet
from mlkernel.grid import GridSignal, Symbol
from mlkernel.multipliers import apply_multiplier
from mlkernel.norms import (LorentzParams, dyadic_l12, l1_norm, lorentz_norm, lp_norm, orlicz_llogr,
    s_variation, weak_l1)
from mlkernel.signalio import SignalWriter, load, write_csv, write_signal
from mlkernel.squarefn import continuous_squarefn, redistribute_char, squarefn_report, verify_char

VERSION = mlab.__version__
NORMS = ("lorentz", "orlicz", "weak-l1", "dyadic-l12", "s-variation", "lp", "l1")


def _region(text: Optional[str]):
    if text is None:
        return None
    a, b = (float(v) for v in text.split(","))
    return (a, b)


def _points(text: Optional[str]) -> Optional[List[float]]:
    if text is None:
        return None
    if ".." in text:
        lo, hi = text.split("..")
        return [float(v) for v in range(int(lo), int(hi)+1)]
    return [float(v) for v in text.split(",") if v.strip()]


def _emit(data) -> None:
    if isinstance(data, float):
        print(repr(data))
    else:
        print(json.dumps(data, indent=4, default=float))


def _signal(path: str) -> GridSignal:
    data = load(path)
    if not isinstance(data, GridSignal):
        raise ValueError(f"{path} holds a symbol, expected a signal")
    return data


def _write(path: str, data) -> None:
    if path.lower().endswith(".csv"):
        write_csv(path, data)
    else:
        write_signal(path, data)


def cmd_apply(lab: Lab, args) -> dict:
    f = _signal(args.signal)
    if args.symbol is not None:
        m = load(args.symbol)
        if not isinstance(m, Symbol):
            raise ValueError(f"{args.symbol} holds a signal, expected a symbol")
    else:
        m = generate(CounterexampleSpec(args.family, args.N), f.config, lab.psi_spec()).symbol
    out = apply_multiplier(m, f)
    if args.out is not None:
        _write(args.out, out)
    return {"schema": "1", "l1": l1_norm(out), "l2": lp_norm(out, 2), "weak_l1": weak_l1(out)}


def cmd_norm(lab: Lab, args) -> float:
    f = _signal(args.signal)
    region = _region(args.region)
    space = args.space
    if space == "lorentz":
        return lorentz_norm(f, LorentzParams(args.p, args.q), region)
    if space == "orlicz":
        return orlicz_llogr(f, args.r, region)
    if space == "weak-l1":
        return weak_l1(f, region)
    if space == "dyadic-l12":
        return dyadic_l12(f, region)
    if space == "s-variation":
        return s_variation(f.samples[:, f.region_mask(region)], args.s)
    if space == "lp":
        return lp_norm(f, args.p, region)
    return l1_norm(f, region)


def cmd_redistribute(lab: Lab, args) -> dict:
    E = DyadicSet.from_hex(args.set, args.level)
    eps = lab.props.squarefn.eps if args.eps is None else args.eps
    out = redistribute_char(E, eps)
    rep = verify_char(E, out)
    intervals = {}
    for j in range(out.level + 1):
        for k in range(2**j):
            values = out.rows[j, k * 2**(out.level-j):(k+1) * 2**(out.level-j)]
            if np.any(values > 0):
                intervals[f"{j}:{k}"] = [float(v) for v in values]
    return {
        "schema": "1",
        "level": out.level,
        "eps": eps,
        "measure": E.measure,
        "intervals": intervals,
        "mean2_max_slack": rep.mean2_slack,
        "square2_ratio": rep.ratio,
        "combination_error": rep.combination_error,
        "stopping": [[J.level, J.index] for J in out.stopping],
    }


def cmd_squarefn(lab: Lab, args) -> dict:
    f = _signal(args.signal)
    nodes = lab.props.squarefn.theta_nodes if args.theta_nodes is None else args.theta_nodes
    out = continuous_squarefn(f, nodes, lab.props.squarefn.eps)
    rep = squarefn_report(f, out, **lab.phi_options())
    if args.out is not None:
        with SignalWriter(args.out) as writer:
            for Fj in out.F.values():
                writer.write(Fj)
    return {
        "schema": "1",
        "j": list(out.F),
        "theta_nodes": nodes,
        "support_constant": rep.support_constant,
        "per_j": {str(j): v for j, v in rep.per_j.items()},
        "norm": rep.norm,
    }


def cmd_czd(lab: Lab, args) -> dict:
    F = _signal(args.signal)
    out = cz_decompose(F, args.height)
    rep = cz_report(F, out)
    h = F.config.h
    return {
        "schema": "1",
        "height": out.height,
        "intervals": [[p.a, p.b] for p in out.bad],
        "masses": [float(np.sum(np.sqrt(np.sum(np.abs(p.values)**2, axis=0))) * h) for p in out.bad],
        "g_l2": float(np.sqrt(np.sum(out.good.magnitude()**2) * h)),
        "constants": {
            "g_sup": rep.g_sup,
            "good": rep.good_constant,
            "bad": rep.bad_constant,
            "measure": rep.measure_constant,
            "moment_error": rep.moment_error,
            "reconstruction_error": rep.reconstruction_error,
        },
        "passed": rep.passed,
    }


def cmd_counterexample(lab: Lab, args) -> dict:
    spec = CounterexampleSpec(args.family, args.N, args.q, args.alpha, args.beta, lab.props.grid.seed,
        args.literal)
    config = lab.grid_config() if args.grid_L is not None else default_grid(spec.family, spec.N, spec.literal)
    ce = generate(spec, config, lab.psi_spec())
    prof = kernel_profile(ce.symbol, spec.family, spec.N)
    report = {
        "schema": "1",
        "family": spec.family,
        "N": spec.N,
        "grid": {"L": config.L, "h": config.h},
        "channels": ce.symbol.channels,
        "sup": ce.symbol.sup(),
        "diagnostics": prof.diagnostics,
        "notes": ce.notes,
    }
    if args.out is not None:
        write_signal(args.out + "_symbol.bin", ce.symbol)
        if ce.companion is not None:
            write_signal(args.out + "_companion.bin", ce.companion)
        with open(args.out + ".json", "w") as file:
            json.dump(report, file, indent=4)
    return report


def cmd_sweep(lab: Lab, args) -> dict:
    lab.experiment(args.experiment)
    folder = lab.props.sweep.out
    os.makedirs(folder, exist_ok=True)
    report = lab.run_sweep(args.experiment, _points(args.points), out=os.path.join(folder, args.experiment))
    data = report.to_json()
    del data["rows"]
    return data


def cmd_verify(lab: Lab, args) -> dict:
    entries = lab.verify(args.suite, lab.props.sweep.out)
    for e in entries:
        status = colored("PASS", "green") if e.passed else colored("FAIL", "red")
        if e.report.gate.informational:
            status = colored("INFO", "yellow")
        print(f"{status}  {e.experiment:24s} {e.report.gate.message}", file=sys.stderr)
    return {
        "schema": "1",
        "suite": args.suite,
        "passed": all(e.passed for e in entries),
        "experiments": {e.experiment: {"passed": e.passed, "gate": e.report.gate.message, "pinned": e.pinned}
            for e in entries},
    }


def cmd_list(lab: Lab, args) -> dict:
    return {
        "experiments": {name: exp.description for name, exp in lab.experiments},
        "suites": {name: list(cls.experiments) for name, cls in lab.suites},
    }


COMMANDS = {
    "apply": cmd_apply,
    "norm": cmd_norm,
    "redistribute": cmd_redistribute,
    "squarefn": cmd_squarefn,
    "czd": cmd_czd,
    "counterexample": cmd_counterexample,
    "sweep": cmd_sweep,
    "verify": cmd_verify,
    "list": cmd_list,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mlab", description="Multiplier Lab: Fourier multipliers near L1.")
    parser.add_argument("--version", action="version", version=f"mlab {VERSION}")
    parser.add_argument("--config", help="Config file of group.name = value lines.")
    parser.add_argument("--grid-L", dest="grid_L", type=int, help="Grid exponent, 2^L samples.")
    parser.add_argument("--spacing", help="Sample spacing, e.g. 1/64.")
    parser.add_argument("--seed", type=int, help="Random seed.")
    parser.add_argument("--out", help="Output file, prefix or folder (per subcommand).")
    parser.add_argument("--workers", type=int, help="Sweep worker threads.")
    parser.add_argument("--option", dest="options", action="append", default=[], metavar="KEY=VALUE",
        help="Set any option, e.g. --option squarefn.eps=2**-10.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("apply", help="Apply a multiplier to a signal.")
    p.add_argument("--signal", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--symbol", help="Symbol file, binary or CSV.")
    group.add_argument("--family", choices=FAMILIES)
    p.add_argument("--N", type=int, default=1)

    p = sub.add_parser("norm", help="Evaluate a norm of a signal.")
    p.add_argument("--signal", required=True)
    p.add_argument("--space", choices=NORMS, default="lorentz")
    p.add_argument("--p", type=float, default=1.0)
    p.add_argument("--q", type=float, default=float("inf"))
    p.add_argument("--r", type=float, default=0.5)
    p.add_argument("--s", type=float, default=2.0)
    p.add_argument("--region", help="a,b")

    p = sub.add_parser("redistribute", help="Redistribute the Haar mass of a dyadic set.")
    p.add_argument("--set", dest="set", required=True, help="Hex bitmask, bit k is interval k.")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--eps", type=float)

    p = sub.add_parser("squarefn", help="Continuous square function of a signal.")
    p.add_argument("--signal", required=True)
    p.add_argument("--theta-nodes", dest="theta_nodes", type=int)

    p = sub.add_parser("czd", help="Calderon-Zygmund decomposition of a signal.")
    p.add_argument("--signal", required=True)
    p.add_argument("--height", type=float, required=True)

    p = sub.add_parser("counterexample", help="Generate a sharpness family.")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--N", type=int, default=1)
    p.add_argument("--q", type=float, default=2.0)
    p.add_argument("--alpha", type=float, default=0.5)
    p.add_argument("--beta", type=float, default=0.25)
    p.add_argument("--literal", action="store_true", help="Printed scale range for mTriplePrimeN.")

    p = sub.add_parser("sweep", help="Sweep an experiment.")
    p.add_argument("--experiment", required=True)
    p.add_argument("--points", help="Comma list or lo..hi range.")

    p = sub.add_parser("verify", help="Run a suite and check its gates.")
    p.add_argument("--suite", default="quick")

    sub.add_parser("list", help="List experiments and suites.")
    return parser


def configure(lab: Lab, args) -> None:
    if args.config is not None:
        lab.load_config(args.config)
    for option in args.options:
        key, sep, value = option.partition("=")
        if not sep:
            raise ValueError(f"expected KEY=VALUE, got {option}")
        lab.set_option(key.strip(), value.strip())
    if args.grid_L is not None:
        lab.props.grid.L = args.grid_L
    if args.spacing is not None:
        lab.props.grid.spacing = args.spacing
    if args.seed is not None:
        lab.props.grid.seed = args.seed
    if args.workers is not None:
        lab.props.sweep.workers = args.workers
    if args.out is not None and args.command in ("sweep", "verify"):
        lab.props.sweep.out = args.out


def main(argv: Sequence[str] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    lab = Lab()
    try:
        configure(lab, args)
        result = COMMANDS[args.command](lab, args)
        _emit(result)
    except (ValueError, OSError) as exc:
        print(colored(f"mlab: {exc}", "red"), file=sys.stderr)
        return 1
    # failed gates
    if args.command == "verify" and not result["passed"]:
        return 2
    return 0
