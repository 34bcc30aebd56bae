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

import json
import os
import numpy as np
import pytest
import mlab
from mlcli.main import build_parser, main
from mlkernel.grid import GridConfig, GridSignal, Symbol
from mlkernel.signalio import read_signals, write_csv, write_signal


class CLI_ET_Square(mlab.Experiment):
    idname = "cli_square"
    label = "Square"
    description = "value**2, slope 2"
    default_points = (1, 2, 4)
    prediction = 2.0
    tolerance = 0.01

    def measure(self, lab, value, seed):
        return {"value": value**2}


class CLI_ET_Linear(CLI_ET_Square):
    idname = "cli_linear"
    description = "value, predicted slope 2"

    def measure(self, lab, value, seed):
        return {"value": value}


class CLI_ST_Pass(mlab.Suite):
    idname = "cli_pass"
    experiments = ("cli_square",)


class CLI_ST_Fail(mlab.Suite):
    idname = "cli_fail"
    experiments = ("cli_square", "cli_linear")


for cls in (CLI_ET_Square, CLI_ET_Linear, CLI_ST_Pass, CLI_ST_Fail):
    mlab.utils.register_class(cls)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, (json.loads(captured.out) if code != 1 else None), captured.err


@pytest.fixture
def spike_file(tmp_path):
    values = np.zeros(64)
    values[0] = 64
    path = str(tmp_path / "spike.bin")
    write_signal(path, GridSignal(GridConfig(6, 1/64), values))
    return path


def test_parser_needs_command():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])


def test_list(capsys):
    code, data, _ = run(capsys, "list")
    assert code == 0
    assert "char_exact" in data["experiments"]
    assert "basic_inequality" in data["suites"]["quick"]


def test_norm(capsys, spike_file):
    code, data, _ = run(capsys, "norm", "--signal", spike_file, "--space", "l1")
    assert code == 0
    assert data == pytest.approx(1.0)
    code, data, _ = run(capsys, "norm", "--signal", spike_file, "--space", "lp", "--p", "2")
    assert data == pytest.approx(8.0)
    code, data, _ = run(capsys, "norm", "--signal", spike_file, "--space", "weak-l1")
    assert data == pytest.approx(1.0)
    code, data, _ = run(capsys, "norm", "--signal", spike_file, "--space", "s-variation", "--s", "1")
    assert data == pytest.approx(64.0)


def test_czd(capsys, spike_file):
    code, data, _ = run(capsys, "czd", "--signal", spike_file, "--height", "2")
    assert code == 0
    assert data["intervals"] == [[0.0, 0.25]]
    assert data["passed"]
    assert data["masses"][0] == pytest.approx(1.875)


def test_redistribute(capsys):
    code, data, _ = run(capsys, "redistribute", "--set", "0x1", "--level", "10")
    assert code == 0
    assert data["schema"] == "1"
    assert data["measure"] == 2**-10
    assert data["mean2_max_slack"] <= 1e-12
    assert "0:0" in data["intervals"]
    assert data["stopping"]


def test_redistribute_eps_override(capsys):
    code, data, _ = run(capsys, "--option", "squarefn.eps=0.25", "redistribute", "--set", "f", "--level", "4")
    assert code == 0
    assert data["eps"] == 0.25


def test_counterexample(capsys, tmp_path):
    prefix = str(tmp_path / "hilbert")
    code, data, _ = run(capsys, "--out", prefix, "counterexample", "--family", "hilbertTest", "--N", "3")
    assert code == 0
    assert data["family"] == "hilbertTest"
    assert set(data["diagnostics"]) >= {"sup", "l12", "weak_l1"}
    assert os.path.isfile(prefix + "_symbol.bin")
    assert len(read_signals(prefix + "_companion.bin")) == 1
    with open(prefix + ".json") as file:
        assert json.load(file)["family"] == "hilbertTest"


def test_apply(capsys, tmp_path):
    config = GridConfig(6, 1/16)
    f = GridSignal(config, np.cos(2*np.pi*config.positions()))
    path = str(tmp_path / "f.bin")
    write_signal(path, f)
    out = str(tmp_path / "hf.csv")
    code, data, _ = run(capsys, "--out", out, "apply", "--signal", path, "--family", "hilbertTest")
    assert code == 0
    assert data["l2"] == pytest.approx(2**-0.5 * 2, rel=1e-9)
    assert os.path.isfile(out)


def test_apply_csv_symbol(capsys, tmp_path):
    config = GridConfig(6, 1/16)
    f = GridSignal(config, np.cos(2*np.pi*config.positions()))
    signal = str(tmp_path / "f.bin")
    write_signal(signal, f)
    symbol = str(tmp_path / "m.csv")
    write_csv(symbol, Symbol.constant(config, 3.0))
    code, data, _ = run(capsys, "apply", "--signal", signal, "--symbol", symbol)
    assert code == 0
    assert data["l2"] == pytest.approx(3 * 2**-0.5 * 2, rel=1e-9)


def test_sweep(capsys, tmp_path):
    folder = str(tmp_path / "results")
    code, data, _ = run(capsys, "--out", folder, "sweep", "--experiment", "normal_theta_min", "--points", "0,2")
    assert code == 0
    assert data["gate"]["passed"]
    assert os.path.isfile(os.path.join(folder, "normal_theta_min.csv"))


def test_errors(capsys, tmp_path):
    code, _, err = run(capsys, "norm", "--signal", str(tmp_path / "missing.bin"))
    assert code == 1
    assert "mlab:" in err
    code, _, _ = run(capsys, "--option", "nogroup", "list")
    assert code == 1
    code, _, _ = run(capsys, "--out", str(tmp_path), "sweep", "--experiment", "no_such_experiment", "--points", "1")
    assert code == 1
    code, _, _ = run(capsys, "redistribute", "--set", "zz", "--level", "3")
    assert code == 1


def test_verify(capsys, tmp_path):
    out = str(tmp_path / "reports")
    cache = f"verify.baseline_dir={tmp_path / 'cache'}"
    code, data, err = run(capsys, "--out", out, "--option", cache, "verify", "--suite", "cli_pass")
    assert code == 0
    assert data["passed"]
    assert data["experiments"]["cli_square"]["pinned"] is None
    assert "PASS" in err
    assert os.path.isfile(os.path.join(out, "cli_square.csv"))

    code, data, err = run(capsys, "--out", out, "--option", cache, "verify", "--suite", "cli_fail")
    assert code == 2
    assert not data["passed"]
    assert not data["experiments"]["cli_linear"]["passed"]
    assert "FAIL" in err
