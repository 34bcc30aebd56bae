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

import numpy as np
import pytest
from mlkernel.grid import GridConfig, GridSignal, Symbol
from mlkernel.signalio import SignalWriter, load, read_csv, read_signal, read_signals, write_csv, write_signal
from mlkernel.utils import GridError


def test_binary_records(tmp_path, rng):
    config = GridConfig(5, 1/4)
    f = GridSignal(config, rng.normal(size=(2, 32)) + 1j*rng.normal(size=(2, 32)), -4.0)
    m = Symbol(config, rng.normal(size=32))
    path = str(tmp_path / "data.bin")
    with SignalWriter(path) as writer:
        assert writer.write(f) == 1
        assert writer.write(m) == 2
        assert writer.tell() == 2

    records = read_signals(path)
    assert isinstance(records[0], GridSignal)
    assert isinstance(records[1], Symbol)
    assert records[0].origin == -4.0
    assert np.array_equal(records[0].samples, f.samples)
    assert np.array_equal(records[1].values, m.values)


def test_writer_outside_with(tmp_path):
    writer = SignalWriter(str(tmp_path / "x.bin"))
    with pytest.raises(AssertionError):
        writer.write(GridSignal.zeros(GridConfig(2, 1.0)))


def test_unwritable(tmp_path):
    with pytest.raises(ValueError):
        write_signal(str(tmp_path / "missing" / "x.bin"), GridSignal.zeros(GridConfig(2, 1.0)))


def test_truncated(tmp_path):
    path = tmp_path / "short.bin"
    write_signal(str(path), GridSignal.zeros(GridConfig(4, 1.0)))
    path.write_bytes(path.read_bytes()[:-8])
    with pytest.raises(ValueError):
        read_signal(str(path))
    empty = tmp_path / "empty.bin"
    empty.write_bytes(b"")
    with pytest.raises(ValueError):
        read_signal(str(empty))


def test_csv(tmp_path, rng):
    config = GridConfig(4, 1/8)
    f = GridSignal(config, rng.normal(size=16) + 1j*rng.normal(size=16), 0.5)
    path = str(tmp_path / "f.csv")
    write_csv(path, f)
    with open(path) as file:
        assert file.readline().strip() == "index,x,re0,im0"
    back = load(path)
    assert back.config == config
    assert back.origin == 0.5
    assert np.array_equal(back.samples, f.samples)


def test_csv_needs_power_of_two(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("index,x,re0,im0\n0,0.0,1.0,0.0\n1,0.5,1.0,0.0\n2,1.0,1.0,0.0\n")
    with pytest.raises(GridError):
        read_csv(str(path))


def test_csv_keeps_symbols(tmp_path, rng):
    config = GridConfig(4, 1/8)
    m = Symbol(config, rng.normal(size=(2, 16)) + 1j*rng.normal(size=(2, 16)))
    path = str(tmp_path / "m.csv")
    write_csv(path, m)
    with open(path) as file:
        assert file.readline().strip() == "index,xi,re0,im0,re1,im1"
    back = read_csv(path)
    assert isinstance(back, Symbol)
    assert back.config == config
    assert np.array_equal(back.values, m.values)


def test_csv_needs_axis_column(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("index,t,re0,im0\n0,0.0,1.0,0.0\n1,0.5,1.0,0.0\n")
    with pytest.raises(GridError):
        read_csv(str(path))
