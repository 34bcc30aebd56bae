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
Signal and symbol files.

Binary records are a header of five little-endian 64-bit fields
``L:int64, h:float64, d:int64, origin:float64, domain:int64`` (0 spatial
signal, 1 frequency symbol) followed by ``d*2^L`` row-major complex samples
as float64 pairs. A file may hold several records back to back.

CSV files have one row per sample with columns ``index,x,re0,im0,...``;
``x`` is the frequency for symbols.
"""

__all__ = (
    "SignalWriter",
    "write_signal",
    "read_signals",
    "read_signal",
    "write_csv",
    "read_csv",
    "load",
)

import csv
import math
import numpy as np
from typing import Iterator, List, Union
from .grid import GridConfig, GridSignal, Symbol
from .utils import GridError

Data = Union[GridSignal, Symbol]

HEADER = np.dtype([("L", "<i8"), ("h", "<f8"), ("d", "<i8"), ("origin", "<f8"), ("domain", "<i8")])
SAMPLE = np.dtype("<c16")


class SignalWriter:
    """Writes signal records to a binary file."""
    path: str

    def __init__(self, path: str) -> None:
        self.path = path
        self._entered = False
        self._count = 0

    def __enter__(self):
        try:
            self._file = open(self.path, "wb")
        except OSError as exc:
            raise ValueError(f"cannot write {self.path}: {exc.strerror}") from None
        self._entered = True
        return self

    def __exit__(self, *args):
        self._file.close()
        self._entered = False

    def _check_entered(self):
        assert self._entered, "SignalWriter can only be used in a \"with\" statement."

    def tell(self) -> int:
        """
        Return number of records written.
        """
        self._check_entered()
        return self._count

    def write(self, data: Data) -> int:
        """
        Write a signal or symbol. Return the total number of records written.
        """
        self._check_entered()
        if isinstance(data, Symbol):
            samples, origin, domain = data.values, 0.0, 1
        else:
            samples, origin, domain = data.samples, data.origin, 0
        header = np.array([(data.config.L, data.config.h, samples.shape[0], origin, domain)], dtype=HEADER)
        self._file.write(header.tobytes())
        self._file.write(np.ascontiguousarray(samples, dtype=SAMPLE).tobytes())
        self._count += 1
        return self._count


def write_signal(path: str, data: Data) -> None:
    with SignalWriter(path) as writer:
        writer.write(data)


def _records(raw: bytes) -> Iterator[Data]:
    pos = 0
    while pos < len(raw):
        if len(raw) - pos < HEADER.itemsize:
            raise ValueError(f"truncated header at byte {pos}")
        head = np.frombuffer(raw, HEADER, count=1, offset=pos)[0]
        pos += HEADER.itemsize
        config = GridConfig(int(head["L"]), float(head["h"]))
        d = int(head["d"])
        count = d * config.n
        if d < 1 or len(raw) - pos < count * SAMPLE.itemsize:
            raise ValueError(f"record at byte {pos} declares {d} channels of {config.n} samples, file too short")
        samples = np.frombuffer(raw, SAMPLE, count=count, offset=pos).reshape(d, config.n)
        pos += count * SAMPLE.itemsize
        if int(head["domain"]) == 1:
            yield Symbol(config, samples.copy())
        elif int(head["domain"]) == 0:
            yield GridSignal(config, samples.copy(), float(head["origin"]))
        else:
            raise ValueError(f"unknown domain flag {int(head['domain'])}")


def read_signals(path: str) -> List[Data]:
    with open(path, "rb") as file:
        return list(_records(file.read()))


def read_signal(path: str) -> Data:
    """First record of a binary file."""
    records = read_signals(path)
    if not records:
        raise ValueError(f"{path} holds no records")
    return records[0]


def write_csv(path: str, data: Data) -> None:
    if isinstance(data, Symbol):
        axis, x, values = "xi", data.xi, data.values
    else:
        axis, x, values = "x", data.x, data.samples
    header = ["index", axis]
    for c in range(values.shape[0]):
        header.extend((f"re{c}", f"im{c}"))
    with open(path, "w", newline="") as file:
        writer = csv.writer(file, lineterminator="\n")
        writer.writerow(header)
        for i in range(values.shape[1]):
            row = [i, repr(float(x[i]))]
            for c in range(values.shape[0]):
                row.extend((repr(float(values[c, i].real)), repr(float(values[c, i].imag))))
            writer.writerow(row)


def read_csv(path: str) -> Data:
    """
    Signal or symbol from CSV. The second header field says which: ``x``
    for a spatial signal, ``xi`` for a symbol. The grid is inferred from that
    column, which must hold ``2^L`` equally spaced points.
    """
    with open(path, "r", newline="") as file:
        header = next(csv.reader(file), [])
    axis = header[1].strip() if len(header) > 1 else ""
    if axis not in ("x", "xi"):
        raise GridError(f"CSV header needs an x or xi column, got {header}")
    data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    n = data.shape[0]
    L = math.log2(n) if n > 0 else 0
    if n < 2 or L != int(L):
        raise GridError(f"CSV needs 2^L rows, got {n}")
    x = data[:, 1]
    h = float(x[1] - x[0])
    if not np.allclose(np.diff(x), h, rtol=1e-9, atol=0):
        raise GridError(f"CSV {axis} column is not equally spaced")
    values = data[:, 2::2].T + 1j*data[:, 3::2].T
    if axis == "xi":
        # centered frequencies start at -n/(2T)
        T = -(n//2) / float(x[0])
        return Symbol(GridConfig(int(L), T / n), values)
    return GridSignal(GridConfig(int(L), h), values, float(x[0]))


def load(path: str) -> Data:
    """CSV by extension, binary otherwise."""
    if path.lower().endswith(".csv"):
        return read_csv(path)
    return read_signal(path)
