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

import os
import sys
import hashlib
import numpy as np
from typing import Any, Dict
from termcolor import colored

QUIET = os.environ.get("MLAB_QUIET", "") == "1"

_LEVEL_COLORS = {
    "info": None,
    "ok": "green",
    "warn": "yellow",
    "error": "red",
}


class GridError(ValueError):
    """Invalid grid, or two objects on different grids."""

class BandOverflowError(ValueError):
    """Requested frequency band beyond the grid's Nyquist frequency."""

class ResolutionError(ValueError):
    """The grid does not resolve a required scale."""

class SupportError(ValueError):
    """A support precondition is violated."""

class OverlapError(ValueError):
    """An interval family overlaps more than its declared bound."""


class Namespace:
    """
    You can do ``namespace.a = 1`` or ``namespace.a`` to set and
    access any value.
    """
    _items: Dict[str, Any]

    def __init__(self) -> None:
        object.__setattr__(self, "_items", {})

    def __getattr__(self, name: str) -> Any:
        if name in self._items:
            return self._items[name]
        else:
            raise AttributeError(f"Namespace has no attribute {name}")

    def __setattr__(self, name: str, value: Any) -> None:
        self._items[name] = value

    def __contains__(self, name: str) -> bool:
        return name in self._items

    def __iter__(self):
        return iter(self._items.items())


def log(msg: str, level: str = "info") -> None:
    """
    Print a kernel message to stderr.

    :param msg: Message.
    :param level: One of ``info``, ``ok``, ``warn``, ``error``.
    """
    if QUIET and level == "info":
        return
    text = f"mlkernel: {msg}"
    color = _LEVEL_COLORS.get(level)
    if color is not None:
        text = colored(text, color)
    print(text, file=sys.stderr)


def array_hash(arr: np.ndarray) -> str:
    """Short stable hash of an array's bytes, used in fingerprints."""
    data = np.ascontiguousarray(arr, dtype=np.float64).tobytes()
    return hashlib.sha256(data).hexdigest()[:16]
