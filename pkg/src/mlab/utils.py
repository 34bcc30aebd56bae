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
Registry of property groups, experiments and suites.

Add-ons call ``register_class`` on import; every ``Lab`` listens through
callbacks, so a class registered after a lab was created still reaches it.
"""

__all__ = (
    "KINDS",
    "register_class",
    "add_callback",
    "registered",
    "get",
)

from typing import Any, Callable, Dict, List, Sequence, Type
from .types import Experiment, PropertyGroup, Suite

KINDS = {
    "pgroup": PropertyGroup,
    "experiment": Experiment,
    "suite": Suite,
}

_classes: Dict[str, List[Type]] = {kind: [] for kind in KINDS}
_callbacks: Dict[str, List[Callable]] = {kind: [] for kind in KINDS}


def _kind(cls: Type) -> str:
    for kind, base in KINDS.items():
        if isinstance(cls, type) and issubclass(cls, base):
            return kind
    raise ValueError(f"Cannot register {cls}")


def register_class(cls: Type) -> None:
    """
    Register a class to "apply" it to the kernel.
    Registering the same class twice is a no-op.

    :raises ValueError: Not an API class, or another class of the same kind
        already has its idname.
    """
    kind = _kind(cls)
    if cls in _classes[kind]:
        return
    for other in _classes[kind]:
        if other.idname == cls.idname:
            raise ValueError(f"{kind} idname {cls.idname} is taken by {other.__name__}")

    _classes[kind].append(cls)
    for func in _callbacks[kind]:
        func(cls)


def add_callback(func: Callable, classes: Sequence[str]) -> None:
    """
    Add a callback function when a class is registered.
    The function will be passed one argument, the class.

    :param func: Function to call.
    :param classes: Kinds to listen for, keys of ``KINDS``:
        ``"pgroup"``, ``"experiment"`` or ``"suite"``.
    """
    for kind in classes:
        kind = kind.lower()
        if kind not in KINDS:
            raise ValueError(f"Unknown class kind {kind}")
        _callbacks[kind].append(func)


def registered(kind: str) -> List[Type]:
    """Registered classes of one kind, in registration order."""
    return list(_classes[kind])


def get(objs: Sequence[Any], idname: str) -> Any:
    """
    Return the object in ``objs`` with idname ``idname``.
    """
    for o in objs:
        if o.idname == idname:
            return o
    raise ValueError(f"No object with idname {idname}")
