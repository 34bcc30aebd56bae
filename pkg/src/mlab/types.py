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
    "PropertyGroup",
    "Experiment",
    "Suite",
    "Baselines",
)

import os
import copy
import json
import numpy as np
from typing import Any, Dict, Optional, Sequence, TYPE_CHECKING
from .props import Property

Lab = None
if TYPE_CHECKING:
    from mlkernel import Lab


class PropertyGroup:
    """
    A collection of Properties.

    When creating your own PropertyGroup, you will inherit a class from
    this base class. Then, define:

    * ``idname``: The unique idname of this property group.
    * properties: Define each property as a static attribute (shown below).

    .. code-block:: py

        class MyProps(mlab.PropertyGroup):
            prop1 = mlab.IntProp(name="hi", default=3)

    Each instance owns copies of the class-level properties, so two labs
    never share values.
    """
    idname: str

    def __init__(self) -> None:
        for name in dir(type(self)):
            attr = getattr(type(self), name)
            if isinstance(attr, Property):
                object.__setattr__(self, name, copy.deepcopy(attr))

    def __getattribute__(self, name: str) -> Any:
        attr = object.__getattribute__(self, name)
        if isinstance(attr, Property):
            return attr.value
        else:
            return attr

    def __setattr__(self, name: str, value: Any) -> None:
        self._get_prop(name).set(value)

    def _get_prop(self, name: str) -> Property:
        """
        You can use this to bypass ``__getattribute__`` and get the
        actual Property object.
        """
        try:
            attr = object.__getattribute__(self, name)
        except AttributeError:
            raise ValueError(f"PropertyGroup {self.idname} has no property {name}") from None
        if not isinstance(attr, Property):
            raise ValueError(f"{self.idname}.{name} is not a property")
        return attr

    def names(self) -> Sequence[str]:
        """Property idnames of this group, sorted."""
        return sorted(n for n in dir(type(self)) if isinstance(getattr(type(self), n), Property))

    def values(self) -> Dict[str, Any]:
        return {n: getattr(self, n) for n in self.names()}

    def help(self, name: str) -> str:
        """
        Get help string of a property.

        :param name: Property idname.
        """
        prop = self._get_prop(name)
        return f"PropertyGroup {self.idname} help:\n" \
               f"* idname: {name}\n" \
               f"* name: {prop.name}\n" \
               f"* description: {prop.description}\n" \
               f"* type: {prop.__class__.__name__}\n" \
               f"* default: {prop.default}"


class Experiment:
    """
    One measurement family swept over a parameter.

    To create your own experiment, inherit and define:

    * ``idname``: Unique experiment idname (used by ``sweep --experiment``).
    * ``label``: Short human readable name.
    * ``description``: What is measured.
    * ``param_name``: Name of the swept parameter (``"N"``, ``"p"``, ...).
    * ``default_points``: Parameter values used when a sweep gives none.
    * ``quantity``: Name of the measured quantity the slope is fitted to.
    * ``measure(lab, value, seed)``: Returns a dict ``{quantity: value}``.
      Must be deterministic given ``(value, seed)`` and the lab's props.

    Optional acceptance gate:

    * ``prediction``, ``tolerance``: predicted log-log slope and allowed error.
    * ``max_ratio``: boundedness gate, max/min of the quantity over the sweep.
    * ``monotone``: ``"increasing"`` if the quantity must strictly increase.
    * ``min_value``, ``max_value``: bounds every measured value must respect.
    * ``max_growth``: largest allowed relative increase between consecutive points.
    * ``informational``: report the gate but never fail the suite on it.
    """
    idname: str
    label: str
    description: str
    param_name: str = "N"
    default_points: Sequence[float] = ()
    quantity: str = "value"

    prediction: Optional[float] = None
    tolerance: float = 0.0
    max_ratio: Optional[float] = None
    monotone: Optional[str] = None
    min_value: Optional[float] = None
    max_value: Optional[float] = None
    max_growth: Optional[float] = None
    min_r2: float = 0.9
    informational: bool = False

    def __init__(self, lab: Lab) -> None:
        self._lab = lab

    def __call__(self, value: float, seed: int) -> Dict[str, float]:
        return self.measure(self._lab, value, seed)

    def slope_x(self, value: float) -> float:
        """Abscissa of the log-log fit. Default ``log(value)``."""
        return float(np.log(value))

    def measure(self, lab: Lab, value: float, seed: int) -> Dict[str, float]:
        ...


class Suite:
    """
    A named list of experiments run together by ``verify``.

    Inherit and define:

    * ``idname``: Suite idname.
    * ``experiments``: Experiment idnames to run, in order.
    """
    idname: str
    experiments: Sequence[str] = ()


class Baselines:
    """
    Oracle-pinned reference values.

    The first run of an experiment stores its value; later runs compare
    against it. The store is cleared when any entry of ``depends`` differs
    from the fingerprint it was written with.

    :param path: Directory of the store.
    :param depends: Environment fingerprint (e.g. η hash, ε).
    """
    def __init__(self, path: str, depends: Dict[str, Any]) -> None:
        self.path = path
        self.depends = dict(depends)
        self._file = os.path.join(path, "baselines.json")
        self._values: Dict[str, float] = {}

        os.makedirs(self.path, exist_ok=True)
        self._check_state()

    def get(self, key: str) -> Optional[float]:
        return self._values.get(key)

    def pin(self, key: str, value: float) -> None:
        """Store ``value`` under ``key`` and write the store."""
        self._values[key] = float(value)
        self._write()

    def compare(self, key: str, value: float, tolerance: float) -> bool:
        """
        Compare against the pinned value, pinning it first if absent.

        :param tolerance: Allowed relative deviation (0.2 means ±20%).
        :return: Whether ``value`` is within tolerance of the pinned value.
        """
        pinned = self.get(key)
        if pinned is None:
            self.pin(key, value)
            return True
        if pinned == 0:
            return value == 0
        return abs(value-pinned) <= tolerance * abs(pinned)

    def _check_state(self) -> None:
        if os.path.isfile(self._file):
            with open(self._file, "r") as fp:
                state = json.load(fp)
            if state.get("depends") == self.depends:
                self._values = {k: float(v) for k, v in state["values"].items()}
        self._write()

    def _write(self) -> None:
        info = {
            "schema": "1",
            "depends": self.depends,
            "values": self._values,
        }
        with open(self._file, "w") as fp:
            json.dump(info, fp, indent=4, sort_keys=True)
