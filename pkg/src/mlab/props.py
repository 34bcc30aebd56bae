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
Typed options. A property keeps its value, its default and a string parser,
so config files and ``--option`` flags set it the same way Python code does.
"""

__all__ = (
    "Property",
    "IntProp",
    "FloatProp",
    "StrProp",
    "parse_number",
)

from typing import Any, Optional, Sequence, Type


def parse_number(text: str) -> float:
    """
    Read ``"0.5"``, ``"1/64"`` or ``"2**-8"``. Powers bind tighter than
    the fraction bar, so ``"1/2**3"`` is ``0.125``.
    """
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return parse_number(num) / parse_number(den)
    if "**" in text:
        base, exp = text.split("**", 1)
        return parse_number(base) ** parse_number(exp)
    return float(text)


class Property:
    """
    Base property class.

    Inherit and define:

    * ``type``: Type of the value.
    * ``parse(text)``: Optional. Read the string form. Default casts with ``type``.
    * ``check(value)``: Optional. Validate a typed value and return it,
      possibly corrected. Raise ``ValueError`` to reject it.
    """
    type: Type = object

    def __init__(self, name: str = "", description: str = "", default: Any = None) -> None:
        self.name = name
        self.description = description
        self.default = default
        self.value = default

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r}, value={self.value!r})"

    def parse(self, text: str) -> Any:
        return self.type(text.strip())

    def check(self, value: Any) -> Any:
        return value

    def set(self, value: Any) -> None:
        """
        Sets the property's value. Strings go through ``parse`` unless the
        property holds strings.
        """
        if isinstance(value, str) and self.type is not str:
            value = self.parse(value)
        self.value = self.check(self.type(value))

    def reset(self) -> None:
        self.value = self.default


class _NumberProp(Property):
    """
    Clamped to ``[min, max]`` when bounds are given.
    """

    def __init__(self, name: str = "", description: str = "", default: float = 0,
            min: Optional[float] = None, max: Optional[float] = None) -> None:
        super().__init__(name, description, default)
        self.min = min
        self.max = max

    def check(self, value: float) -> float:
        if self.min is not None and value < self.min:
            return self.type(self.min)
        if self.max is not None and value > self.max:
            return self.type(self.max)
        return value


class IntProp(_NumberProp):
    """
    Integer property. Accepts integral number strings like ``"2**10"``.
    """
    type = int

    def parse(self, text: str) -> int:
        value = parse_number(text)
        if value != int(value):
            raise ValueError(f"IntProp {self.name}: {text!r} is not an integer")
        return int(value)


class FloatProp(_NumberProp):
    """
    Float property. Strings may be fractions or powers, e.g. ``1/64``.
    """
    type = float

    def parse(self, text: str) -> float:
        return parse_number(text)


class StrProp(Property):
    """
    String property, optionally restricted to ``choices``.
    """
    type = str

    def __init__(self, name: str = "", description: str = "", default: str = "",
            max_len: int = 1000, choices: Sequence[str] = ()) -> None:
        super().__init__(name, description, default)
        self.max_len = max_len
        self.choices = tuple(choices)

    def check(self, value: str) -> str:
        value = value[:self.max_len]
        if self.choices and value not in self.choices:
            raise ValueError(f"StrProp {self.name}: {value} not in choices {self.choices}")
        return value
