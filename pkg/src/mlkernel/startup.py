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
Add-on discovery. Built-in add-ons in ``mlkernel.addons`` load first, then
every ``*.py`` file in the folders listed in ``MLAB_ADDONS``
(separated by ``os.pathsep``). Each module's ``register()`` is called once.
"""

__all__ = (
    "BUILTIN",
    "user_addon_paths",
    "register_addons",
)

import os
import importlib
import importlib.util
from types import ModuleType
from typing import Iterator, List
from .utils import log

BUILTIN = ("core", "estimates", "redistribution", "sharpness")


def user_addon_paths() -> List[str]:
    paths = os.environ.get("MLAB_ADDONS", "")
    return [p for p in paths.split(os.pathsep) if p]


def _user_modules() -> Iterator[ModuleType]:
    for path in user_addon_paths():
        if not os.path.isdir(path):
            log(f"add-on folder {path} does not exist", "warn")
            continue
        for file in sorted(os.listdir(path)):
            if file.startswith("_") or not file.endswith(".py"):
                continue
            name = f"mlab_addons.{file[:-3]}"
            spec = importlib.util.spec_from_file_location(name, os.path.join(path, file))
            mod = importlib.util.module_from_spec(spec)
            spec.loader.exec_module(mod)
            yield mod


def register_addons() -> None:
    for name in BUILTIN:
        importlib.import_module(f"{__package__}.addons.{name}").register()

    for mod in _user_modules():
        if hasattr(mod, "register"):
            mod.register()
            log(f"loaded add-on {mod.__name__}")
        else:
            log(f"add-on {mod.__name__} has no register()", "warn")
