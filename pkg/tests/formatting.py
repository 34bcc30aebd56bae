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
Source hygiene check, run by CI next to pytest.
Exit code is nonzero if any file fails.
"""

import sys
import os
import pathlib
from termcolor import colored

HEADER = "#\n#  Multiplier Lab\n"
MAX_LINE = 120

# List of (dir, recursive, (glob1, glob2, glob3))
PATHS = (
    (".",         False, ("README.md", "CONTRIBUTING.md", "DESIGN.md", "requirements.txt", "pytest.ini")),
    ("./build",   False, ("*.py",)),
    ("./docs",    True,  ("*.rst", "*.py")),
    ("./src",     True,  ("*.py",)),
    ("./tests",   True,  ("*.py",)),
)


def check_file(path) -> str:
    with open(path, "r") as file:
        data = file.read()

    if not data.endswith("\n"):
        return "no blank line at the end"
    if str(path).endswith(".py") and data and not data.startswith(HEADER):
        return "missing license header"

    for i, line in enumerate(data.split("\n")):
        if line.endswith(" "):
            return f"line {i+1}: trailing whitespace"
        if "\t" in line:
            return f"line {i+1}: tab"
        if str(path).endswith(".py") and len(line) > MAX_LINE:
            return f"line {i+1}: longer than {MAX_LINE}"

    return "OK"


def test_dir(directory, rec, globs):
    exitcode = 0

    if rec:
        for file in sorted(os.listdir(directory)):
            path = os.path.join(directory, file)
            if os.path.isdir(path) and file != "__pycache__":
                exitcode = max(exitcode, test_dir(path, rec, globs))

    for glob in globs:
        for relpath in sorted(pathlib.Path(directory).glob(glob)):
            if os.path.isfile(relpath):
                msg = check_file(relpath)
                print(colored(f"{relpath}: {msg}", "green" if msg == "OK" else "red"))
                exitcode = max(exitcode, int(msg != "OK"))

    return exitcode


def main():
    exitcode = 0
    for path in PATHS:
        exitcode = max(exitcode, test_dir(*path))
    return exitcode


if __name__ == "__main__":
    sys.exit(main())
