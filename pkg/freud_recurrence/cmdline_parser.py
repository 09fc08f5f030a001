"""Command-line argument parser.

Copyright (C) 2025 Paulo Ferreira de Castro

Licensed under the Open Software License version 3.0, a copy of which can be
found in the LICENSE file.
"""

import argparse
import re
import sys
from collections.abc import Sequence
from dataclasses import asdict, dataclass
from typing import Any, Optional

from .config.schema import ArithmeticKind, Command, OutputFormat
from .lfreud.factory import TableMode
from .weights.families import Family

# Options whose values may be negative, like --z -1/2 or --a -4,1.
SIGNED_VALUE_OPTIONS = ("--a", "--b", "--z", "--tolerance", "--seeds")
_NEGATIVE_VALUE = re.compile(r"-[0-9.]")


@dataclass
class CmdArgs:
    command: str
    config_file: Optional[str] = None
    family: Optional[str] = None
    a: Optional[str] = None
    b: Optional[str] = None
    z: Optional[str] = None
    n: Optional[int] = None
    n_points: Optional[int] = None
    mode: Optional[str] = None
    arithmetic: Optional[str] = None
    precision: Optional[int] = None
    digits: Optional[int] = None
    format: Optional[str] = None
    tolerance: Optional[str] = None
    seeds: Optional[str] = None
    normalized: Optional[bool] = None
    verbose: int = 0

    def config_values(self) -> dict[str, Any]:
        """The run configuration fields given on the command line."""
        values = asdict(self)
        values.pop("config_file")
        values["precision_bits"] = values.pop("precision")
        return values


def get_package_name() -> str:
    from os.path import abspath, basename, dirname

    return basename(dirname(abspath(__file__)))


def _add_run_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("-c", "--config-file", help="TOML run file path")
    parser.add_argument("--family", choices=[f.value for f in Family])
    parser.add_argument("--a", help="numerator parameters, comma separated (e.g. 1,-4 or -4,1)")
    parser.add_argument("--b", help="denominator parameters, comma separated")
    parser.add_argument("--z", help="weight parameter z (e.g. 1/2, -1/2 or --z=-1/2)")
    parser.add_argument("--n", type=int, help="largest index N")
    parser.add_argument("--n-points", type=int, help="support size N of hahn-classical")
    parser.add_argument("--mode", choices=[m.value for m in TableMode])
    parser.add_argument("--arithmetic", choices=[k.value for k in ArithmeticKind])
    parser.add_argument("--precision", type=int, help="float precision in bits")
    parser.add_argument("--digits", type=int, help="significant digits of float output")
    parser.add_argument("--format", choices=[f.value for f in OutputFormat])
    parser.add_argument("--tolerance", help="verify tolerance (default 0 rational, 1e-20 float)")
    parser.add_argument("--seeds", help="explicit beta_0,gamma_1")
    parser.add_argument(
        "--normalized",
        action="store_const",
        const=True,
        help="moments divided by mu_0",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logs"
    )


def _join_signed_values(argv: Sequence[str]) -> list[str]:
    """Join "--z -1/2" into "--z=-1/2"; argparse reads a value starting with "-" as an option."""
    joined: list[str] = []
    i = 0
    while i < len(argv):
        arg = argv[i]
        if (
            arg in SIGNED_VALUE_OPTIONS
            and i + 1 < len(argv)
            and _NEGATIVE_VALUE.match(argv[i + 1])
        ):
            joined.append(f"{arg}={argv[i + 1]}")
            i += 2
        else:
            joined.append(arg)
            i += 1
    return joined


def parse_command_line(argv: Sequence[str] | None = None) -> CmdArgs:
    parser = argparse.ArgumentParser(prog=get_package_name())
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in Command:
        _add_run_arguments(subparsers.add_parser(command.value))
    if argv is None:
        argv = sys.argv[1:]
    args = CmdArgs(**vars(parser.parse_args(_join_signed_values(argv))))

    return args
