"""Top-level code that runs a command and maps errors to exit codes.

The main() method is called by the package entrypoint code in __main__.py.

Copyright (C) 2025 Paulo Ferreira de Castro

Licensed under the Open Software License version 3.0, a copy of which can be
found in the LICENSE file.
"""

import logging
import sys
from collections.abc import Sequence
from typing import TextIO

from .cli.commands import run_command
from .cmdline_parser import CmdArgs, parse_command_line
from .config.schema import RunConfig, load_config_file, merge_config, validate_config
from .error import FreudError

_LOGGER = logging.getLogger(__name__)


def build_config(args: CmdArgs) -> RunConfig:
    file_values = load_config_file(args.config_file) if args.config_file else {}
    return validate_config(merge_config(file_values, args.config_values()))


def _log_level(verbose: int) -> int:
    if verbose >= 2 and __debug__:
        return logging.DEBUG
    return logging.INFO if verbose else logging.WARNING


def run(args: CmdArgs, out: TextIO | None = None) -> int:
    """Run one command; FreudError subclasses become their exit codes."""
    try:
        return run_command(build_config(args), out)
    except FreudError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return e.exit_code


def main(argv: Sequence[str] | None = None) -> int:
    args = parse_command_line(argv)
    logging.basicConfig(
        format="%(asctime)s %(levelname)-8s [%(name)s] %(message)s",
        level=_log_level(args.verbose),
        datefmt="%Y-%m-%d %H:%M:%S",
    )
    try:
        return run(args)
    except Exception:  # pylint: disable=broad-exception-caught
        from traceback import format_exc

        _LOGGER.error("Exiting with an unexpected exception:\n%s", format_exc())
        return 1
