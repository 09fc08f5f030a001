"""Root exception class shared by every subpackage.

Copyright (C) 2025 Paulo Ferreira de Castro

Licensed under the Open Software License version 3.0, a copy of which can be
found in the LICENSE file.
"""


class FreudError(Exception):
    """Base class of all errors raised by this package.

    The `exit_code` class attribute is the process exit code used by the
    command-line frontend: 2 for usage and precondition errors, 3 for
    numerical failures.
    """

    exit_code = 2


class NumericalFailure(FreudError):
    """A computation broke down numerically at a given index."""

    exit_code = 3

    def __init__(self, msg: str, n: int | None = None):
        self.n = n
        super().__init__(msg if n is None else f"{msg} (n={n})")
