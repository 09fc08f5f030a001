"""Error classes for the lfreud package.

Copyright (C) 2025 Paulo Ferreira de Castro

Licensed under the Open Software License version 3.0, a copy of which can be
found in the LICENSE file.
"""

from ..error import FreudError, NumericalFailure


class EngineError(FreudError):
    pass


class InvalidZ(EngineError):
    pass


class SeedFailure(EngineError):
    """The initial conditions beta_0, gamma_1 could not be computed."""


class NoEngine(EngineError):
    pass


class SingularRun(EngineError, NumericalFailure):
    """gamma_{n+1} vanished, so beta_{n+1} cannot be solved for."""


class DegenerateParameters(EngineError, NumericalFailure):
    """A denominator of a closed form or decoupled recursion vanished."""

    exit_code = 2
