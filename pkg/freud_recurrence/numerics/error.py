"""Error classes for the numerics package.

Copyright (C) 2025 Paulo Ferreira de Castro

Licensed under the Open Software License version 3.0, a copy of which can be
found in the LICENSE file.
"""

from ..error import FreudError


class NumericsError(FreudError):
    pass


class ScalarParseError(NumericsError):
    pass


class DivergentSeries(NumericsError):
    pass


class ExactModeUnavailable(NumericsError):
    """A transcendental value was requested under the exact rational contract."""


class DivergencePrecondition(NumericsError):
    pass


class PoleEncountered(NumericsError):
    pass
