"""Error classes for the moments package.

Copyright (C) 2025 Paulo Ferreira de Castro

Licensed under the Open Software License version 3.0, a copy of which can be
found in the LICENSE file.
"""

from ..error import FreudError, NumericalFailure


class MomentError(FreudError):
    pass


class DegenerateRecurrence(MomentError, NumericalFailure):
    """The leading coefficient of an instantiated Pearson relation vanished."""


class SeedCountMismatch(MomentError):
    pass


class InsufficientMoments(MomentError):
    pass


class UnsupportedSummation(MomentError):
    """No summation method is implemented for the requested moments."""
