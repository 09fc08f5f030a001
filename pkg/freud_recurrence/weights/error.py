"""Error classes for the weights package.

Copyright (C) 2025 Paulo Ferreira de Castro

Licensed under the Open Software License version 3.0, a copy of which can be
found in the LICENSE file.
"""

from ..error import FreudError


class WeightError(FreudError):
    pass


class InvalidWeight(WeightError):
    pass


class Divergent(WeightError):
    """The moments of the weight do not converge."""
