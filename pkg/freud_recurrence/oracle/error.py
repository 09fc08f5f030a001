"""Error classes for the oracle package.

Copyright (C) 2025 Paulo Ferreira de Castro

Licensed under the Open Software License version 3.0, a copy of which can be
found in the LICENSE file.
"""

from ..error import NumericalFailure


class QuasiDefiniteFailure(NumericalFailure):
    """Some h_n = L[P_n**2] is zero, or indistinguishable from zero."""
