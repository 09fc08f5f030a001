"""Exception classes of the structure-relation checks.

Copyright (C) 2025 Paulo Ferreira de Castro

Licensed under the Open Software License version 3.0, a copy of which can be
found in the LICENSE file.
"""

from ..error import FreudError


class StructureError(FreudError):
    pass


class BandOutOfRange(StructureError):
    """The requested band needs recurrence coefficients the table does not hold."""
