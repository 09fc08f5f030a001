"""Textual family descriptors and their mapping to weight parameters.

Copyright (C) 2025 Paulo Ferreira de Castro

Licensed under the Open Software License version 3.0, a copy of which can be
found in the LICENSE file.
"""

from collections.abc import Sequence
from enum import Enum
from fractions import Fraction

from .error import InvalidWeight
from .weights import WeightSpec


class Family(str, Enum):
    MEIXNER = "meixner"
    CHARLIER = "charlier"
    GEN_CHARLIER = "gen-charlier"
    GHAHN1 = "ghahn1"
    HAHN = "hahn"
    HAHN_CLASSICAL = "hahn-classical"
    CUSTOM = "custom"

    @property
    def arity(self) -> tuple[int, int] | None:
        """(p, q) parameter counts, or None when any count is accepted."""
        return _ARITY[self]


_ARITY: dict[Family, tuple[int, int] | None] = {
    Family.MEIXNER: (1, 0),
    Family.CHARLIER: (0, 0),
    Family.GEN_CHARLIER: (0, 1),
    Family.GHAHN1: (2, 1),
    Family.HAHN: (2, 1),
    Family.HAHN_CLASSICAL: (2, 1),
    Family.CUSTOM: None,
}


def classical_hahn_spec(alpha: Fraction, beta: Fraction, n_points: int) -> WeightSpec:
    """The classical Hahn weight on {0..N} in the (a1, a2, b) parametrization.

    a1 = alpha + 1, a2 = -N, b = -N - 1 - beta.
    """
    if n_points < 0:
        raise InvalidWeight(f"The classical Hahn support size N must be >= 0, got {n_points}")
    return WeightSpec(
        (Fraction(alpha) + 1, Fraction(-n_points)),
        (Fraction(-n_points - 1) - beta,),
        Fraction(1),
    )


def make_weight_spec(
    family: Family,
    a: Sequence[Fraction],
    b: Sequence[Fraction],
    z: Fraction | None,
    n_points: int | None = None,
) -> WeightSpec:
    """Build the WeightSpec of a family from its command-line style parameters.

    For "hahn-classical", `a` holds (alpha, beta) and `n_points` the support
    size N. The "hahn" family always has z = 1.
    """
    if family is Family.HAHN_CLASSICAL:
        if len(a) != 2 or b:
            raise InvalidWeight("hahn-classical takes --a alpha,beta and no --b")
        if n_points is None:
            raise InvalidWeight("hahn-classical requires the support size --n-points")
        if z not in (None, 1):
            raise InvalidWeight(f"hahn-classical has z=1, got z={z}")
        return classical_hahn_spec(a[0], a[1], n_points)

    arity = family.arity
    if arity is not None and (len(a), len(b)) != arity:
        raise InvalidWeight(
            f"Family {family.value} takes {arity[0]} --a and {arity[1]} --b parameters,"
            f" got {len(a)} and {len(b)}"
        )
    if family is Family.HAHN:
        if z not in (None, 1):
            raise InvalidWeight(f"The hahn family has z=1, got z={z}")
        z = Fraction(1)
    elif family is Family.GHAHN1 and z == 1:
        raise InvalidWeight("ghahn1 requires z != 1; use --family hahn for z = 1")
    if z is None:
        raise InvalidWeight(f"Family {family.value} requires the parameter --z")
    return WeightSpec(tuple(a), tuple(b), z)
