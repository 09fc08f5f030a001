"""Semiclassical weights on the non-negative integers and their Pearson data.

A weight is given by its hypergeometric parameters

    rho(x) = prod (a_i)_x / prod (b_j + 1)_x * z**x / x!,  x = 0, 1, 2, ...

and satisfies the discrete Pearson equation rho(x+1) phi(x+1) = rho(x) lambda(x)
with lambda(x) = z prod (x + a_i) and phi(x) = x prod (x + b_j).

Copyright (C) 2025 Paulo Ferreira de Castro

Licensed under the Open Software License version 3.0, a copy of which can be
found in the LICENSE file.
"""

import math
from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from ..numerics import poly
from ..numerics.poly import Poly
from ..numerics.scalar import RATIONAL, Arithmetic, Scalar
from .error import Divergent, InvalidWeight


def _nonpositive_integer(v: Fraction) -> int | None:
    return -v.numerator if v.denominator == 1 and v <= 0 else None


@dataclass(frozen=True)
class WeightSpec:
    num_params: tuple[Fraction, ...]
    den_params: tuple[Fraction, ...]
    z: Fraction
    support_cutoff: int | None = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "num_params", tuple(Fraction(a) for a in self.num_params))
        object.__setattr__(self, "den_params", tuple(Fraction(b) for b in self.den_params))
        object.__setattr__(self, "z", Fraction(self.z))
        if self.z == 0:
            raise InvalidWeight("The weight parameter z must be non-zero")
        cutoff = min(
            (m for a in self.num_params if (m := _nonpositive_integer(a)) is not None),
            default=None,
        )
        object.__setattr__(self, "support_cutoff", cutoff)
        for b in self.den_params:
            m = _nonpositive_integer(b)
            # b = -m makes (b+1)_x vanish from x = m on, harmless past the cutoff.
            if m is not None and m > 0 and (cutoff is None or cutoff >= m):
                raise InvalidWeight(
                    f"Denominator parameter b={b} is a negative integer inside the support"
                )

    @property
    def p(self) -> int:
        return len(self.num_params)

    @property
    def q(self) -> int:
        return len(self.den_params)

    def reduced_params(self) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
        """Parameters with every a_i = b_j + 1 pair cancelled from the Pochhammer ratio."""
        nums = Counter(self.num_params)
        dens = []
        for b in self.den_params:
            if nums[b + 1]:
                nums[b + 1] -= 1
            else:
                dens.append(b)
        return tuple(nums.elements()), tuple(dens)

    def __str__(self) -> str:
        def fmt(values: Iterable[Fraction]) -> str:
            return ", ".join(str(v) for v in values)

        return f"({fmt(self.num_params)}; {fmt(self.den_params)}; z={self.z})"


def scalars(arith: Arithmetic, values: Iterable[Fraction]) -> list[Scalar]:
    return [arith.scalar(v) for v in values]


@dataclass(frozen=True)
class PearsonData:
    lambda_coeffs: Poly
    phi_coeffs: Poly
    class_c: int


def pearson_data(spec: WeightSpec, arith: Arithmetic = RATIONAL) -> PearsonData:
    lam = poly.from_roots(arith, scalars(arith, spec.num_params), arith.scalar(spec.z))
    phi = poly.mul_x(poly.from_roots(arith, scalars(arith, spec.den_params)))

    # The class only depends on exact degrees, so compute it over the rationals.
    exact_lam = poly.from_roots(RATIONAL, scalars(RATIONAL, spec.num_params), RATIONAL.scalar(spec.z))
    exact_phi = poly.mul_x(poly.from_roots(RATIONAL, scalars(RATIONAL, spec.den_params)))
    class_c = max(poly.degree(exact_phi) - 2, poly.degree(poly.sub(exact_phi, exact_lam)) - 1)
    return PearsonData(lam, phi, class_c)


def weight_eval(spec: WeightSpec, x: int, arith: Arithmetic = RATIONAL) -> Scalar:
    """rho(x), built from rho(0) = 1 by the ratio rho(y+1) / rho(y) = lambda(y) / phi(y+1)."""
    if x < 0:
        raise ValueError(f"The weight is only defined on non-negative integers, got x={x}")
    if spec.support_cutoff is not None and x > spec.support_cutoff:
        return arith.zero()
    nums, dens = spec.reduced_params()
    z = arith.scalar(spec.z)
    rho = arith.one()
    for y in range(x):
        ratio = z
        for a in nums:
            ratio = ratio * (y + a)
        divisor = arith.scalar(y + 1)
        for b in dens:
            divisor = divisor * (y + 1 + b)
        rho = rho * ratio / divisor
    return rho


class ConvergenceKind(str, Enum):
    ENTIRE = "entire"
    UNIT_DISK = "unit_disk"
    FINITE_SUPPORT = "finite_support"
    MOMENT_LIMITED = "moment_limited"


@dataclass(frozen=True)
class Convergence:
    kind: ConvergenceKind
    # Highest moment order that converges, for MOMENT_LIMITED.
    order_bound: int | None = None

    def permits(self, n: int) -> bool:
        return self.order_bound is None or n <= self.order_bound


def classify_convergence(spec: WeightSpec) -> Convergence:
    """Raises Divergent when no moment of the weight converges."""
    if spec.support_cutoff is not None:
        return Convergence(ConvergenceKind.FINITE_SUPPORT)
    p, q = spec.p, spec.q
    if p <= q:
        return Convergence(ConvergenceKind.ENTIRE)
    if p > q + 1:
        raise Divergent(f"The weight series diverges for p={p} > q+1={q + 1}")
    if abs(spec.z) < 1:
        return Convergence(ConvergenceKind.UNIT_DISK)
    if spec.z != 1:
        raise Divergent(f"The weight series diverges for |z| >= 1 with z != 1, got z={spec.z}")
    # rho(x) decays like x**(sum(a) - sum(b) - p); mu_n converges iff n < excess.
    excess = sum(spec.den_params, Fraction(0)) + q - sum(spec.num_params, Fraction(0))
    order_bound = math.ceil(excess) - 1
    if order_bound < 0:
        raise Divergent(f"No moment converges: sum(b) + q - sum(a) = {excess} <= 0")
    return Convergence(ConvergenceKind.MOMENT_LIMITED, order_bound)
