"""Moment sequences of semiclassical weights.

Moments are produced three ways: by the Pearson equation used as a linear
recurrence (L[lambda(x) x**n] = L[phi(x) (x-1)**n] links consecutive moments),
by direct summation of x**n rho(x) with a rigorous tail bound, and by Gauss's
2F1(1) summation for the seed of z = 1 weights.

Copyright (C) 2025 Paulo Ferreira de Castro

Licensed under the Open Software License version 3.0, a copy of which can be
found in the LICENSE file.
"""

import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Any, Final

from ..numerics import poly
from ..numerics.error import DivergencePrecondition, ExactModeUnavailable
from ..numerics.poly import Poly
from ..numerics.scalar import Arithmetic, Scalar
from ..numerics.special import MAX_SERIES_TERMS, hyp_pfq, ratio_bound
from ..weights.error import Divergent
from ..weights.weights import (
    ConvergenceKind,
    PearsonData,
    WeightSpec,
    classify_convergence,
    pearson_data,
    scalars,
)
from .error import DegenerateRecurrence, SeedCountMismatch, UnsupportedSummation

_LOGGER = logging.getLogger(__name__)

HAHN_ARITY: Final = (2, 1)


class MomentSource(str, Enum):
    PEARSON_RECURRENCE = "pearson_recurrence"
    DIRECT_SUM = "direct_sum"
    GAMMA_RATIO = "gamma_ratio"


@dataclass(frozen=True)
class MomentSequence:
    values: tuple[Scalar, ...]
    normalized: bool
    source: MomentSource

    def __post_init__(self):
        if not self.values:
            raise ValueError("A moment sequence needs at least mu_0")
        if self.normalized and self.values[0].value != 1:
            raise ValueError(f"Normalized moments need nu_0 = 1, got {self.values[0]}")

    @property
    def arith(self) -> Arithmetic:
        return self.values[0].arith

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    @property
    def err_bounds(self) -> tuple[Any, ...]:
        return tuple(v.err for v in self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> Scalar:
        return self.values[n]

    def __iter__(self) -> Iterator[Scalar]:
        return iter(self.values)

    def normalize(self) -> "MomentSequence":
        if self.normalized:
            return self
        mu0 = self.values[0]
        if mu0.is_indeterminate():
            raise DegenerateRecurrence("Cannot normalize moments with mu_0 = 0", 0)
        nu = (self.arith.one(),) + tuple(m / mu0 for m in self.values[1:])
        return MomentSequence(nu, True, self.source)

    def scaled(self, c: Scalar) -> "MomentSequence":
        return MomentSequence(tuple(m * c for m in self.values), False, self.source)


def recurrence_order(spec: WeightSpec) -> int:
    """Number of seed moments the Pearson recurrence needs.

    The relation from x**n links mu_0..mu_{n+d} with d = max(p, q+1); at
    p = q+1 and z = 1 the top coefficient (z - 1) vanishes and the order drops.
    """
    order = max(spec.p, spec.q + 1)
    if spec.p == spec.q + 1 and spec.z == 1:
        order -= 1
    return order


def pearson_relation(pd: PearsonData, n: int) -> Poly:
    """Coefficients c_m of sum(c_m mu_m) = L[lambda(x) x**n] - L[phi(x) (x-1)**n] = 0."""
    arith = pd.phi_coeffs[0].arith
    shifted_power = tuple(arith.scalar(comb(n, k) * (-1) ** (n - k)) for k in range(n + 1))
    return poly.sub(poly.mul_x(pd.lambda_coeffs, n), poly.mul(pd.phi_coeffs, shifted_power))


def moments_pearson(
    spec: WeightSpec,
    n_max: int,
    seeds: Sequence[Scalar],
    *,
    normalize: bool = False,
) -> MomentSequence:
    """mu_0..mu_N from the seeds mu_0..mu_{s-1}, s = recurrence_order(spec)."""
    order = recurrence_order(spec)
    if len(seeds) != order:
        raise SeedCountMismatch(
            f"The Pearson recurrence of {spec} needs {order} seed moments, got {len(seeds)}"
        )
    if order == 0:
        raise DegenerateRecurrence(f"The Pearson relation of {spec} determines no moment")
    arith = seeds[0].arith
    pd = pearson_data(spec, arith)
    mu = list(seeds)
    n = 0
    while len(mu) <= n_max:
        coeffs = pearson_relation(pd, n)
        top = n + order
        lead = coeffs[top]
        if lead.is_indeterminate():
            raise DegenerateRecurrence(
                f"Pearson relation leading coefficient vanishes at mu_{top}", n
            )
        acc = arith.zero()
        for m in range(top):
            acc = acc + coeffs[m] * mu[m]
        mu.append(-acc / lead)
        n += 1

    result = MomentSequence(tuple(mu[: n_max + 1]), False, MomentSource.PEARSON_RECURRENCE)
    return result.normalize() if normalize else result


def moments_direct(
    spec: WeightSpec,
    n_max: int,
    arith: Arithmetic,
    target_err: Any = None,
) -> MomentSequence:
    """mu_n = sum over x of x**n rho(x), for n = 0..N.

    Finite supports are summed exactly. Infinite sums stop once the tail bound
    of every order is at most target_err; the error bound of mu_n is that tail
    plus the rounding of its partial sum.

    Raises:
        Divergent: an order beyond the convergence bound was requested.
        ExactModeUnavailable: an infinite sum under the rational contract.
        UnsupportedSummation: z = 1 weights other than (p, q) = (2, 1).
    """
    conv = classify_convergence(spec)
    if not conv.permits(n_max):
        raise Divergent(f"Only moments up to order {conv.order_bound} converge for {spec}")
    if conv.kind is ConvergenceKind.MOMENT_LIMITED:
        if (spec.p, spec.q) != HAHN_ARITY:
            raise UnsupportedSummation(
                f"No summation method for the z=1 moments of a ({spec.p}, {spec.q}) weight"
            )
        a1, a2 = spec.num_params
        return moments_hahn_gamma(a1, a2, spec.den_params[0], n_max, arith)
    if conv.kind is not ConvergenceKind.FINITE_SUPPORT and arith.is_exact:
        raise ExactModeUnavailable(f"The moments of {spec} are infinite sums")
    if target_err is None:
        target_err = arith.target_err
    return MomentSequence(
        tuple(_sum_weighted_powers(spec, n_max, arith, target_err)),
        False,
        MomentSource.DIRECT_SUM,
    )


def _sum_weighted_powers(
    spec: WeightSpec, n_max: int, arith: Arithmetic, target_err: Any
) -> list[Scalar]:
    reduced_num, reduced_den = spec.reduced_params()
    nums = scalars(arith, reduced_num)
    shifted_dens = [d + 1 for d in scalars(arith, reduced_den)]
    z = arith.scalar(spec.z)
    totals = [arith.zero()] * (n_max + 1)
    tails: list[Any] = [0] * (n_max + 1)
    rho = arith.one()
    x = 0
    while True:
        power = arith.one()
        for n in range(n_max + 1):
            totals[n] = totals[n] + rho * power
            power = power * x
        if spec.support_cutoff is not None:
            if x == spec.support_cutoff:
                break
        elif x >= 1 and _tails_below(rho, x, nums, shifted_dens, z, totals, tails, target_err):
            break
        ratio = z
        for a in nums:
            ratio = ratio * (x + a)
        divisor = arith.scalar(x + 1)
        for d in shifted_dens:
            divisor = divisor * (x + d)
        rho = rho * ratio / divisor
        x += 1
        if x > MAX_SERIES_TERMS:
            raise Divergent(f"Moment sums of {spec} did not converge in {x} terms")
    if __debug__:
        _LOGGER.debug("moments_direct: summed %d points of %s", x + 1, spec)
    return [Scalar(t.value, t.err + tail, arith) for t, tail in zip(totals, tails)]


def _tails_below(
    rho: Scalar,
    x: int,
    nums: list[Scalar],
    shifted_dens: list[Scalar],
    z: Scalar,
    totals: list[Scalar],
    tails: list[Any],
    target_err: Any,
) -> bool:
    """Bound the remaining sum of every order; True when all are small enough.

    The term x**n rho(x) has ratio ((x+1)/x)**n lambda(x)/phi(x+1), which
    ratio_bound majorizes for all later x.
    """
    magnitude = rho.magnitude()
    power = 1
    for n in range(len(totals)):
        bound = ratio_bound(nums, shifted_dens, z, x, power=n)
        if bound is None or bound >= 1:
            return False
        tail = magnitude * power * bound / (1 - bound)
        if tail > target_err:
            return False
        tails[n] = tail
        power *= x
    return True


def moments_hahn_gamma(
    a1: Fraction, a2: Fraction, b: Fraction, n_max: int, arith: Arithmetic
) -> MomentSequence:
    """Moments of the z = 1 weight (a1)_x (a2)_x / ((b+1)_x x!).

    mu_0 = Gamma(b+1) Gamma(b+1-a1-a2) / (Gamma(b+1-a1) Gamma(b+1-a2)), and
    the higher moments follow from the Pearson recurrence.

    Raises:
        DivergencePrecondition: some requested moment does not converge.
    """
    excess = b + 1 - a1 - a2
    if not n_max < excess:
        raise DivergencePrecondition(
            f"Moments up to order {n_max} need b+1-a1-a2 > {n_max}, got {excess}"
        )
    spec = WeightSpec((a1, a2), (b,), Fraction(1))
    mu0 = hyp_pfq(scalars(arith, (a1, a2)), [arith.scalar(b + 1)], arith.one()).value
    mom = moments_pearson(spec, n_max, [mu0])
    return MomentSequence(mom.values, False, MomentSource.GAMMA_RATIO)


def pearson_seeds(spec: WeightSpec, arith: Arithmetic, *, normalized: bool) -> list[Scalar]:
    """Seeds mu_0..mu_{s-1} of the Pearson recurrence, summed analytically when possible.

    mu_0 = pFq(a; b+1; z) and mu_1 = z prod(a) / prod(b+1) * pFq(a+1; b+2; z).
    """
    order = recurrence_order(spec)
    if order == 1 and normalized:
        return [arith.one()]
    nums = scalars(arith, spec.num_params)
    dens = [d + 1 for d in scalars(arith, spec.den_params)]
    z = arith.scalar(spec.z)
    if order <= 2:
        seeds = [hyp_pfq(nums, dens, z).value]
        if order == 2:
            factor = z
            for a in nums:
                factor = factor * a
            for d in dens:
                factor = factor / d
            seeds.append(factor * hyp_pfq([a + 1 for a in nums], [d + 1 for d in dens], z).value)
    else:
        seeds = list(moments_direct(spec, order - 1, arith).values)
    if normalized:
        mu0 = seeds[0]
        seeds = [arith.one()] + [s / mu0 for s in seeds[1:]]
    return seeds


def default_moments(
    spec: WeightSpec,
    n_max: int,
    arith: Arithmetic,
    *,
    normalized: bool = True,
    seeds: Sequence[Scalar] | None = None,
) -> MomentSequence:
    """The moments a pipeline uses by default: exact finite sums on finite
    supports, the Pearson recurrence from analytic seeds otherwise.

    Past the convergence bound of a z = 1 weight the recurrence continues the
    moment sequence formally, which is the functional the recurrence
    coefficients belong to. Those entries are not sums, so a warning is logged;
    callers that report moments must check classify_convergence themselves.
    """
    conv = classify_convergence(spec)
    if seeds is not None:
        mom = moments_pearson(spec, n_max, seeds)
    elif conv.kind is ConvergenceKind.FINITE_SUPPORT:
        mom = moments_direct(spec, n_max, arith)
    else:
        if not conv.permits(n_max):
            _LOGGER.warning(
                "default_moments: moments of %s past order %d are formal continuations",
                spec,
                conv.order_bound,
            )
        mom = moments_pearson(spec, n_max, pearson_seeds(spec, arith, normalized=normalized))
    return mom.normalize() if normalized else mom
