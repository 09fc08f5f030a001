"""Special functions: Pochhammer symbols, hypergeometric series and Gamma.

Copyright (C) 2025 Paulo Ferreira de Castro

Licensed under the Open Software License version 3.0, a copy of which can be
found in the LICENSE file.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any, Final

from .error import (
    DivergencePrecondition,
    DivergentSeries,
    ExactModeUnavailable,
    PoleEncountered,
)
from .scalar import Arithmetic, Scalar

_LOGGER = logging.getLogger(__name__)

MAX_SERIES_TERMS: Final = 1_000_000

# Relative slack applied to the float estimates of ratio bounds.
_BOUND_SLACK: Final = 1e-12


def pochhammer(a: Scalar, n: int) -> Scalar:
    """Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1."""
    if n < 0:
        raise ValueError(f"Pochhammer order must be non-negative, got {n}")
    result = a.arith.one()
    for k in range(n):
        result = result * (a + k)
    return result


def ratio_bound(
    num: Sequence[Scalar],
    den: Sequence[Scalar],
    z: Scalar,
    k: int,
    power: int = 0,
) -> float | None:
    """Upper bound of |prod(a+j) / prod(d+j) * z / (j+1) * ((j+1)/j)**power| over j >= k.

    The bound pairs numerator and denominator parameters so that each pair
    (k+a)/(k+d) is monotone in j. Returns None when `k` is not yet past every
    parameter, or when the bound is not decreasing (more numerator than
    denominator factors).
    """
    if power and k < 1:
        return None
    nums = sorted(float(a.value) for a in num)
    dens = sorted([float(d.value) for d in den] + [1.0])
    if len(nums) > len(dens):
        return None
    if any(k + a <= 0 for a in nums) or any(k + d <= 0 for d in dens):
        return None
    bound = abs(float(z.value))
    unpaired = len(dens) - len(nums)
    for a, d in zip(nums, dens[unpaired:]):
        if a > d:
            bound *= (k + a) / (k + d)
    for d in dens[:unpaired]:
        bound /= k + d
    if power:
        bound *= (1 + 1 / k) ** power
    return bound * (1 + _BOUND_SLACK)


@dataclass(frozen=True)
class SeriesResult:
    value: Scalar
    terms_used: int
    tail_bound: Any


def terminating_order(num: Sequence[Scalar], den: Sequence[Scalar]) -> int | None:
    """Index of the last non-zero term of a terminating pFq series, or None.

    Raises:
        DivergentSeries: a denominator parameter hits zero before the series
            terminates.
    """
    cutoff = min(
        (m for a in num if (m := a.nonpositive_integer()) is not None),
        default=None,
    )
    for d in den:
        m = d.nonpositive_integer()
        if m is not None and (cutoff is None or m < cutoff):
            raise DivergentSeries(f"Denominator parameter {d} is a pole of the series")
    return cutoff


def hyp_pfq(
    num: Sequence[Scalar],
    den: Sequence[Scalar],
    z: Scalar,
    target_err: Any = None,
) -> SeriesResult:
    """Sum pFq(num; den; z), with a rigorous truncation bound when it does not terminate.

    The returned value's error bound includes the tail bound. Terminating
    series are summed exactly term by term, so their result is exact under
    the rational contract. 2F1 at z=1 and 1F0 with an integer parameter are
    taken in closed form, so they stay exact too.

    Raises:
        DivergentSeries: the series diverges at z, or a denominator parameter
            is a pole.
        ExactModeUnavailable: a non-terminating series without a closed form
            under the rational contract.
    """
    arith = z.arith
    p, q = len(num), len(den)
    cutoff = terminating_order(num, den)
    if cutoff is not None:
        total, term = arith.one(), arith.one()
        for k in range(cutoff):
            term = _next_term(term, num, den, z, k)
            total = total + term
        return SeriesResult(total, cutoff + 1, 0)

    if p > q + 1:
        raise DivergentSeries(f"{p}F{q} diverges for z != 0")
    if p == q + 1 and z.value == 1:
        if p == 2:
            return SeriesResult(gauss_2f1_at_1(num[0], num[1], den[0]), 0, 0)
        raise DivergentSeries(f"{p}F{q} at z=1 is only summed in closed form for p=2")
    if p == 1 and q == 0 and abs(z.value) < 1 and (m := num[0].integer_value()) is not None:
        # binomial theorem
        return SeriesResult(1 / (arith.one() - z) ** m, 0, 0)

    if arith.is_exact:
        raise ExactModeUnavailable(f"{p}F{q} at z={z} does not terminate")
    if p == q + 1:
        if abs(z.value) >= 1:
            raise DivergentSeries(f"{p}F{q} requires |z| < 1, got z={z}")

    if target_err is None:
        target_err = arith.target_err
    total, term = arith.one(), arith.one()
    k = 0
    while True:
        term = _next_term(term, num, den, z, k)
        total = total + term
        k += 1
        if term.is_exact_zero():
            tail = 0
            break
        bound = ratio_bound(num, den, z, k)
        if bound is not None and bound < 1:
            tail = term.magnitude() * bound / (1 - bound)
            if tail <= target_err:
                break
        if k >= MAX_SERIES_TERMS:
            raise DivergentSeries(f"{p}F{q} did not reach the target error in {k} terms")
    if __debug__:
        _LOGGER.debug("%dF%d at z=%s summed with %d terms", p, q, z, k + 1)
    return SeriesResult(Scalar(total.value, total.err + tail, arith), k + 1, tail)


def _next_term(
    term: Scalar, num: Sequence[Scalar], den: Sequence[Scalar], z: Scalar, k: int
) -> Scalar:
    ratio = z
    for a in num:
        ratio = ratio * (a + k)
    divisor = z.arith.scalar(k + 1)
    for d in den:
        divisor = divisor * (d + k)
    return term * ratio / divisor


def gamma(x: Scalar) -> Scalar:
    arith = _float_arith(x, "Gamma")
    if x.nonpositive_integer() is not None:
        raise PoleEncountered(f"Gamma has a pole at {x}")
    ctx = arith.ctx
    value = ctx.gamma(x.value)
    err = abs(value) * (abs(ctx.digamma(x.value)) * x.err + 8 * arith.eps)
    return Scalar(value, err, arith)


def rgamma(x: Scalar) -> Scalar:
    """Reciprocal Gamma, which is entire and vanishes at the non-positive integers."""
    arith = _float_arith(x, "reciprocal Gamma")
    if x.nonpositive_integer() is not None:
        return arith.zero()
    ctx = arith.ctx
    value = ctx.rgamma(x.value)
    err = abs(value) * (abs(ctx.digamma(x.value)) * x.err + 8 * arith.eps)
    return Scalar(value, err, arith)


def _float_arith(x: Scalar, what: str) -> Arithmetic:
    if x.arith.is_exact:
        raise ExactModeUnavailable(f"{what} of {x} is not available under the rational contract")
    return x.arith


def gauss_2f1_at_1(a: Scalar, b: Scalar, c: Scalar) -> Scalar:
    """2F1(a, b; c; 1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)).

    When a or b is an integer the Gamma ratio reduces to a ratio of
    Pochhammer symbols, which is exact under the rational contract.

    Raises:
        DivergencePrecondition: c - a - b <= 0.
        PoleEncountered: the Gamma ratio hits a pole.
    """
    excess = c - a - b
    if excess.value <= 0:
        raise DivergencePrecondition(f"2F1 at z=1 requires c-a-b > 0, got c-a-b={excess}")
    for x, y in ((a, b), (b, a)):
        m = x.integer_value()
        if m is None:
            continue
        if m >= 0:
            # (c-x)_m / (c-x-y)_m
            return pochhammer(c - x, m) / pochhammer(excess, m)
        denominator = pochhammer(c, -m)
        if denominator.is_exact_zero():
            raise PoleEncountered(f"2F1({a}, {b}; {c}; 1) has a pole at c={c}")
        return pochhammer(c - y, -m) / denominator

    if c.nonpositive_integer() is not None:
        raise PoleEncountered(f"2F1({a}, {b}; {c}; 1) has a pole at c={c}")
    return gamma(c) * gamma(excess) * rgamma(c - a) * rgamma(c - b)
