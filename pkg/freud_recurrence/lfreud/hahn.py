"""Hahn recurrence coefficients (the z = 1 Generalized Hahn weights).

At z = 1 the Laguerre-Freud equations decouple: beta_n follows a first order
linear recursion, and the summed second equation is linear in gamma_{n+1}.
Both paths below use K = a1 + a2 - b.

Copyright (C) 2025 Paulo Ferreira de Castro

Licensed under the Open Software License version 3.0, a copy of which can be
found in the LICENSE file.
"""

import logging

from ..numerics.scalar import Scalar
from ..oracle.oracle import Method, RecurrenceTable
from .error import DegenerateParameters

_LOGGER = logging.getLogger(__name__)


def _nonzero(value: Scalar, what: str, n: int) -> Scalar:
    if value.is_indeterminate():
        raise DegenerateParameters(f"{what} vanishes", n)
    return value


def hahn_beta0(a1: Scalar, a2: Scalar, b: Scalar) -> Scalar:
    """beta_0 = a1 a2 / (b - a1 - a2)."""
    return a1 * a2 / _nonzero(b - a1 - a2, "b - a1 - a2", 0)


def hahn_gamma1(a1: Scalar, a2: Scalar, b: Scalar) -> Scalar:
    """gamma_1 = a1 a2 (b-a1)(b-a2) / ((b-a1-a2)**2 (b-a1-a2-1))."""
    k = b - a1 - a2
    den = _nonzero(k * k * (k - 1), "(b-a1-a2)**2 (b-a1-a2-1)", 1)
    return a1 * a2 * (b - a1) * (b - a2) / den


def hahn_beta(a1: Scalar, a2: Scalar, b: Scalar, n: int) -> Scalar:
    if n == 0:
        return hahn_beta0(a1, a2, b)
    k = a1 + a2 - b
    num = (b + 2 - a1 - a2) * a1 * a2 - (a1 + a2 + b) * (k + (n - 1)) * n
    den = _nonzero((k + 2 * n) * (k + (2 * n - 2)), "(2n+K)(2n+K-2)", n)
    return num / den


def hahn_gamma(a1: Scalar, a2: Scalar, b: Scalar, n: int) -> Scalar:
    if n == 0:
        return a1.arith.zero()
    if n == 1:
        # The general display is 0/0 at K = 1; this is its reduced form.
        return hahn_gamma1(a1, a2, b)
    k = a1 + a2 - b
    num = (a1 + (n - 1)) * (a2 + (n - 1)) * (a1 - b + (n - 1)) * (a2 - b + (n - 1))
    num = num * (k + (n - 2)) * n
    mid = k + (2 * n - 2)
    den = (k + (2 * n - 1)) * (k + (2 * n - 3)) * mid * mid
    return -num / _nonzero(den, "(2n+K-1)(2n+K-3)(2n+K-2)**2", n)


def hahn_closed_form(a1: Scalar, a2: Scalar, b: Scalar, n_max: int) -> RecurrenceTable:
    """Closed-form beta_n, gamma_n; beta_0 from a1 a2/(b - a1 - a2)."""
    betas = tuple(hahn_beta(a1, a2, b, n) for n in range(n_max + 1))
    gammas = tuple(hahn_gamma(a1, a2, b, n) for n in range(n_max + 1))
    return RecurrenceTable(betas, gammas, Method.CLOSED_FORM)


def hahn_beta_solution(a1: Scalar, a2: Scalar, b: Scalar, n: int) -> Scalar:
    """beta_n as the solution of the first order recursion, from beta_0.

    beta_n = K (K-2) beta_0 / ((2n+K)(2n+K-2)) - (a1+a2+b)(K+n-1) n / ((2n+K)(2n+K-2)).
    """
    k = a1 + a2 - b
    den = _nonzero((k + 2 * n) * (k + (2 * n - 2)), "(2n+K)(2n+K-2)", n)
    return (k * (k - 2) * hahn_beta0(a1, a2, b) - (a1 + a2 + b) * (k + (n - 1)) * n) / den


def hahn_lf_run(a1: Scalar, a2: Scalar, b: Scalar, n_max: int) -> RecurrenceTable:
    """beta_n and gamma_n from the decoupled Laguerre-Freud recursions in O(N).

    beta_n = [(2n+K-4) beta_{n-1} - (a1+a2+b)]/(2n+K), and gamma_{n+1} solves

        -(2n+K+1) gamma_{n+1} + (K+2n-3) gamma_n + (K+1) gamma_1
            = -sum(beta_0..beta_{n-1}) + beta_n**2 - beta_0**2
              + b (beta_n - beta_0 - n) - n beta_n + n (n-1)/2.
    """
    arith = b.arith
    k = a1 + a2 - b
    s = a1 + a2 + b
    beta0 = hahn_beta0(a1, a2, b)
    betas = [beta0]
    for n in range(1, n_max + 1):
        den = _nonzero(k + 2 * n, "2n+K", n)
        betas.append(((k + (2 * n - 4)) * betas[-1] - s) / den)

    gammas = [arith.zero()]
    if n_max >= 1:
        gammas.append(hahn_gamma1(a1, a2, b))
    beta_sum = arith.zero()
    for n in range(1, n_max):
        beta_sum = beta_sum + betas[n - 1]
        bn = betas[n]
        rhs = -beta_sum + bn * bn - beta0 * beta0 + b * (bn - beta0 - n) - bn * n
        rhs = rhs + arith.scalar(n * (n - 1)) / 2
        rhs = rhs - (k + (2 * n - 3)) * gammas[n] - (k + 1) * gammas[1]
        coef = _nonzero(-(k + (2 * n + 1)), "b-a1-a2-2n-1", n)
        gammas.append(rhs / coef)
        if __debug__:
            _LOGGER.debug("hahn_lf_run: n=%d beta=%s gamma=%s", n + 1, betas[n + 1], gammas[-1])
    return RecurrenceTable(tuple(betas), tuple(gammas), Method.LF_HAHN)
