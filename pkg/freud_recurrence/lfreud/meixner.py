"""Meixner recurrence coefficients, closed form and Laguerre-Freud run.

For the weight (a)_x z**x / x! the structure relation has A_1(n) = z and
A_0(n) = (1-z)(gamma_{n+1} - gamma_n), and the Laguerre-Freud equations

    z (1 + beta_{n+1} - beta_n) = A_0(n+1) - A_0(n)
    1 + beta_{n-1} - beta_n = A_0(n-1) - A_0(n)

sum to beta_n = beta_0 + n (1+z)/(1-z) and
gamma_{n+1} = gamma_n + gamma_1 + 2 n z / (1-z)**2.

Copyright (C) 2025 Paulo Ferreira de Castro

Licensed under the Open Software License version 3.0, a copy of which can be
found in the LICENSE file.
"""

import logging

from ..numerics.scalar import Scalar
from ..oracle.oracle import Method, RecurrenceTable
from .error import InvalidZ, SingularRun

_LOGGER = logging.getLogger(__name__)


def _check_z(z: Scalar):
    if z.value in (0, 1):
        raise InvalidZ(f"Meixner recurrences need z not in {{0, 1}}, got z={z}")


def meixner_closed_form(a: Scalar, z: Scalar, n_max: int) -> RecurrenceTable:
    """beta_n = (n + (n+a) z)/(1-z), gamma_n = n (n+a-1) z/(1-z)**2."""
    _check_z(z)
    arith = z.arith
    one_minus_z = 1 - z
    betas = tuple((n + (a + n) * z) / one_minus_z for n in range(n_max + 1))
    gammas = (arith.zero(),) + tuple(
        (a + (n - 1)) * z * n / (one_minus_z * one_minus_z) for n in range(1, n_max + 1)
    )
    return RecurrenceTable(betas, gammas, Method.CLOSED_FORM)


def meixner_lf_run(a: Scalar, z: Scalar, n_max: int) -> RecurrenceTable:
    """Iterate the summed Laguerre-Freud relations from beta_0 = az/(1-z), gamma_1 = az/(1-z)**2.

    The auxiliary sequence A_0(n) is carried along and both Laguerre-Freud
    equations are checked at every step; under the rational contract a
    mismatch raises SingularRun.
    """
    _check_z(z)
    arith = z.arith
    one_minus_z = 1 - z
    slope = (1 + z) / one_minus_z
    curvature = 2 * z / (one_minus_z * one_minus_z)

    betas = [a * z / one_minus_z]
    # gamma_{N+1} is needed for the last A_0 anchor.
    gammas = [arith.zero(), a * z / (one_minus_z * one_minus_z)]
    for n in range(1, n_max + 1):
        betas.append(betas[-1] + slope)
        gammas.append(gammas[n] + gammas[1] + curvature * n)

    a0 = [one_minus_z * (gammas[n + 1] - gammas[n]) for n in range(n_max + 1)]
    for n in range(n_max):
        # (M1) at n and (M3) at n+1.
        forward = z * (1 + betas[n + 1] - betas[n]) - (a0[n + 1] - a0[n])
        backward = (1 + betas[n] - betas[n + 1]) - (a0[n] - a0[n + 1])
        if __debug__:
            _LOGGER.debug(
                "meixner_lf_run: n=%d A_0=%s residuals=(%s, %s)", n, a0[n], forward, backward
            )
        if arith.is_exact and not (forward.is_exact_zero() and backward.is_exact_zero()):
            raise SingularRun("Meixner Laguerre-Freud anchors are inconsistent", n)

    return RecurrenceTable(tuple(betas), tuple(gammas[: n_max + 1]), Method.LF_MEIXNER)


def meixner_a0(rec: RecurrenceTable, z: Scalar) -> list[Scalar]:
    """A_0(n) = (1-z)(gamma_{n+1} - gamma_n) for n = 0..N-1."""
    return [(1 - z) * (rec.gamma[n + 1] - rec.gamma[n]) for n in range(rec.n_max)]
