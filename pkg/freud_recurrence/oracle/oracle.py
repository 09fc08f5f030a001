"""Recurrence coefficients from moments, the O(N**2) reference path.

The monic orthogonal polynomials satisfy

    P_{n+1}(x) = (x - beta_n) P_n(x) - gamma_n P_{n-1}(x),  gamma_0 = 0,

with h_n = L[P_n**2], beta_n = L[x P_n**2] / h_n and gamma_n = h_n / h_{n-1}.
Here they are built in the monomial basis and L is applied through the
moments, so this path shares nothing with the Laguerre-Freud engines.

Copyright (C) 2025 Paulo Ferreira de Castro

Licensed under the Open Software License version 3.0, a copy of which can be
found in the LICENSE file.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any

from ..moments.error import InsufficientMoments
from ..moments.moments import MomentSequence
from ..numerics import poly
from ..numerics.poly import Poly
from ..numerics.scalar import Arithmetic, Scalar
from .error import QuasiDefiniteFailure

_LOGGER = logging.getLogger(__name__)


class Method(str, Enum):
    ORACLE = "oracle"
    LF_MEIXNER = "lf_meixner"
    LF_GHAHN1 = "lf_ghahn1"
    LF_HAHN = "lf_hahn"
    CLOSED_FORM = "closed_form"


@dataclass(frozen=True)
class RecurrenceTable:
    beta: tuple[Scalar, ...]
    gamma: tuple[Scalar, ...]
    method: Method
    h: tuple[Scalar, ...] | None = None

    def __post_init__(self):
        if not self.beta or len(self.beta) != len(self.gamma):
            raise ValueError("beta and gamma must be non-empty and of equal length")
        if not self.gamma[0].is_exact_zero():
            raise ValueError(f"gamma_0 must be 0, got {self.gamma[0]}")
        if self.h is not None and len(self.h) != len(self.beta):
            raise ValueError("h must have the same length as beta")

    @property
    def n_max(self) -> int:
        return len(self.beta) - 1

    @property
    def arith(self) -> Arithmetic:
        return self.beta[0].arith

    def truncated(self, n_max: int) -> "RecurrenceTable":
        end = n_max + 1
        h = self.h[:end] if self.h is not None else None
        return RecurrenceTable(self.beta[:end], self.gamma[:end], self.method, h)

    def max_err(self) -> Any:
        return max(s.err for s in self.beta + self.gamma)


def functional_apply(mom: MomentSequence, coeffs: Poly) -> Scalar:
    """L[sum(c_k x**k)] = sum(c_k mu_k)."""
    if len(coeffs) > len(mom):
        raise InsufficientMoments(
            f"A degree {len(coeffs) - 1} polynomial needs {len(coeffs)} moments, have {len(mom)}"
        )
    acc = mom.arith.zero()
    for c, m in zip(coeffs, mom):
        acc = acc + c * m
    return acc


def functional_apply_product(mom: MomentSequence, f: Poly, g: Poly) -> Scalar:
    """L[f g], without expanding the product."""
    if len(f) + len(g) - 1 > len(mom):
        raise InsufficientMoments(
            f"A degree {len(f) + len(g) - 2} product needs {len(f) + len(g) - 1} moments,"
            f" have {len(mom)}"
        )
    acc = mom.arith.zero()
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            acc = acc + a * b * mom[i + j]
    return acc


def functional_apply_shifted(mom: MomentSequence, coeffs: Poly, shift: int) -> Scalar:
    """L[x**shift * sum(c_k x**k)]."""
    if len(coeffs) + shift > len(mom):
        raise InsufficientMoments(
            f"L[x**{shift} f] with deg f = {len(coeffs) - 1} needs {len(coeffs) + shift} moments,"
            f" have {len(mom)}"
        )
    acc = mom.arith.zero()
    for k, c in enumerate(coeffs):
        acc = acc + c * mom[k + shift]
    return acc


def monic_polys(rec: RecurrenceTable, n_max: int | None = None) -> list[Poly]:
    """Coefficients of P_0..P_N from the three-term recurrence (N <= rec.n_max + 1)."""
    if n_max is None:
        n_max = rec.n_max
    if n_max > rec.n_max + 1:
        raise ValueError(f"P_{n_max} needs beta up to index {n_max - 1}, have {rec.n_max}")
    arith = rec.arith
    polys: list[Poly] = [(arith.one(),)]
    prev: Poly = ()
    for n in range(n_max):
        cur = polys[-1]
        nxt = _next_poly(cur, prev, n, rec.beta[n], rec.gamma[n])
        prev = cur
        polys.append(nxt)
    return polys


def _next_poly(cur: Poly, prev: Poly, n: int, beta: Scalar, gamma: Scalar) -> Poly:
    """(x - beta_n) P_n - gamma_n P_{n-1}, built from the point values of beta_n and gamma_n.

    The coefficients carry rounding errors only; the error bounds of beta
    and gamma stay in the table and do not re-enter the sums L[P_n x**k].
    """
    nxt = poly.sub(poly.mul_x(cur), poly.scale(cur, beta.point()))
    if n:
        nxt = poly.sub(nxt, poly.scale(prev, gamma.point()))
    return nxt


def recurrence_from_moments(mom: MomentSequence, n_max: int) -> RecurrenceTable:
    """beta_0..beta_N, gamma_0..gamma_N and h_0..h_N from mu_0..mu_{2N+1}.

    In float mode the error bounds cover the moment errors and the rounding
    of the functional sums for the polynomials actually built.

    Raises:
        InsufficientMoments: fewer than 2N+2 moments.
        QuasiDefiniteFailure: some h_n is zero or indeterminate.
    """
    if len(mom) < 2 * n_max + 2:
        raise InsufficientMoments(
            f"Recurrence coefficients up to n={n_max} need {2 * n_max + 2} moments,"
            f" have {len(mom)}"
        )
    arith = mom.arith
    betas: list[Scalar] = []
    gammas: list[Scalar] = []
    hs: list[Scalar] = []
    prev: Poly = ()
    cur: Poly = (arith.one(),)
    for n in range(n_max + 1):
        # L[P_n**2] = L[P_n x**n] by orthogonality to lower degrees.
        h = functional_apply_shifted(mom, cur, n)
        if h.is_indeterminate():
            raise QuasiDefiniteFailure("The moment functional is not quasi-definite", n)
        # L[x P_n**2] = L[P_n x**(n+1)] + c_{n-1} h_n, c_{n-1} the x**(n-1) coefficient.
        x_norm = functional_apply_shifted(mom, cur, n + 1)
        if n:
            x_norm = x_norm + cur[n - 1] * h
        beta = x_norm / h
        gamma = h / hs[-1] if n else arith.zero()
        betas.append(beta)
        gammas.append(gamma)
        hs.append(h)
        if __debug__:
            _LOGGER.debug("recurrence_from_moments: n=%d beta=%s gamma=%s", n, beta, gamma)
        if n < n_max:
            prev, cur = cur, _next_poly(cur, prev, n, beta, gamma)
    return RecurrenceTable(tuple(betas), tuple(gammas), Method.ORACLE, tuple(hs))
