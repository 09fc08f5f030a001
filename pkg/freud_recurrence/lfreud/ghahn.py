"""Laguerre-Freud engine for the Generalized Hahn weights of type I.

The weight is (a1)_x (a2)_x / ((b+1)_x x!) z**x with z != 1. With

    u_n = beta_n + beta_{n-1} - n + b + 1,
    v_n = beta_n + beta_{n-1} + n - 1 + a1 + a2,
    w_n = (u_n - z v_n) gamma_n,   w_0 = 0,

the recurrence coefficients satisfy

    (1-z)(gamma_{n+1} - gamma_{n-1}) = z v_n (db + 1) - u_n (db - 1),      (LF1)
    w_{n+1} - 2 w_n + w_{n-1} = u_n (db - 1) + gamma_{n+1} - gamma_{n-1},  (LF2)

where db = beta_n - beta_{n-1}. The run steps (LF1) for gamma_{n+1} and the
auxiliary sequence A_0(n) = w_{n+1} - w_n for beta_{n+1}, starting from
A_0(0) = beta_0**2 + b beta_0 + gamma_1. (LF2) is not imposed, only checked.

Copyright (C) 2025 Paulo Ferreira de Castro

Licensed under the Open Software License version 3.0, a copy of which can be
found in the LICENSE file.
"""

import logging
from dataclasses import dataclass, replace

from ..error import FreudError
from ..moments.moments import pearson_seeds
from ..numerics.scalar import Arithmetic, Scalar
from ..oracle.oracle import Method, RecurrenceTable
from ..weights.weights import WeightSpec
from .error import InvalidZ, SeedFailure, SingularRun

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class GHahnParams:
    a1: Scalar
    a2: Scalar
    b: Scalar
    z: Scalar

    @classmethod
    def from_spec(cls, spec: WeightSpec, arith: Arithmetic) -> "GHahnParams":
        (a1, a2), (b,) = spec.num_params, spec.den_params
        return cls(arith.scalar(a1), arith.scalar(a2), arith.scalar(b), arith.scalar(spec.z))

    def u(self, n: int, beta_n: Scalar, beta_prev: Scalar) -> Scalar:
        return beta_n + beta_prev + (self.b + (1 - n))

    def v(self, n: int, beta_n: Scalar, beta_prev: Scalar) -> Scalar:
        return beta_n + beta_prev + (self.a1 + self.a2 + (n - 1))


@dataclass(frozen=True)
class GHahnState:
    n: int
    beta_prev: Scalar
    beta_cur: Scalar
    gamma_prev: Scalar
    gamma_cur: Scalar
    a0_prev: Scalar


def ghahn_seed_gamma1(a1: Scalar, a2: Scalar, b: Scalar, z: Scalar, beta0: Scalar) -> Scalar:
    """gamma_1 = [(a1+a2-b) beta_0 + a1 a2]/(1-z) - (beta_0+a1)(beta_0+a2)."""
    if z.value == 1:
        raise InvalidZ("gamma_1 from beta_0 needs z != 1; use the Hahn engine at z = 1")
    return ((a1 + a2 - b) * beta0 + a1 * a2) / (1 - z) - (beta0 + a1) * (beta0 + a2)


def ghahn_seeds_auto(spec: WeightSpec, arith: Arithmetic) -> tuple[Scalar, Scalar]:
    """beta_0 = mu_1/mu_0 from the hypergeometric moment series, and gamma_1 from beta_0."""
    try:
        _, beta0 = pearson_seeds(spec, arith, normalized=True)
    except FreudError as e:
        raise SeedFailure(f"Cannot compute beta_0 = mu_1/mu_0 for {spec}: {e}") from e
    params = GHahnParams.from_spec(spec, arith)
    return beta0, ghahn_seed_gamma1(params.a1, params.a2, params.b, params.z, beta0)


class GHahnStepper:
    """Steps the Laguerre-Freud equations one index at a time."""

    def __init__(self, params: GHahnParams, beta0: Scalar, gamma1: Scalar):
        if params.z.value == 1:
            raise InvalidZ("The Generalized Hahn engine needs z != 1; use the Hahn engine")
        self._p = params
        self._one_minus_z = 1 - params.z
        if gamma1.is_indeterminate():
            raise SingularRun("gamma_1 vanishes, beta_1 is undetermined", 1)
        a0 = beta0 * beta0 + params.b * beta0 + gamma1
        beta1 = self._solve_beta(0, a0, beta0.arith.zero(), gamma1, beta0)
        self.state = GHahnState(1, beta0, beta1, beta0.arith.zero(), gamma1, a0)
        if __debug__:
            _LOGGER.debug(
                "%s: A_0(0)=%s beta_1=%s", type(self).__name__, a0, beta1
            )

    def _solve_beta(
        self, n: int, a0: Scalar, w_n: Scalar, gamma_next: Scalar, beta_n: Scalar
    ) -> Scalar:
        """beta_{n+1} from (u_{n+1} - z v_{n+1}) gamma_{n+1} = A_0(n) + w_n."""
        p = self._p
        rhs = (a0 + w_n) / gamma_next - (p.b - n) + p.z * (p.a1 + p.a2 + n)
        return rhs / self._one_minus_z - beta_n

    def step(self) -> GHahnState:
        """Advance from index n to n+1, producing gamma_{n+1} and beta_{n+1}."""
        s, p = self.state, self._p
        n = s.n
        d_beta = s.beta_cur - s.beta_prev
        u = p.u(n, s.beta_cur, s.beta_prev)
        v = p.v(n, s.beta_cur, s.beta_prev)
        gamma_next = s.gamma_prev + (p.z * v * (d_beta + 1) - u * (d_beta - 1)) / self._one_minus_z
        if gamma_next.is_indeterminate():
            raise SingularRun("gamma vanishes, the next beta is undetermined", n + 1)
        a0 = s.a0_prev + u * (d_beta - 1) + (gamma_next - s.gamma_prev)
        w_n = (u - p.z * v) * s.gamma_cur
        beta_next = self._solve_beta(n, a0, w_n, gamma_next, s.beta_cur)
        self.state = replace(
            s,
            n=n + 1,
            beta_prev=s.beta_cur,
            beta_cur=beta_next,
            gamma_prev=s.gamma_cur,
            gamma_cur=gamma_next,
            a0_prev=a0,
        )
        if __debug__:
            _LOGGER.debug(
                "%s: n=%d beta=%s gamma=%s A_0=%s",
                type(self).__name__,
                n + 1,
                beta_next,
                gamma_next,
                a0,
            )
        return self.state


def ghahn_lf_run(
    params: GHahnParams,
    n_max: int,
    seeds: tuple[Scalar, Scalar] | None = None,
    spec: WeightSpec | None = None,
) -> RecurrenceTable:
    """beta_0..beta_N and gamma_0..gamma_N in O(N) steps.

    Without explicit (beta_0, gamma_1) seeds, `spec` supplies the moment
    series the seeds are summed from.

    Raises:
        InvalidZ: z = 1.
        SeedFailure: the seeds cannot be summed.
        SingularRun: some gamma_{n+1} vanishes.
    """
    if params.z.value in (0, 1):
        raise InvalidZ(f"The Generalized Hahn engine needs z not in {{0, 1}}, got z={params.z}")
    arith = params.z.arith
    if seeds is None:
        if spec is None:
            raise SeedFailure("Automatic seeds need the WeightSpec of the weight")
        seeds = ghahn_seeds_auto(spec, arith)
    beta0, gamma1 = (arith.scalar(s) for s in seeds)
    if n_max == 0:
        return RecurrenceTable((beta0,), (arith.zero(),), Method.LF_GHAHN1)
    stepper = GHahnStepper(params, beta0, gamma1)
    betas, gammas = [beta0, stepper.state.beta_cur], [arith.zero(), gamma1]
    while len(betas) <= n_max:
        state = stepper.step()
        betas.append(state.beta_cur)
        gammas.append(state.gamma_cur)
    return RecurrenceTable(tuple(betas), tuple(gammas), Method.LF_GHAHN1)


def lf_residuals(rec: RecurrenceTable, params: GHahnParams) -> dict[str, list[Scalar]]:
    """Residuals of (LF1), (LF2) and of the seed identities, for any table.

    "seed" holds the beta_0 identity (1-z)[gamma_1 + (beta_0+a1)(beta_0+a2)]
    = (a1+a2-b) beta_0 + a1 a2 and the A_0(0) identity w_1 = beta_0**2 +
    b beta_0 + gamma_1. At z = 1, (LF1) is the Hahn relation
    v_n (db + 1) = u_n (db - 1).
    """
    p, beta, gamma = params, rec.beta, rec.gamma
    arith = rec.arith
    result: dict[str, list[Scalar]] = {"lf1": [], "lf2": [], "seed": []}
    if rec.n_max < 1:
        return result

    def w(n: int) -> Scalar:
        if n == 0:
            return arith.zero()
        return (p.u(n, beta[n], beta[n - 1]) - p.z * p.v(n, beta[n], beta[n - 1])) * gamma[n]

    b0, g1 = beta[0], gamma[1]
    result["seed"].append(
        (1 - p.z) * (g1 + (b0 + p.a1) * (b0 + p.a2)) - ((p.a1 + p.a2 - p.b) * b0 + p.a1 * p.a2)
    )
    result["seed"].append(w(1) - (b0 * b0 + p.b * b0 + g1))
    for n in range(1, rec.n_max):
        d_beta = beta[n] - beta[n - 1]
        u = p.u(n, beta[n], beta[n - 1])
        v = p.v(n, beta[n], beta[n - 1])
        rhs1 = p.z * v * (d_beta + 1) - u * (d_beta - 1)
        result["lf1"].append((1 - p.z) * (gamma[n + 1] - gamma[n - 1]) - rhs1)
        rhs2 = u * (d_beta - 1) + gamma[n + 1] - gamma[n - 1]
        result["lf2"].append(w(n + 1) - 2 * w(n) + w(n - 1) - rhs2)
    return result
