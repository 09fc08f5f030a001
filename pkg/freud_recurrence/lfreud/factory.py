"""Factory functions selecting the recurrence engine of a family.

Copyright (C) 2025 Paulo Ferreira de Castro

Licensed under the Open Software License version 3.0, a copy of which can be
found in the LICENSE file.
"""

import logging
from collections.abc import Sequence
from enum import Enum
from typing import Protocol

from ..moments.error import SeedCountMismatch
from ..moments.moments import default_moments, recurrence_order
from ..numerics.scalar import Arithmetic, Scalar
from ..oracle.oracle import RecurrenceTable, recurrence_from_moments
from ..weights.families import Family
from ..weights.weights import WeightSpec
from .error import NoEngine
from .ghahn import GHahnParams, ghahn_lf_run
from .hahn import hahn_closed_form, hahn_lf_run
from .meixner import meixner_closed_form, meixner_lf_run

_LOGGER = logging.getLogger(__name__)


class TableMode(str, Enum):
    LF = "lf"
    CLOSED = "closed"
    ORACLE = "oracle"


class Engine(Protocol):
    def __call__(
        self,
        spec: WeightSpec,
        arith: Arithmetic,
        n_max: int,
        seeds: Sequence[Scalar] | None,
    ) -> RecurrenceTable: ...


def _params(spec: WeightSpec, arith: Arithmetic) -> list[Scalar]:
    return [arith.scalar(v) for v in spec.num_params + spec.den_params]


def _meixner_closed(spec, arith, n_max, seeds):
    (a,) = _params(spec, arith)
    return meixner_closed_form(a, arith.scalar(spec.z), n_max)


def _meixner_lf(spec, arith, n_max, seeds):
    (a,) = _params(spec, arith)
    return meixner_lf_run(a, arith.scalar(spec.z), n_max)


def _ghahn_lf(spec, arith, n_max, seeds):
    pair = (seeds[0], seeds[1]) if seeds else None
    return ghahn_lf_run(GHahnParams.from_spec(spec, arith), n_max, pair, spec)


def _hahn_closed(spec, arith, n_max, seeds):
    return hahn_closed_form(*_params(spec, arith), n_max)


def _hahn_lf(spec, arith, n_max, seeds):
    return hahn_lf_run(*_params(spec, arith), n_max)


_ENGINES: dict[tuple[Family, TableMode], Engine] = {
    (Family.MEIXNER, TableMode.CLOSED): _meixner_closed,
    (Family.MEIXNER, TableMode.LF): _meixner_lf,
    (Family.GHAHN1, TableMode.LF): _ghahn_lf,
    (Family.HAHN, TableMode.CLOSED): _hahn_closed,
    (Family.HAHN, TableMode.LF): _hahn_lf,
    (Family.HAHN_CLASSICAL, TableMode.CLOSED): _hahn_closed,
    (Family.HAHN_CLASSICAL, TableMode.LF): _hahn_lf,
}


def has_engine(family: Family, mode: TableMode) -> bool:
    return mode is TableMode.ORACLE or (family, mode) in _ENGINES


def oracle_moment_seeds(
    spec: WeightSpec, arith: Arithmetic, seeds: Sequence[Scalar] | None
) -> list[Scalar] | None:
    """Normalized seed moments implied by (beta_0, gamma_1): nu_1 = beta_0, nu_2 = gamma_1 + beta_0**2."""
    if not seeds:
        return None
    order = recurrence_order(spec)
    beta0, gamma1 = seeds
    implied = [arith.one(), beta0, gamma1 + beta0 * beta0]
    if order > len(implied):
        raise SeedCountMismatch(
            f"beta_0 and gamma_1 determine 3 moments, the recurrence of {spec} needs {order}"
        )
    return implied[:order]


def oracle_table(
    spec: WeightSpec,
    n_max: int,
    arith: Arithmetic,
    seeds: Sequence[Scalar] | None = None,
) -> RecurrenceTable:
    mom = default_moments(
        spec, 2 * n_max + 1, arith, seeds=oracle_moment_seeds(spec, arith, seeds)
    )
    return recurrence_from_moments(mom, n_max)


def make_table(
    family: Family,
    spec: WeightSpec,
    mode: TableMode,
    n_max: int,
    arith: Arithmetic,
    seeds: Sequence[Scalar] | None = None,
) -> RecurrenceTable:
    """Compute beta_0..beta_N, gamma_0..gamma_N with the engine of (family, mode).

    Raises:
        NoEngine: the family has no engine for the mode.
    """
    if mode is TableMode.ORACLE:
        return oracle_table(spec, n_max, arith, seeds)
    try:
        engine = _ENGINES[(family, mode)]
    except KeyError as e:
        raise NoEngine(
            f"Family {family.value} has no {mode.value} engine; use --mode oracle"
        ) from e
    _LOGGER.info("make_table: %s %s engine, N=%d, %r", family.value, mode.value, n_max, arith)
    return engine(spec, arith, n_max, seeds)


def irrational_input(
    family: Family, spec: WeightSpec, mode: TableMode, has_seeds: bool
) -> str | None:
    """Why the pipeline needs a non-rational value, or None when it is rational-closed."""
    if spec.support_cutoff is not None:
        return None
    if mode is TableMode.ORACLE:
        order = recurrence_order(spec)
        if order <= 1 or (has_seeds and order <= 3):
            return None
        return f"the seed moments of {spec} are non-terminating hypergeometric series"
    if family is Family.GHAHN1 and not has_seeds:
        return "beta_0 = mu_1/mu_0 is a ratio of non-terminating 2F1 series"
    return None
