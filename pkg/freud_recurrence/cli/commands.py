"""The table, verify, moments and structure commands.

Copyright (C) 2025 Paulo Ferreira de Castro

Licensed under the Open Software License version 3.0, a copy of which can be
found in the LICENSE file.
"""

import asyncio
import logging
import sys
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Final, TextIO

from ..config.schema import Command, OutputFormat, RunConfig
from ..lfreud.error import SingularRun
from ..lfreud.factory import TableMode, has_engine, make_table, oracle_moment_seeds
from ..lfreud.ghahn import GHahnParams, lf_residuals
from ..lfreud.meixner import meixner_a0
from ..moments.moments import MomentSequence, default_moments
from ..numerics.scalar import Arithmetic, Scalar
from ..oracle.error import QuasiDefiniteFailure
from ..oracle.oracle import RecurrenceTable, recurrence_from_moments
from ..structure.report import ResidualGroup, ResidualStat, VerificationReport
from ..structure.structure import (
    de_pointwise_check,
    orthogonality_check,
    representation_check,
    structure_coeffs,
    summation_moments,
    theorem1_residuals,
)
from ..weights.error import Divergent
from ..weights.families import Family
from ..weights.weights import WeightSpec, classify_convergence
from . import output

_LOGGER = logging.getLogger(__name__)

DEFAULT_FLOAT_TOLERANCE: Final = Fraction(1, 10**20)
# The oracle is re-run once at double precision when its error bound exceeds this.
ORACLE_ERR_LIMIT: Final = Fraction(1, 10**25)
MAX_PRECISION_BITS: Final = 1024
# A completed verification whose verdict is fail.
VERIFY_FAILED_EXIT_CODE: Final = 1

LF_CHECKED_FAMILIES: Final = (Family.GHAHN1, Family.HAHN, Family.HAHN_CLASSICAL)


def _emit(cfg: RunConfig, header: list[str], rows: list[list[output.Cell]], out: TextIO):
    if cfg.format is OutputFormat.JSON:
        output.write_json(output.records(header, rows), cfg.digits, out)
    else:
        output.write_csv(header, rows, cfg.digits, out)


def cmd_table(cfg: RunConfig, out: TextIO) -> int:
    arith = cfg.make_arith()
    spec = cfg.weight_spec()
    rec = make_table(cfg.family, spec, cfg.mode, cfg.n, arith, cfg.seed_scalars(arith))
    rows = [[n, b, g] for n, (b, g) in enumerate(zip(rec.beta, rec.gamma))]
    _emit(cfg, ["n", "beta", "gamma"], rows, out)
    return 0


def cmd_moments(cfg: RunConfig, out: TextIO) -> int:
    arith = cfg.make_arith()
    spec = cfg.weight_spec()
    conv = classify_convergence(spec)
    if not conv.permits(cfg.n):
        raise Divergent(f"Only moments up to order {conv.order_bound} converge for {spec}")
    seeds = oracle_moment_seeds(spec, arith, cfg.seed_scalars(arith))
    if seeds is not None and not cfg.normalized:
        _LOGGER.info("cmd_moments: moments from explicit seeds are normalized")
    mom = default_moments(spec, cfg.n, arith, normalized=cfg.normalized, seeds=seeds)
    _emit(cfg, ["n", "mu"], [[n, m] for n, m in enumerate(mom)], out)
    return 0


@dataclass
class _OracleRun:
    spec: WeightSpec
    # Moments and recurrence past N, for bands reaching P_{N+p}.
    moments: MomentSequence
    rec: RecurrenceTable


def _oracle_run(cfg: RunConfig, arith: Arithmetic) -> _OracleRun:
    spec = cfg.weight_spec()
    width = max(spec.p, spec.q + 1)
    n_ext = cfg.n + width + 1
    if spec.support_cutoff is not None and cfg.n <= spec.support_cutoff:
        n_ext = min(n_ext, spec.support_cutoff)
    order = max(2 * n_ext + 1, cfg.n + n_ext + width)
    seeds = oracle_moment_seeds(spec, arith, cfg.seed_scalars(arith))
    mom = default_moments(spec, order, arith, seeds=seeds)
    return _OracleRun(spec, mom, recurrence_from_moments(mom, n_ext))


def cmd_structure(cfg: RunConfig, out: TextIO) -> int:
    arith = cfg.make_arith()
    run = _oracle_run(cfg, arith)
    sc = structure_coeffs(run.spec, run.rec, cfg.n, run.moments)
    ks = range(min(sc.a_band.start, sc.b_band.start), max(sc.a_band.stop, sc.b_band.stop))
    rows: list[list[output.Cell]] = []
    for n in range(cfg.n + 1):
        for k in ks:
            a, b = sc.A.get((k, n)), sc.B.get((k, n))
            if a is not None or b is not None:
                rows.append([n, k, a, b])
    _emit(cfg, ["n", "k", "A", "B"], rows, out)
    return 0


def _diff_stat(name: str, xs: tuple[Scalar, ...], ys: tuple[Scalar, ...]) -> ResidualStat:
    stat = ResidualStat(name)
    for n, (x, y) in enumerate(zip(xs, ys)):
        stat.observe(x - y, (n,))
    return stat


def _structure_group(
    cfg: RunConfig, run: _OracleRun, table: RecurrenceTable, z: Scalar
) -> ResidualGroup:
    sc = structure_coeffs(run.spec, run.rec, cfg.n, run.moments)
    group = theorem1_residuals(sc, run.rec, z)
    group.update(de_pointwise_check(run.spec, run.rec, sc))
    if cfg.family is Family.MEIXNER and table.n_max >= 1:
        anchor = ResidualStat("lf_anchor")
        for n, a0 in enumerate(meixner_a0(table, z)):
            anchor.observe(a0 - sc.A[(0, n)], (n,))
        group["lf_anchor"] = anchor
    return group


def _lf_group(table: RecurrenceTable, spec: WeightSpec) -> ResidualGroup:
    residuals = lf_residuals(table, GHahnParams.from_spec(spec, table.arith))
    group: ResidualGroup = {}
    for name, values in residuals.items():
        stat = ResidualStat(name)
        for n, value in enumerate(values):
            stat.observe(value, (n,))
        group[name] = stat
    return group


async def _residual_groups(
    cfg: RunConfig, run: _OracleRun, table: RecurrenceTable, ortho_moments: MomentSequence
) -> list[ResidualGroup]:
    """The residual groups are independent; each runs in a worker thread."""
    z = table.arith.scalar(run.spec.z)
    jobs: list[Callable[[], ResidualGroup]] = [
        lambda: _structure_group(cfg, run, table, z),
        lambda: orthogonality_check(run.spec, table, cfg.n, mom=ortho_moments).group(),
        lambda: representation_check(cfg.family, run.spec, table),
    ]
    if cfg.family in LF_CHECKED_FAMILIES:
        jobs.append(lambda: _lf_group(table, run.spec))
    return await asyncio.gather(*(asyncio.to_thread(job) for job in jobs))


def _native(arith: Arithmetic, value: Fraction) -> Any:
    if arith.is_exact:
        return value
    return arith.ctx.mpf(value.numerator) / value.denominator


def _tolerance(cfg: RunConfig, arith: Arithmetic) -> Any:
    tol = cfg.tolerance
    if tol is None:
        tol = Fraction(0) if arith.is_exact else DEFAULT_FLOAT_TOLERANCE
    return _native(arith, tol)


def verify_once(cfg: RunConfig, arith: Arithmetic) -> tuple[VerificationReport, Any]:
    """One verification pass at a fixed arithmetic; returns the report and the oracle error."""
    run = _oracle_run(cfg, arith)
    oracle = run.rec.truncated(cfg.n)
    report = VerificationReport(
        cfg.family.value,
        cfg.params(),
        cfg.n,
        None if arith.is_exact else arith.precision_bits,
        _tolerance(cfg, arith),
    )
    if cfg.mode is TableMode.ORACLE or not has_engine(cfg.family, cfg.mode):
        _LOGGER.info(
            "verify: no %s engine for %s, checking the oracle table only",
            cfg.mode.value,
            cfg.family.value,
        )
        table = oracle
    else:
        table = make_table(
            cfg.family, run.spec, cfg.mode, cfg.n, arith, cfg.seed_scalars(arith)
        )
        report.comparisons = {
            "max_beta_diff": _diff_stat("max_beta_diff", table.beta, oracle.beta),
            "max_gamma_diff": _diff_stat("max_gamma_diff", table.gamma, oracle.gamma),
        }

    # Sums that may call into the mpmath context are done before the threads start.
    if cfg.seeds is not None:
        ortho_moments = run.moments
    else:
        ortho_moments = summation_moments(run.spec, 2 * cfg.n, arith)
    for group in asyncio.run(_residual_groups(cfg, run, table, ortho_moments)):
        report.merge(group)
    return report, oracle.max_err()


def _needs_more_precision(report: VerificationReport) -> bool:
    return any(s.max_err > report.tolerance / 10 for s in report.failures())


def cmd_verify(cfg: RunConfig, out: TextIO) -> int:
    """Compare the engine with the oracle and check every structure identity.

    Float runs are repeated at double precision, up to MAX_PRECISION_BITS,
    when the oracle or the engine breaks down numerically or a failing
    residual has an error bound above a tenth of the tolerance. An oracle
    error bound above ORACLE_ERR_LIMIT triggers one repetition.
    """
    arith = cfg.make_arith()
    err_escalated = False
    while True:
        at_limit = arith.is_exact or arith.precision_bits * 2 > MAX_PRECISION_BITS
        try:
            report, oracle_err = verify_once(cfg, arith)
        except (QuasiDefiniteFailure, SingularRun) as e:
            if at_limit:
                raise
            bits = arith.precision_bits * 2
            _LOGGER.warning("verify: %s, repeating at %d bits", e, bits)
            arith = cfg.make_arith(bits)
            continue
        if at_limit:
            break
        if not err_escalated and oracle_err > _native(arith, ORACLE_ERR_LIMIT):
            err_escalated = True
            reason = f"oracle error bound {output.format_value(oracle_err, 3)}"
        elif not report.verdict and _needs_more_precision(report):
            reason = "failing residuals within their error bounds"
        else:
            break
        bits = arith.precision_bits * 2
        _LOGGER.warning("verify: %s, repeating at %d bits", reason, bits)
        arith = cfg.make_arith(bits)

    output.write_json(report.as_dict(), cfg.digits, out)
    if not report.verdict:
        _LOGGER.warning(
            "verify: failed %s", ", ".join(s.name for s in report.failures())
        )
    return 0 if report.verdict else VERIFY_FAILED_EXIT_CODE


COMMANDS: Final[dict[Command, Callable[[RunConfig, TextIO], int]]] = {
    Command.TABLE: cmd_table,
    Command.VERIFY: cmd_verify,
    Command.MOMENTS: cmd_moments,
    Command.STRUCTURE: cmd_structure,
}


def run_command(cfg: RunConfig, out: TextIO | None = None) -> int:
    return COMMANDS[cfg.command](cfg, sys.stdout if out is None else out)
