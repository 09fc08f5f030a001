"""Residual statistics and the verification report.

Copyright (C) 2025 Paulo Ferreira de Castro

Licensed under the Open Software License version 3.0, a copy of which can be
found in the LICENSE file.
"""

from dataclasses import dataclass, field
from typing import Any

from ..numerics.scalar import Scalar


@dataclass
class ResidualStat:
    """Running maximum of |residual| over the instances of one identity."""

    name: str
    max_abs: Any = 0
    max_err: Any = 0
    instances: int = 0
    skipped: int = 0
    # (n, k) or (n, m) of the largest residual.
    worst_at: tuple[int, ...] | None = None

    def observe(self, residual: Scalar, at: tuple[int, ...] | None = None):
        magnitude = abs(residual.value)
        if self.instances == 0 or magnitude > self.max_abs:
            self.max_abs = magnitude
            self.worst_at = at
        if residual.err > self.max_err:
            self.max_err = residual.err
        self.instances += 1

    def skip(self):
        self.skipped += 1

    def passes(self, tolerance: Any) -> bool:
        return self.max_abs <= tolerance

    def as_dict(self) -> dict[str, Any]:
        return {
            "max_abs": self.max_abs,
            "max_err": self.max_err,
            "instances": self.instances,
            "skipped": self.skipped,
            "worst_at": list(self.worst_at) if self.worst_at is not None else None,
        }


ResidualGroup = dict[str, ResidualStat]


def residual_group(*names: str) -> ResidualGroup:
    return {name: ResidualStat(name) for name in names}


@dataclass
class VerificationReport:
    family: str
    params: dict[str, Any]
    n_max: int
    # None under the rational contract.
    precision_bits: int | None
    tolerance: Any
    comparisons: ResidualGroup = field(default_factory=dict)
    residuals: ResidualGroup = field(default_factory=dict)

    def merge(self, group: ResidualGroup):
        self.residuals.update(group)

    @property
    def verdicts(self) -> dict[str, bool]:
        stats = list(self.comparisons.values()) + list(self.residuals.values())
        return {s.name: s.passes(self.tolerance) for s in stats}

    @property
    def verdict(self) -> bool:
        return all(self.verdicts.values())

    def failures(self) -> list[ResidualStat]:
        stats = list(self.comparisons.values()) + list(self.residuals.values())
        return [s for s in stats if not s.passes(self.tolerance)]

    def as_dict(self) -> dict[str, Any]:
        return {
            "family": self.family,
            "params": self.params,
            "n_max": self.n_max,
            "precision_bits": self.precision_bits,
            "tolerance": self.tolerance,
            "comparisons": {
                name: stat.max_abs if stat.instances else None
                for name, stat in self.comparisons.items()
            },
            "residuals": {name: stat.as_dict() for name, stat in self.residuals.items()},
            "verdicts": self.verdicts,
            "verdict": "pass" if self.verdict else "fail",
        }
