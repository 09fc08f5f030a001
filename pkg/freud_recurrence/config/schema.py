"""Run configuration model (command line and TOML run file schema).

Copyright (C) 2025 Paulo Ferreira de Castro

Licensed under the Open Software License version 3.0, a copy of which can be
found in the LICENSE file.
"""

import os
from enum import Enum
from fractions import Fraction
from typing import Annotated, Any, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from ..error import FreudError
from ..lfreud.factory import TableMode, has_engine, irrational_input
from ..numerics.error import ScalarParseError
from ..numerics.scalar import (
    DEFAULT_PRECISION_BITS,
    MIN_PRECISION_BITS,
    Arithmetic,
    Scalar,
    parse_fraction,
)
from ..weights.families import Family, make_weight_spec
from ..weights.weights import WeightSpec

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

PRECISION_ENV_VAR = "FREUD_PRECISION_BITS"


class ConfigError(FreudError):
    pass


class Command(str, Enum):
    TABLE = "table"
    VERIFY = "verify"
    MOMENTS = "moments"
    STRUCTURE = "structure"


class ArithmeticKind(str, Enum):
    RATIONAL = "rational"
    FLOAT = "float"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


def _fraction(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"Not a number: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    # TOML floats are taken at their decimal spelling.
    try:
        return parse_fraction(str(value))
    except ScalarParseError as e:
        raise ValueError(str(e)) from e


def _fraction_list(value: Any) -> list[Fraction]:
    if isinstance(value, str):
        value = [v for v in value.split(",") if v.strip()]
    elif not isinstance(value, (list, tuple)):
        value = [value]
    return [_fraction(v) for v in value]


def pipeline_irrational_input(
    command: Command,
    family: Family,
    spec: WeightSpec,
    mode: TableMode,
    has_seeds: bool,
    normalized: bool,
) -> str | None:
    """Why a command needs a non-rational value, or None when it stays rational."""
    if command is Command.TABLE:
        return irrational_input(family, spec, mode, has_seeds)
    oracle = irrational_input(family, spec, TableMode.ORACLE, has_seeds)
    if command is Command.MOMENTS and oracle is None and spec.support_cutoff is None:
        if not normalized and not has_seeds:
            return "mu_0 is a non-terminating hypergeometric series; use --normalized"
    if command is Command.VERIFY and oracle is None and has_engine(family, mode):
        return irrational_input(family, spec, mode, has_seeds)
    return oracle


class RunConfig(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, extra="forbid")

    command: Command
    family: Family
    # a: numerator parameters, b: denominator parameters of the weight.
    a: list[Fraction] = []
    b: list[Fraction] = []
    z: Optional[Fraction] = None
    # n_points: support size N of the hahn-classical family.
    n_points: Optional[Annotated[int, Field(ge=0)]] = None
    n: Annotated[int, Field(ge=0)]
    mode: TableMode = TableMode.LF
    # None selects rational arithmetic when the pipeline allows it.
    arithmetic: Optional[ArithmeticKind] = None
    precision_bits: Optional[Annotated[int, Field(ge=MIN_PRECISION_BITS)]] = None
    digits: Annotated[int, Field(ge=1)] = 20
    format: OutputFormat = OutputFormat.CSV
    tolerance: Optional[Fraction] = None
    # Explicit (beta_0, gamma_1).
    seeds: Optional[list[Fraction]] = None
    normalized: bool = False
    verbose: int = 0

    @field_validator("a", "b", "seeds", mode="before")
    @classmethod
    def _parse_lists(cls, value: Any) -> Any:
        return None if value is None else _fraction_list(value)

    @field_validator("z", "tolerance", mode="before")
    @classmethod
    def _parse_scalar(cls, value: Any) -> Any:
        return None if value is None else _fraction(value)

    @model_validator(mode="after")
    def _check_pipeline(self) -> "RunConfig":
        if self.seeds is not None and len(self.seeds) != 2:
            raise ValueError(f"--seeds takes beta_0,gamma_1, got {len(self.seeds)} values")
        if self.tolerance is not None and self.tolerance < 0:
            raise ValueError(f"The tolerance must be non-negative, got {self.tolerance}")
        try:
            spec = self.weight_spec()
        except FreudError as e:
            raise ValueError(str(e)) from e
        reason = pipeline_irrational_input(
            self.command, self.family, spec, self.mode, self.seeds is not None, self.normalized
        )
        if self.arithmetic is None:
            self.arithmetic = ArithmeticKind.RATIONAL if reason is None else ArithmeticKind.FLOAT
        elif self.arithmetic is ArithmeticKind.RATIONAL and reason is not None:
            raise ValueError(f"Rational arithmetic is not available: {reason}")
        return self

    # pylint incorrectly reports that the parent has a different number of arguments.
    # pylint: disable=arguments-differ
    def model_post_init(self, context: Any):
        """Use the precision from the environment variable when none was given."""
        if self.precision_bits is None:
            env_str = os.environ.get(PRECISION_ENV_VAR, "").strip()
            if env_str:
                try:
                    bits = int(env_str)
                except ValueError as e:
                    raise ValueError(
                        f"Error validating environment variable ‘{PRECISION_ENV_VAR}’: "
                        f"value ‘{env_str}’ cannot be parsed as type ‘int’"
                    ) from e
                if bits < MIN_PRECISION_BITS:
                    raise ValueError(
                        f"‘{PRECISION_ENV_VAR}’ must be at least {MIN_PRECISION_BITS}, got {bits}"
                    )
                self.precision_bits = bits
            else:
                self.precision_bits = DEFAULT_PRECISION_BITS
        return super().model_post_init(context)

    def weight_spec(self) -> WeightSpec:
        return make_weight_spec(self.family, self.a, self.b, self.z, self.n_points)

    def make_arith(self, precision_bits: int | None = None) -> Arithmetic:
        if self.arithmetic is ArithmeticKind.RATIONAL:
            return Arithmetic.rational()
        return Arithmetic.big_float(precision_bits or self.precision_bits or DEFAULT_PRECISION_BITS)

    def seed_scalars(self, arith: Arithmetic) -> list[Scalar] | None:
        return None if self.seeds is None else [arith.scalar(s) for s in self.seeds]

    def params(self) -> dict[str, Any]:
        """Weight parameters as reported in verification output."""
        spec = self.weight_spec()
        return {"a": list(spec.num_params), "b": list(spec.den_params), "z": spec.z}


def load_config_file(config_file: str) -> dict[str, Any]:
    """Load and parse a TOML run file."""
    try:
        with open(config_file, "rb") as f:
            return tomllib.load(f)
    except tomllib.TOMLDecodeError as e:
        raise ConfigError(f"Failed to parse run file '{config_file}': {e}") from e
    except OSError as e:
        raise ConfigError(f"Cannot read run file '{config_file}': {e.strerror}") from e


def merge_config(file_values: dict[str, Any], cli_values: dict[str, Any]) -> dict[str, Any]:
    """Run file values overridden by every command-line value that was given."""
    merged = dict(file_values)
    merged.update({k: v for k, v in cli_values.items() if v is not None})
    return merged


def validate_config(values: dict[str, Any]) -> RunConfig:
    """Validate the merged run configuration using the pydantic model."""
    try:
        return RunConfig(**values)
    except ValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(loc) for loc in err['loc']) or 'config'}: {err['msg']}"
            for err in e.errors()
        )
        raise ConfigError(f"Invalid run configuration: {problems}") from e
    except ValueError as e:
        raise ConfigError(f"Invalid run configuration: {e}") from e
