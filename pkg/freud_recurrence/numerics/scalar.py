"""Scalar arithmetic under two contracts: exact rationals and big floats.

Under the rational contract every value is a `fractions.Fraction` and every
operation is exact. Under the float contract values are `mpmath` floats of a
fixed binary precision, and each value carries a running upper bound of its
accumulated absolute error (a first order running error analysis: the error
of an operation's result is bounded by the propagated input errors plus one
rounding unit of the result).

Copyright (C) 2025 Paulo Ferreira de Castro

Licensed under the Open Software License version 3.0, a copy of which can be
found in the LICENSE file.
"""

from enum import Enum
from fractions import Fraction
from typing import Any, Final

import mpmath

from .error import NumericsError, ScalarParseError

DEFAULT_PRECISION_BITS: Final = 256
MIN_PRECISION_BITS: Final = 53

# A float result is indeterminate when its magnitude does not exceed its
# error bound by at least this factor.
INDETERMINATE_FACTOR: Final = 10


class Mode(str, Enum):
    RATIONAL = "rational"
    FLOAT = "float"


def parse_fraction(text: str) -> Fraction:
    """Parse "p/q", integer and decimal literals into an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ScalarParseError(f"Not a rational or decimal literal: {text!r}") from e


class Arithmetic:
    """Factory for the Scalar values of one arithmetic contract.

    Float arithmetics own a private `mpmath` context, so different precisions
    can coexist (in threads, too) without touching the global `mpmath.mp`.
    """

    __slots__ = ("mode", "precision_bits", "ctx", "eps", "_zero", "_one")

    def __init__(self, mode: Mode, precision_bits: int = DEFAULT_PRECISION_BITS):
        self.mode = mode
        if mode is Mode.FLOAT:
            if precision_bits < MIN_PRECISION_BITS:
                raise NumericsError(
                    f"Precision must be at least {MIN_PRECISION_BITS} bits,"
                    f" got {precision_bits}"
                )
            self.precision_bits = precision_bits
            self.ctx = mpmath.MPContext()
            self.ctx.prec = precision_bits
            self.eps = self.ctx.ldexp(self.ctx.one, 1 - precision_bits)
            self._zero = Scalar(self.ctx.zero, self.ctx.zero, self)
            self._one = Scalar(self.ctx.one, self.ctx.zero, self)
        else:
            self.precision_bits = 0
            self.ctx = None
            self.eps = 0
            self._zero = Scalar(Fraction(0), 0, self)
            self._one = Scalar(Fraction(1), 0, self)

    @classmethod
    def rational(cls) -> "Arithmetic":
        return RATIONAL

    @classmethod
    def big_float(cls, precision_bits: int = DEFAULT_PRECISION_BITS) -> "Arithmetic":
        return cls(Mode.FLOAT, precision_bits)

    @property
    def is_exact(self) -> bool:
        return self.mode is Mode.RATIONAL

    @property
    def target_err(self) -> Any:
        """Absolute error requested from truncated series summation."""
        return self.eps / 16 if self.ctx else 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Arithmetic):
            return NotImplemented
        return self.mode is other.mode and self.precision_bits == other.precision_bits

    def __hash__(self) -> int:
        return hash((self.mode, self.precision_bits))

    def __repr__(self) -> str:
        if self.is_exact:
            return "Arithmetic(rational)"
        return f"Arithmetic(float, {self.precision_bits} bits)"

    def zero(self) -> "Scalar":
        return self._zero

    def one(self) -> "Scalar":
        return self._one

    def parse(self, text: str) -> "Scalar":
        return self.scalar(parse_fraction(text))

    def scalar(self, value: "int | Fraction | Scalar") -> "Scalar":
        """Convert a value into this arithmetic, accounting for conversion error."""
        if isinstance(value, Scalar):
            if value.arith == self:
                return value
            if value.arith.is_exact:
                return self.scalar(value.value)
            if self.is_exact:
                raise NumericsError("Cannot convert a float Scalar to the rational contract")
            v = self.ctx.mpf(value.value)
            return Scalar(v, value.err + self.eps * abs(v), self)
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise TypeError(f"Unsupported scalar type {type(value).__name__}")
        if self.is_exact:
            return Scalar(Fraction(value), 0, self)
        num, den = (value, 1) if isinstance(value, int) else (value.numerator, value.denominator)
        v = self.ctx.mpf(num) / den if den != 1 else self.ctx.mpf(num)
        representable = den & (den - 1) == 0 and abs(num).bit_length() <= self.precision_bits
        return Scalar(v, self.ctx.zero if representable else self.eps * abs(v), self)

    def from_mpf(self, value: Any, err: Any) -> "Scalar":
        """Wrap a value computed directly with this arithmetic's context."""
        if self.is_exact:
            raise NumericsError("Float values are not available under the rational contract")
        return Scalar(self.ctx.mpf(value), self.ctx.mpf(err), self)


class Scalar:
    """A value in a given Arithmetic, plus its absolute error bound.

    The error bound is always 0 under the rational contract.
    """

    __slots__ = ("value", "err", "arith")

    def __init__(self, value: Any, err: Any, arith: Arithmetic):
        self.value = value
        self.err = err
        self.arith = arith

    def _coerce(self, other: Any) -> "Scalar":
        if isinstance(other, Scalar):
            if other.arith is not self.arith and other.arith != self.arith:
                raise NumericsError(f"Mixed arithmetics: {self.arith!r} and {other.arith!r}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.arith.scalar(other)
        return NotImplemented

    def _rounded(self, value: Any, err: Any) -> "Scalar":
        arith = self.arith
        if arith.is_exact:
            return Scalar(value, 0, arith)
        return Scalar(value, err + arith.eps * abs(value), arith)

    def __add__(self, other: Any) -> "Scalar":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._rounded(self.value + o.value, self.err + o.err)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "Scalar":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._rounded(self.value - o.value, self.err + o.err)

    def __rsub__(self, other: Any) -> "Scalar":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other: Any) -> "Scalar":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.arith.is_exact:
            return Scalar(self.value * o.value, 0, self.arith)
        err = abs(self.value) * o.err + abs(o.value) * self.err + self.err * o.err
        return self._rounded(self.value * o.value, err)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "Scalar":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.arith.is_exact:
            return Scalar(self.value / o.value, 0, self.arith)
        quotient = self.value / o.value
        margin = abs(o.value) - o.err
        if margin <= 0:
            return Scalar(quotient, self.arith.ctx.inf, self.arith)
        return self._rounded(quotient, (self.err + abs(quotient) * o.err) / margin)

    def __rtruediv__(self, other: Any) -> "Scalar":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __neg__(self) -> "Scalar":
        return Scalar(-self.value, self.err, self.arith)

    def __pos__(self) -> "Scalar":
        return self

    def __abs__(self) -> "Scalar":
        return Scalar(abs(self.value), self.err, self.arith)

    def __pow__(self, n: int) -> "Scalar":
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"Only non-negative integer powers are supported, got {n!r}")
        result = self.arith.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __float__(self) -> float:
        return float(self.value)

    def point(self) -> "Scalar":
        """The same value with a zero error bound."""
        return Scalar(self.value, 0, self.arith)

    def is_exact_zero(self) -> bool:
        return self.value == 0 and self.err == 0

    def is_indeterminate(self) -> bool:
        """True when the value cannot be told apart from zero."""
        if self.arith.is_exact:
            return self.value == 0
        return abs(self.value) <= INDETERMINATE_FACTOR * self.err

    def sign(self) -> int:
        return (self.value > 0) - (self.value < 0)

    def magnitude(self) -> Any:
        """Upper bound of the absolute value of the represented quantity."""
        return abs(self.value) + self.err

    def integer_value(self) -> int | None:
        """The represented integer, when the value is known to be an exact integer."""
        if self.arith.is_exact:
            return self.value.numerator if self.value.denominator == 1 else None
        if self.err == 0 and self.arith.ctx.isint(self.value):
            return int(self.value)
        return None

    def nonpositive_integer(self) -> int | None:
        """m when the value is exactly -m for some integer m >= 0."""
        k = self.integer_value()
        return -k if k is not None and k <= 0 else None

    def to_fraction(self) -> Fraction:
        if not self.arith.is_exact:
            raise NumericsError("Float Scalars have no exact rational value")
        return self.value

    def __repr__(self) -> str:
        if self.arith.is_exact:
            return f"Scalar({self.value})"
        ctx = self.arith.ctx
        return f"Scalar({ctx.nstr(self.value, 20)} ± {ctx.nstr(self.err, 3)})"

    def __str__(self) -> str:
        if self.arith.is_exact:
            return str(self.value)
        return self.arith.ctx.nstr(self.value, 20)


RATIONAL: Final = Arithmetic(Mode.RATIONAL)
