"""Dense polynomials over Scalar coefficients.

A polynomial is a tuple of coefficients in ascending degree order. All
coefficients of a polynomial share one Arithmetic.

Copyright (C) 2025 Paulo Ferreira de Castro

Licensed under the Open Software License version 3.0, a copy of which can be
found in the LICENSE file.
"""

from collections.abc import Sequence
from itertools import zip_longest
from math import comb
from typing import TypeAlias

from .scalar import Arithmetic, Scalar

Poly: TypeAlias = tuple[Scalar, ...]


def from_roots(arith: Arithmetic, shifts: Sequence[Scalar], lead: Scalar | None = None) -> Poly:
    """Expand lead * prod(x + s) over the given shifts."""
    result: list[Scalar] = [lead if lead is not None else arith.one()]
    for s in shifts:
        # Multiply by (x + s).
        nxt = [r * s for r in result] + [arith.zero()]
        for i, r in enumerate(result):
            nxt[i + 1] = nxt[i + 1] + r
        result = nxt
    return tuple(result)


def add(f: Poly, g: Poly) -> Poly:
    return tuple(
        a if b is None else b if a is None else a + b for a, b in zip_longest(f, g)
    )


def sub(f: Poly, g: Poly) -> Poly:
    return add(f, scale(g, -1))


def scale(f: Poly, c: "Scalar | int") -> Poly:
    return tuple(a * c for a in f)


def mul(f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ()
    zero = f[0].arith.zero()
    result = [zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            result[i + j] = result[i + j] + a * b
    return tuple(result)


def mul_x(f: Sequence[Scalar], power: int = 1) -> Poly:
    """Multiply by x**power."""
    if not f:
        return ()
    return (f[0].arith.zero(),) * power + tuple(f)


def shift(f: Poly, h: int) -> Poly:
    """The coefficients of f(x + h), for an integer step h."""
    if not f:
        return ()
    result = []
    for k in range(len(f)):
        acc = f[0].arith.zero()
        for i in range(k, len(f)):
            acc = acc + f[i] * (comb(i, k) * h ** (i - k))
        result.append(acc)
    return tuple(result)


def evaluate(f: Poly, x: "Scalar | int") -> Scalar:
    if not f:
        raise ValueError("Cannot evaluate an empty coefficient tuple")
    acc = f[-1]
    for a in reversed(f[:-1]):
        acc = acc * x + a
    return acc


def degree(f: Poly) -> int:
    """Degree ignoring exactly zero leading coefficients; -1 for the zero polynomial."""
    for i in range(len(f) - 1, -1, -1):
        if not f[i].is_exact_zero():
            return i
    return -1
