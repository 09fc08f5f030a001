"""CSV and JSON emission of tables and reports, and CSV parsing.

Exact rationals are written as "p/q" in CSV and as {"num": p, "den": q} in
JSON; big floats as decimal strings with a fixed number of significant
digits.

Copyright (C) 2025 Paulo Ferreira de Castro

Licensed under the Open Software License version 3.0, a copy of which can be
found in the LICENSE file.
"""

import csv
import io
import json
from collections.abc import Sequence
from fractions import Fraction
from typing import Any, TextIO

import mpmath

from ..numerics.scalar import Arithmetic, Scalar

Cell = int | Scalar | None

# Columns holding integer indices rather than Scalars.
INDEX_COLUMNS = ("n", "k")


def format_value(value: Any, digits: int) -> str:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (int, str)):
        return str(value)
    return mpmath.nstr(value, digits)


def format_scalar(s: Scalar, digits: int) -> str:
    if s.arith.is_exact:
        return str(s.value)
    return s.arith.ctx.nstr(s.value, digits)


def _format_cell(cell: Cell, digits: int) -> str:
    if cell is None:
        return ""
    if isinstance(cell, Scalar):
        return format_scalar(cell, digits)
    return str(cell)


def write_csv(header: Sequence[str], rows: Sequence[Sequence[Cell]], digits: int, out: TextIO):
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_format_cell(cell, digits) for cell in row])


def csv_text(header: Sequence[str], rows: Sequence[Sequence[Cell]], digits: int) -> str:
    buf = io.StringIO()
    write_csv(header, rows, digits, buf)
    return buf.getvalue()


def parse_table_csv(text: str, arith: Arithmetic) -> tuple[list[str], list[list[Cell]]]:
    """Inverse of write_csv: index columns become ints, the others Scalars."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    rows: list[list[Cell]] = []
    for record in reader:
        row: list[Cell] = []
        for name, field in zip(header, record):
            if not field:
                row.append(None)
            elif name in INDEX_COLUMNS:
                row.append(int(field))
            else:
                row.append(arith.parse(field))
        rows.append(row)
    return header, rows


def json_value(value: Any, digits: int) -> Any:
    """Recursively convert Scalars, Fractions and mpmath floats into JSON types."""
    if isinstance(value, Scalar):
        value = value.value
    if isinstance(value, Fraction):
        return {"num": value.numerator, "den": value.denominator}
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, dict):
        return {str(k): json_value(v, digits) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_value(v, digits) for v in value]
    return format_value(value, digits)


def write_json(obj: Any, digits: int, out: TextIO):
    json.dump(json_value(obj, digits), out, indent=2)
    out.write("\n")


def records(header: Sequence[str], rows: Sequence[Sequence[Cell]]) -> list[dict[str, Cell]]:
    return [dict(zip(header, row)) for row in rows]
