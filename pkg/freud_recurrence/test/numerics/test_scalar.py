"""Test code for the scalar module.

Copyright (C) 2025 Paulo Ferreira de Castro

Licensed under the Open Software License version 3.0, a copy of which can be
found in the LICENSE file.
"""

import unittest
from fractions import Fraction

from ...numerics.error import NumericsError, ScalarParseError
from ...numerics.scalar import RATIONAL, Arithmetic, Mode, parse_fraction


class TestParse(unittest.TestCase):
    def test_literals(self):
        test_inputs = [
            ("3/4", Fraction(3, 4)),
            ("0.25", Fraction(1, 4)),
            ("-4", Fraction(-4)),
            (" 1e-3 ", Fraction(1, 1000)),
        ]
        for text, expected in test_inputs:
            self.assertEqual(parse_fraction(text), expected, text)

    def test_bad_literal(self):
        for text in ("abc", "1/0", ""):
            with self.assertRaises(ScalarParseError):
                parse_fraction(text)


class TestRationalArithmetic(unittest.TestCase):
    def test_exact_operations(self):
        half = RATIONAL.parse("1/2")
        third = RATIONAL.scalar(Fraction(1, 3))
        self.assertEqual((half + third).value, Fraction(5, 6))
        self.assertEqual((half - third).value, Fraction(1, 6))
        self.assertEqual((half * third).value, Fraction(1, 6))
        self.assertEqual((half / third).value, Fraction(3, 2))
        self.assertEqual((1 - half).value, Fraction(1, 2))
        self.assertEqual((2 / half).value, 4)
        self.assertEqual((half**3).value, Fraction(1, 8))
        self.assertEqual((half * third).err, 0)

    def test_integer_queries(self):
        self.assertEqual(RATIONAL.scalar(-3).nonpositive_integer(), 3)
        self.assertIsNone(RATIONAL.scalar(2).nonpositive_integer())
        self.assertIsNone(RATIONAL.parse("-1/2").integer_value())
        self.assertTrue(RATIONAL.zero().is_indeterminate())


class TestFloatArithmetic(unittest.TestCase):
    def test_error_bound_covers_rounding(self):
        arith = Arithmetic.big_float(64)
        self.assertIs(arith.mode, Mode.FLOAT)
        third = arith.one() / 3
        self.assertGreater(third.err, 0)
        residual = third * 3 - 1
        self.assertLessEqual(abs(residual.value), residual.err)
        self.assertTrue(residual.is_indeterminate())

    def test_dyadic_conversion_is_exact(self):
        arith = Arithmetic.big_float()
        self.assertEqual(arith.parse("1/2").err, 0)
        self.assertEqual(arith.scalar(7).err, 0)
        self.assertGreater(arith.parse("1/10").err, 0)
        self.assertEqual(arith.scalar(-3).nonpositive_integer(), 3)

    def test_precision_conversion(self):
        low, high = Arithmetic.big_float(64), Arithmetic.big_float(256)
        x = high.scalar(low.one() / 3)
        self.assertIs(x.arith, high)
        self.assertGreater(x.err, high.eps)
        self.assertEqual(high.scalar(RATIONAL.parse("1/4")).value, high.ctx.mpf(1) / 4)

    def test_mixed_arithmetics_rejected(self):
        with self.assertRaises(NumericsError):
            _ = Arithmetic.big_float(64).one() + Arithmetic.big_float(128).one()
        with self.assertRaises(NumericsError):
            _ = RATIONAL.one() + Arithmetic.big_float().one()

    def test_minimum_precision(self):
        with self.assertRaises(NumericsError):
            Arithmetic.big_float(16)


# Tests can be run with the command line:
# python -m unittest freud_recurrence.test.numerics.test_scalar
if __name__ == "__main__":
    unittest.main()
