"""Test code for the special and poly modules.

Copyright (C) 2025 Paulo Ferreira de Castro

Licensed under the Open Software License version 3.0, a copy of which can be
found in the LICENSE file.
"""

import unittest
from dataclasses import dataclass
from fractions import Fraction

from ...numerics import poly
from ...numerics.error import (
    DivergencePrecondition,
    DivergentSeries,
    ExactModeUnavailable,
    PoleEncountered,
)
from ...numerics.scalar import RATIONAL, Arithmetic
from ...numerics.special import gauss_2f1_at_1, hyp_pfq, pochhammer, ratio_bound

F = Fraction


def q(*values: "int | Fraction"):
    return [RATIONAL.scalar(v) for v in values]


class TestPochhammer(unittest.TestCase):
    def test_values(self):
        self.assertEqual(pochhammer(RATIONAL.parse("1/2"), 3).value, F(15, 8))
        self.assertEqual(pochhammer(RATIONAL.scalar(5), 0).value, 1)
        self.assertEqual(pochhammer(RATIONAL.scalar(-2), 3).value, 0)


@dataclass
class GaussCase:
    a: Fraction
    b: Fraction
    c: Fraction
    expected: Fraction


class TestGauss(unittest.TestCase):
    def test_exact_reductions(self):
        test_cases = [
            GaussCase(F(1), F(1), F(11, 2), F(9, 7)),
            GaussCase(F(1), F(1), F(9, 2), F(7, 5)),
            GaussCase(F(1), F(2), F(6), F(5, 3)),
            GaussCase(F(-2), F(1, 2), F(1), F(3, 8)),
            GaussCase(F(1, 3), F(0), F(7), F(1)),
        ]
        for tc in test_cases:
            a, b, c = q(tc.a, tc.b, tc.c)
            self.assertEqual(gauss_2f1_at_1(a, b, c).value, tc.expected, tc)

    def test_gamma_ratio(self):
        arith = Arithmetic.big_float()
        half = arith.parse("1/2")
        result = gauss_2f1_at_1(half, half, arith.scalar(2))
        expected = 4 / arith.ctx.pi
        self.assertLess(abs(result.value - expected), 1e-70)
        self.assertLessEqual(abs(result.value - expected), result.err + arith.eps)

    def test_preconditions(self):
        with self.assertRaises(DivergencePrecondition):
            gauss_2f1_at_1(*q(1, 2, 3))
        with self.assertRaises(ExactModeUnavailable):
            gauss_2f1_at_1(*q(F(1, 2), F(1, 2), 2))
        arith = Arithmetic.big_float()
        with self.assertRaises(PoleEncountered):
            gauss_2f1_at_1(arith.parse("-5/2"), arith.parse("-7/2"), arith.scalar(-1))


class TestHypergeometric(unittest.TestCase):
    def test_terminating_is_exact(self):
        result = hyp_pfq(q(-2, F(1, 2)), q(1), RATIONAL.one())
        self.assertEqual(result.value.value, F(3, 8))
        self.assertEqual(result.tail_bound, 0)

    def test_closed_forms_are_exact(self):
        result = hyp_pfq(q(1, 2), q(6), RATIONAL.one())
        self.assertEqual(result.value.value, F(5, 3))
        self.assertEqual(result.terms_used, 0)
        # 1F0(a;;z) = (1-z)**(-a)
        result = hyp_pfq(q(3), [], RATIONAL.parse("1/2"))
        self.assertEqual(result.value.value, 8)
        result = hyp_pfq(q(1), [], RATIONAL.parse("-1/3"))
        self.assertEqual(result.value.value, F(3, 4))

    def test_binomial_series_in_float(self):
        arith = Arithmetic.big_float()
        result = hyp_pfq([arith.parse("1/2")], [], arith.parse("1/2"))
        expected = arith.ctx.sqrt(2)
        self.assertLess(abs(result.value.value - expected), 1e-70)
        self.assertLessEqual(abs(result.value.value - expected), result.value.err)
        self.assertGreater(result.terms_used, 1)

    def test_log_series(self):
        arith = Arithmetic.big_float()
        z = arith.parse("1/2")
        # 2F1(1, 1; 2; z) = -log(1-z)/z
        result = hyp_pfq([arith.one(), arith.one()], [arith.scalar(2)], z)
        expected = 2 * arith.ctx.log(2)
        self.assertLess(abs(result.value.value - expected), 1e-70)
        self.assertLessEqual(abs(result.value.value - expected), result.value.err)

    def test_entire_series(self):
        arith = Arithmetic.big_float(128)
        result = hyp_pfq([], [], arith.one())
        self.assertLess(abs(result.value.value - arith.ctx.e), 1e-35)

    def test_failures(self):
        arith = Arithmetic.big_float()
        one = arith.one()
        with self.assertRaises(ExactModeUnavailable):
            hyp_pfq(q(1, 1), q(2), RATIONAL.parse("1/2"))
        with self.assertRaises(DivergentSeries):
            hyp_pfq([one, one, one], [one], arith.parse("1/2"))
        with self.assertRaises(DivergentSeries):
            hyp_pfq([one, one], [arith.scalar(2)], arith.scalar(2))
        with self.assertRaises(DivergentSeries):
            hyp_pfq(q(-3, 1), q(-1), RATIONAL.parse("1/2"))

    def test_ratio_bound(self):
        bound = ratio_bound(q(1, 1), q(F(9, 2)), RATIONAL.parse("1/2"), 1)
        self.assertAlmostEqual(bound, 0.5)
        self.assertIsNone(ratio_bound(q(-5), [], RATIONAL.one(), 3))
        self.assertIsNone(ratio_bound(q(1, 1, 1), [], RATIONAL.one(), 3))


class TestPoly(unittest.TestCase):
    def test_operations(self):
        f = poly.from_roots(RATIONAL, q(1, 2))
        self.assertEqual([c.value for c in f], [2, 3, 1])
        self.assertEqual(poly.evaluate(f, 3).value, 20)
        self.assertEqual([c.value for c in poly.shift(q(0, 0, 1), 1)], [1, 2, 1])
        self.assertEqual([c.value for c in poly.shift(q(0, 0, 1), -1)], [1, -2, 1])
        self.assertEqual([c.value for c in poly.mul(q(1, 1), q(-1, 1))], [-1, 0, 1])
        self.assertEqual(poly.degree(poly.sub(f, q(2, 3, 1))), -1)
        self.assertEqual([c.value for c in poly.mul_x(q(1), 2)], [0, 0, 1])
        self.assertIsInstance(poly.mul_x(q(1, 2)), tuple)
        self.assertEqual([c.value for c in poly.mul_x(q(1, 2))], [0, 1, 2])


# Tests can be run with the command line:
# python -m unittest freud_recurrence.test.numerics.test_special
if __name__ == "__main__":
    unittest.main()
