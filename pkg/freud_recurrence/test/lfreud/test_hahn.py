"""Test code for the hahn module.

Copyright (C) 2025 Paulo Ferreira de Castro

Licensed under the Open Software License version 3.0, a copy of which can be
found in the LICENSE file.
"""

import unittest
from fractions import Fraction

from ...lfreud.error import DegenerateParameters
from ...lfreud.factory import oracle_table
from ...lfreud.ghahn import GHahnParams, lf_residuals
from ...lfreud.hahn import (
    hahn_beta,
    hahn_beta0,
    hahn_beta_solution,
    hahn_closed_form,
    hahn_gamma1,
    hahn_lf_run,
)
from ...moments.moments import moments_hahn_gamma
from ...numerics.scalar import RATIONAL, Arithmetic
from ...oracle.oracle import recurrence_from_moments
from ...weights.weights import WeightSpec

F = Fraction


def q(*values):
    return [RATIONAL.scalar(F(v)) for v in values]


def values(scalars):
    return [s.value for s in scalars]


class TestDiscreteChebyshev(unittest.TestCase):
    def test_exact_equivalence(self):
        a1, a2, b = q(1, -4, -5)
        closed = hahn_closed_form(a1, a2, b, 4)
        lf = hahn_lf_run(a1, a2, b, 4)
        oracle = oracle_table(WeightSpec((F(1), F(-4)), (F(-5),), F(1)), 4, RATIONAL)
        self.assertEqual(values(closed.beta), [2] * 5)
        self.assertEqual(values(closed.gamma), [0, 2, F(7, 5), F(36, 35), F(4, 7)])
        for rec in (lf, oracle):
            self.assertEqual(values(rec.beta), values(closed.beta))
            self.assertEqual(values(rec.gamma), values(closed.gamma))
        for n in range(1, 5):
            self.assertEqual(closed.gamma[n].value, F(n * n * (25 - n * n), 4 * (4 * n * n - 1)))

    def test_lf_relations(self):
        a1, a2, b = q(1, -4, -5)
        rec = hahn_lf_run(a1, a2, b, 4)
        residuals = lf_residuals(rec, GHahnParams(a1, a2, b, RATIONAL.one()))
        for name, res in residuals.items():
            self.assertTrue(all(r.value == 0 for r in res), name)


class TestHahnClosedForms(unittest.TestCase):
    def test_seeds(self):
        self.assertEqual(hahn_beta0(*q(1, 1, F(11, 2))).value, F(2, 7))
        self.assertEqual(hahn_beta0(*q(1, 1, F(9, 2))).value, F(2, 5))
        self.assertEqual(hahn_gamma1(*q(1, 1, F(9, 2))).value, F(98, 75))
        self.assertEqual(hahn_gamma1(*q(1, 1, F(11, 2))).value, F(162, 245))

    def test_seeds_against_gamma_ratio_oracle(self):
        arith = Arithmetic.big_float()
        for b in (F(9, 2), F(11, 2)):
            rec = recurrence_from_moments(moments_hahn_gamma(F(1), F(1), b, 3, arith), 1)
            a1, a2, b_s = q(1, 1, b)
            self.assertLess(abs(rec.beta[0].value - hahn_beta0(a1, a2, b_s).value), 1e-10)
            self.assertLess(abs(rec.gamma[1].value - hahn_gamma1(a1, a2, b_s).value), 1e-10)

    def test_lf_matches_closed_form(self):
        for params in ((1, 1, F(9, 2)), (F(1, 3), F(2, 7), F(11, 2)), (2, F(1, 2), F(23, 3))):
            a1, a2, b = q(*params)
            closed = hahn_closed_form(a1, a2, b, 20)
            lf = hahn_lf_run(a1, a2, b, 20)
            self.assertEqual(values(lf.beta), values(closed.beta), params)
            self.assertEqual(values(lf.gamma), values(closed.gamma), params)

    def test_formal_moment_oracle(self):
        spec = WeightSpec((F(1), F(1)), (F(9, 2),), F(1))
        oracle = oracle_table(spec, 6, RATIONAL)
        closed = hahn_closed_form(*q(1, 1, F(9, 2)), 6)
        self.assertEqual(values(oracle.beta), values(closed.beta))
        self.assertEqual(values(oracle.gamma), values(closed.gamma))

    def test_beta_solution_solves_recursion(self):
        for params in ((F(1, 3), F(2, 7), F(11, 2)), (F(-3, 4), F(5, 3), F(19, 4)), (2, F(1, 2), F(23, 3))):
            a1, a2, b = q(*params)
            k = a1 + a2 - b
            prev = hahn_beta_solution(a1, a2, b, 0)
            self.assertEqual(prev.value, hahn_beta0(a1, a2, b).value)
            for n in range(1, 21):
                cur = hahn_beta_solution(a1, a2, b, n)
                lhs = (k + 2 * n) * cur
                rhs = (k + (2 * n - 4)) * prev - (a1 + a2 + b)
                self.assertEqual(lhs.value, rhs.value, (params, n))
                self.assertEqual(cur.value, hahn_beta(a1, a2, b, n).value, (params, n))
                prev = cur

    def test_degenerate(self):
        with self.assertRaises(DegenerateParameters) as ctx:
            hahn_closed_form(*q(1, 2, 3), 3)
        self.assertEqual(ctx.exception.exit_code, 2)
        with self.assertRaises(DegenerateParameters):
            hahn_lf_run(*q(1, 2, 3), 3)


# Tests can be run with the command line:
# python -m unittest freud_recurrence.test.lfreud.test_hahn
if __name__ == "__main__":
    unittest.main()
