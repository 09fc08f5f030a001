"""Test code for the meixner module.

Copyright (C) 2025 Paulo Ferreira de Castro

Licensed under the Open Software License version 3.0, a copy of which can be
found in the LICENSE file.
"""

import time
import unittest
from fractions import Fraction

from ...lfreud.error import InvalidZ
from ...lfreud.factory import oracle_table
from ...lfreud.meixner import meixner_a0, meixner_closed_form, meixner_lf_run
from ...numerics.scalar import RATIONAL, Arithmetic
from ...weights.weights import WeightSpec

F = Fraction


def values(scalars):
    return [s.value for s in scalars]


class TestMeixner(unittest.TestCase):
    def test_closed_form(self):
        rec = meixner_closed_form(RATIONAL.one(), RATIONAL.parse("1/2"), 3)
        self.assertEqual(values(rec.beta), [1, 4, 7, 10])
        self.assertEqual(values(rec.gamma), [0, 2, 8, 18])

    def test_lf_run_seeds_and_slope(self):
        a, z = RATIONAL.one(), RATIONAL.parse("1/2")
        rec = meixner_lf_run(a, z, 3)
        self.assertEqual(rec.beta[0].value, 1)
        self.assertEqual(rec.gamma[1].value, 2)
        self.assertEqual((rec.beta[1] - rec.beta[0]).value, 3)
        self.assertEqual(values(rec.gamma), [0, 2, 8, 18])
        self.assertEqual(values(meixner_a0(rec, z)), [1, 3, 5])

    def test_exact_equivalence(self):
        for a, z in ((F(1), F(1, 2)), (F(3, 2), F(1, 3))):
            spec = WeightSpec((a,), (), z)
            a_s, z_s = RATIONAL.scalar(a), RATIONAL.scalar(z)
            closed = meixner_closed_form(a_s, z_s, 50)
            lf = meixner_lf_run(a_s, z_s, 50)
            oracle = oracle_table(spec, 50, RATIONAL)
            for rec in (lf, oracle):
                self.assertEqual(values(rec.beta), values(closed.beta), (a, z))
                self.assertEqual(values(rec.gamma), values(closed.gamma), (a, z))

    def test_negative_z_exact(self):
        a_s, z_s = RATIONAL.parse("5/2"), RATIONAL.parse("-3")
        closed = meixner_closed_form(a_s, z_s, 20)
        lf = meixner_lf_run(a_s, z_s, 20)
        self.assertEqual(values(lf.beta), values(closed.beta))
        self.assertEqual(values(lf.gamma), values(closed.gamma))

    def test_long_float_run(self):
        arith = Arithmetic.big_float()
        a, z = arith.one(), arith.parse("1/2")
        lf = meixner_lf_run(a, z, 2000)
        self.assertEqual(lf.n_max, 2000)
        self.assertLess(abs(lf.beta[2000].value - 6001), 1e-60)
        self.assertLess(abs(lf.gamma[2000].value - 2 * 2000**2), 1e-55)

    def test_lf_outpaces_oracle(self):
        spec = WeightSpec((F(1),), (), F(1, 2))
        a, z = RATIONAL.one(), RATIONAL.parse("1/2")
        start = time.perf_counter()
        lf = meixner_lf_run(a, z, 150)
        lf_seconds = time.perf_counter() - start
        start = time.perf_counter()
        oracle = oracle_table(spec, 150, RATIONAL)
        oracle_seconds = time.perf_counter() - start
        self.assertEqual(values(lf.gamma), values(oracle.gamma))
        # Linear steps against quadratic Gram sums over growing moments.
        self.assertLess(lf_seconds, oracle_seconds)

    def test_invalid_z(self):
        for z in ("0", "1"):
            with self.assertRaises(InvalidZ):
                meixner_closed_form(RATIONAL.one(), RATIONAL.parse(z), 3)
            with self.assertRaises(InvalidZ):
                meixner_lf_run(RATIONAL.one(), RATIONAL.parse(z), 3)


# Tests can be run with the command line:
# python -m unittest freud_recurrence.test.lfreud.test_meixner
if __name__ == "__main__":
    unittest.main()
