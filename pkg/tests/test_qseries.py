# coding: utf-8

import random
import unittest
from fractions import Fraction

from ramanujan.qseries import (
    TruncatedQSeries,
    chazy_triple,
    delta_series,
    divisor_sigma,
    eisenstein,
    evaluate,
    theta,
    verify_chazy,
    verify_ramanujan,
)


class TestDivisorSums(unittest.TestCase):
    def test_known_values(self):
        self.assertEqual(divisor_sigma(1, 1), 1)
        self.assertEqual(divisor_sigma(1, 6), 12)
        self.assertEqual(divisor_sigma(3, 2), 9)
        self.assertEqual(divisor_sigma(5, 4), 1057)
        self.assertEqual(divisor_sigma(0, 12), 6)

    def test_invalid(self):
        with self.assertRaises(ValueError):
            divisor_sigma(1, 0)
        with self.assertRaises(ValueError):
            divisor_sigma(-1, 3)


class TestEisenstein(unittest.TestCase):
    def test_coefficients(self):
        e2 = eisenstein(2, 10)
        e4 = eisenstein(4, 10)
        e6 = eisenstein(6, 10)
        self.assertEqual(e2.order, 10)
        self.assertEqual(list(e2.coeffs[:4]), [1, -24, -72, -96])
        self.assertEqual(list(e4.coeffs[:3]), [1, 240, 2160])
        self.assertEqual(list(e6.coeffs[:3]), [1, -504, -16632])

    def test_invalid(self):
        with self.assertRaises(ValueError):
            eisenstein(8, 10)
        with self.assertRaises(ValueError):
            eisenstein(4, 0)

    def test_delta(self):
        delta = delta_series(12)
        self.assertEqual(delta[0], 0)
        self.assertEqual(delta[1], 1728)
        self.assertEqual(delta[2], -24 * 1728)

    def test_integrality(self):
        for w in (2, 4, 6):
            s = eisenstein(w, 500)
            self.assertTrue(all(c.denominator == 1 for c in s.coeffs))


class TestSeriesArithmetic(unittest.TestCase):
    def setUp(self):
        rng = random.Random(11)
        self.f = TruncatedQSeries([rng.randint(-9, 9) for _ in range(20)])
        self.g = TruncatedQSeries([1] + [rng.randint(-9, 9) for _ in range(19)])

    def test_order_is_minimum(self):
        s = eisenstein(2, 10) + eisenstein(4, 5)
        self.assertEqual(s.order, 5)
        self.assertEqual((eisenstein(2, 7) * eisenstein(4, 9)).order, 7)
        with self.assertRaises(ValueError):
            TruncatedQSeries([1, 2], order=3)
        with self.assertRaises(ValueError):
            TruncatedQSeries([])

    def test_inverse(self):
        one = TruncatedQSeries.constant(1, 20)
        self.assertEqual(self.g * self.g.inverse(), one)
        self.assertEqual((self.f / self.g) * self.g, self.f)
        with self.assertRaises(ValueError):
            TruncatedQSeries.monomial(1, 5).inverse()

    def test_theta_is_a_derivation(self):
        lhs = theta(self.f * self.g)
        rhs = self.f * theta(self.g) + self.g * theta(self.f)
        self.assertEqual(lhs, rhs)
        m = TruncatedQSeries.monomial(3, 10, coeff=Fraction(1, 2))
        self.assertEqual(theta(m), 3 * m)

    def test_first_nonzero_index(self):
        self.assertIsNone(TruncatedQSeries([0, 0, 0]).first_nonzero_index())
        self.assertEqual(TruncatedQSeries.monomial(4, 8).first_nonzero_index(), 4)
        self.assertTrue(TruncatedQSeries.monomial(9, 8).is_zero())


class TestRamanujanSystem(unittest.TestCase):
    def test_residuals_vanish(self):
        for order in (2, 10, 200):
            residuals = verify_ramanujan(order)
            for r in residuals:
                self.assertEqual(r.order, order)
                self.assertTrue(r.is_zero())

    def test_chazy(self):
        residual = verify_chazy(200)
        self.assertTrue(residual.is_zero())
        self.assertEqual(residual.order, 200)

    def test_order_too_small(self):
        with self.assertRaises(ValueError):
            verify_ramanujan(1)
        with self.assertRaises(ValueError):
            verify_chazy(1)
        with self.assertRaises(ValueError):
            chazy_triple(1)

    def test_chazy_triple(self):
        b2, b4, b6 = chazy_triple(50)
        self.assertEqual(b2, eisenstein(2, 50))
        self.assertEqual(b4[1], -12)
        self.assertEqual(b6[1], -4)
        # the b4 series is (E2^2 - E4)/24
        e4 = eisenstein(4, 50)
        self.assertEqual(b4, (b2 * b2 - e4) / 24)


class TestEvaluate(unittest.TestCase):
    def test_values(self):
        e4 = eisenstein(4, 64)
        self.assertEqual(evaluate(e4, 0).value, 1)
        value = evaluate(e4, 0.01).value
        self.assertAlmostEqual(value.real, 1 + 2.4 + 2160e-4 + 6720e-6, delta=1e-3)
        self.assertAlmostEqual(value.imag, 0.0)

    def test_convergence(self):
        e2 = eisenstein(2, 128)
        short = evaluate(e2.truncate(64), 0.01)
        full = evaluate(e2, 0.01)
        self.assertLess(abs(short.value - full.value), 1e-12)
        self.assertLess(short.tail_bound, 1e-60)
        self.assertGreater(short.growth, 0)

    def test_outside_disc(self):
        with self.assertRaises(ValueError):
            evaluate(eisenstein(2, 10), 1.0)
        with self.assertRaises(ValueError):
            evaluate(eisenstein(2, 10), 0.8j + 0.8)


if __name__ == "__main__":
    unittest.main()
