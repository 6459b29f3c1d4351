import random
import unittest
from fractions import Fraction

from crepant_potential.algebra.cyclotomic import I, Cyclo
from crepant_potential.algebra.ratfun import (
    POLY_ONE, RAT_ONE, RAT_T1, RAT_T2, RAT_ZERO, PoleError, Poly2, RatFun, poly_gcd
)

from ..concerns import linear, random_poly


class Poly2Test(unittest.TestCase):
    def test_exact_division(self):
        a, b = linear(1, 1).num, linear(1, -2).num
        self.assertEqual(a, (a * b).exact_div(b))

    def test_gcd_of_products(self):
        rng = random.Random(42)
        for _ in range(10):
            common, f, g = random_poly(rng, 1), random_poly(rng, 1), random_poly(rng, 1)
            if common.is_constant() or f.is_zero() or g.is_zero():
                continue
            gcd = poly_gcd(common * f, common * g)
            self.assertTrue((common * f).exact_div(gcd) * gcd == common * f)
            self.assertFalse(gcd.is_constant())

    def test_eval(self):
        p = Poly2.monomial(2, 1, 3) + Poly2.constant(1)
        self.assertEqual(Cyclo.of(13), p.eval(2, 1))


class RatFunTest(unittest.TestCase):
    def test_normalization(self):
        t1t2 = Poly2.monomial(1, 1)
        self.assertEqual(RAT_T2, RatFun.normalized(t1t2, Poly2.monomial(1, 0)))
        self.assertEqual(RatFun.normalized(POLY_ONE, t1t2), RatFun.normalized(Poly2.constant(3), t1t2.scale(3)))
        self.assertEqual(RatFun(POLY_ONE, linear(1, 1).num), (RAT_T1 + RAT_T2).inv())

    def test_field_operations(self):
        rng = random.Random(7)
        for _ in range(10):
            a = RatFun.normalized(random_poly(rng), random_poly(rng, 1) + Poly2.monomial(2, 0))
            b = RatFun.normalized(random_poly(rng), random_poly(rng, 1) + Poly2.monomial(0, 2))
            self.assertEqual(a, (a + b) - b)
            if not b.is_zero():
                self.assertEqual(a, (a * b) / b)

    def test_sum_over_common_denominator(self):
        # 1/(2 * 3/2 t1 (t2 - t1/2)) + 1/(3 t2 (t1 - 2 t2)) = 1/(3 t1 t2)
        euler_zero = linear(Fraction(-1, 2), 1) * linear(Fraction(3, 2), 0)
        euler_infinity = linear(1, -2) * linear(0, 3)
        total = euler_zero.scale(2).inv() + euler_infinity.inv()
        self.assertEqual(RatFun.normalized(POLY_ONE, Poly2.monomial(1, 1, 3)), total)

    def test_eval_and_pole(self):
        value = RatFun.normalized(POLY_ONE, Poly2.monomial(1, 1, 18))
        self.assertEqual(Cyclo.of(Fraction(1, 18)), value.eval(1, 1))
        with self.assertRaises(PoleError):
            value.eval(0, 1)

    def test_cyclotomic_coefficients(self):
        self.assertEqual(RatFun.constant(-1), RAT_ONE.scale(I) * RAT_ONE.scale(I))
        self.assertTrue(RAT_ZERO.is_zero())
        with self.assertRaises(ZeroDivisionError):
            RAT_ZERO.inv()

    def test_zero_is_canonical(self):
        x = RatFun.normalized(POLY_ONE, Poly2.monomial(1, 1))
        self.assertEqual(RAT_ZERO, x * RAT_ZERO)
        self.assertEqual(RAT_ZERO, x.scale(0))
        self.assertEqual(RAT_ZERO, x - x)
        self.assertEqual(POLY_ONE, x.scale(0).den)

    def test_equality_agrees_with_cross_multiplication(self):
        rng = random.Random(2024)
        for _ in range(50):
            p, q = random_poly(rng), random_poly(rng, 1) + Poly2.monomial(2, 0)
            r, s = random_poly(rng), random_poly(rng, 1) + Poly2.monomial(0, 2)
            factor = random_poly(rng, 1) + Poly2.monomial(1, 1)
            a = RatFun.normalized(p, q)
            self.assertEqual(a, RatFun.normalized(p * factor, q * factor))
            self.assertEqual(p * s == r * q, a == RatFun.normalized(r, s))
