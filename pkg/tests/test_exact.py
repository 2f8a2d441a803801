# coding: utf-8

import random
import unittest
from fractions import Fraction

from ramanujan.exact import (
    MultiPoly,
    RatFunc,
    RatMatrix,
    clear_delta,
    denominator_primes,
    discriminant,
    has_denominator_support,
    is_delta_unit,
    partial,
    poly_arith,
    poly_diff,
    ratfunc_arith,
    resultant,
    substitute,
)

XY = ("x", "y")


def P(text, variables=XY):
    return MultiPoly.from_text(text, variables)


def R(text, variables=XY):
    return RatFunc.from_text(text, variables)


def random_poly(rng, variables=XY, terms=4, degree=3):
    coeffs = dict()
    for _ in range(rng.randint(0, terms)):
        exps = tuple(rng.randint(0, degree) for _ in variables)
        coeffs[exps] = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    return MultiPoly(variables, coeffs)


def random_nonzero_poly(rng, variables=XY):
    while True:
        p = random_poly(rng, variables)
        if not p.is_zero():
            return p


class TestMultiPoly(unittest.TestCase):
    def test_canonical_text(self):
        p = P("2*x*y + x^2 - 3")
        self.assertEqual(p.to_text(), "x^2 + 2*x*y - 3")
        self.assertEqual(P("x - x").to_text(), "0")
        self.assertEqual(P("-x/2 + y").to_text(), "-1/2*x + y")
        self.assertEqual(MultiPoly.from_text(p.to_text(), XY), p)

    def test_arithmetic(self):
        x = MultiPoly.variable("x", XY)
        y = MultiPoly.variable("y", XY)
        self.assertEqual((x + 1) * (x - 1), P("x^2 - 1"))
        self.assertEqual(poly_arith(x, y, "add"), P("x + y"))
        self.assertEqual(poly_arith(x, y, "sub"), P("x - y"))
        self.assertEqual(poly_arith(x, y, "mul"), P("x*y"))
        self.assertEqual((x + y) ** 2, P("x^2 + 2*x*y + y^2"))
        self.assertEqual(x * Fraction(1, 2), P("x/2"))
        with self.assertRaises(ValueError):
            poly_arith(x, y, "div")
        with self.assertRaises(ValueError):
            x**-1

    def test_mixed_variables(self):
        x = MultiPoly.variable("x")
        z = MultiPoly.variable("z")
        s = x + z
        self.assertEqual(s.variables, ("x", "z"))
        self.assertEqual(x, MultiPoly.variable("x", ("x", "y")))

    def test_diff(self):
        p = P("x^2*y + 3*y")
        self.assertEqual(poly_diff(p, "x"), P("2*x*y"))
        self.assertEqual(p.diff("y"), P("x^2 + 3"))
        with self.assertRaises(ValueError):
            p.diff("z")
        self.assertTrue(p.diff("z", strict=False).is_zero())

    def test_degree_and_constants(self):
        p = P("x^3*y + y^2")
        self.assertEqual(p.degree(), 4)
        self.assertEqual(p.degree("y"), 2)
        self.assertEqual(P("0").degree(), -1)
        self.assertEqual(MultiPoly.constant(Fraction(3, 4)).constant_value(), Fraction(3, 4))
        with self.assertRaises(ValueError):
            p.constant_value()

    def test_invalid(self):
        with self.assertRaises(ValueError):
            MultiPoly(("x", "x"), {})
        with self.assertRaises(ValueError):
            MultiPoly(("x",), {(1, 2): 1})
        with self.assertRaises(ValueError):
            MultiPoly(("x",), {(-1,): 1})
        with self.assertRaises(TypeError):
            MultiPoly(("x",), {(1,): 0.5})


class TestRatFunc(unittest.TestCase):
    def test_cancellation(self):
        r = RatFunc(P("x^2 - 1"), P("x - 1"))
        self.assertTrue(r.is_polynomial())
        self.assertEqual(r, R("x + 1"))
        r = R("(2*x)/(4*x*y)")
        # the denominator is normalized to leading coefficient one
        self.assertEqual(r.numerator, MultiPoly.constant(Fraction(1, 2)))
        self.assertEqual(r.denominator, P("y"))

    def test_canonical_equality(self):
        a = R("1/(x - y)")
        b = R("-1/(y - x)")
        self.assertEqual(a, b)
        self.assertEqual(a.to_text(), b.to_text())
        self.assertEqual(hash(a), hash(b))

    def test_arithmetic(self):
        a = R("1/x")
        b = R("1/y")
        self.assertEqual(ratfunc_arith(a, b, "add"), R("(x + y)/(x*y)"))
        self.assertEqual(ratfunc_arith(a, b, "sub"), R("(y - x)/(x*y)"))
        self.assertEqual(ratfunc_arith(a, b, "mul"), R("1/(x*y)"))
        self.assertEqual(ratfunc_arith(a, b, "div"), R("y/x"))
        self.assertEqual(a**-2, R("x^2"))
        with self.assertRaises(ValueError):
            ratfunc_arith(a, b, "pow")

    def test_zero_division(self):
        with self.assertRaises(ZeroDivisionError):
            RatFunc(1, 0)
        with self.assertRaises(ZeroDivisionError):
            R("x") / RatFunc(0)

    def test_diff(self):
        r = R("x/(x + y)")
        self.assertEqual(r.diff("x"), R("y/(x + y)^2"))
        self.assertEqual(partial(r, "z"), RatFunc(0))
        with self.assertRaises(ValueError):
            r.diff("z")

    def test_substitute(self):
        p = P("x^2 + y")
        self.assertEqual(substitute(p, {"x": R("y + 1")}), R("y^2 + 3*y + 1"))
        r = R("x/(x - y)")
        self.assertEqual(r.substitute({"x": R("2*y")}), RatFunc(2))
        # unassigned variables stay
        self.assertEqual(r.substitute({"y": RatFunc(0)}), RatFunc(1))
        with self.assertRaises(ZeroDivisionError):
            R("1/(x - 1)").substitute({"x": 1})


class TestResultants(unittest.TestCase):
    def test_resultant(self):
        res = resultant(P("x^2 - y"), P("x - 1"), "x")
        self.assertIn(res, (P("1 - y"), P("y - 1")))

    def test_discriminant(self):
        v = ("x", "b", "c")
        disc = discriminant(MultiPoly.from_text("x^2 + b*x + c", v), "x")
        self.assertEqual(disc, MultiPoly.from_text("b^2 - 4*c", v))

    def test_weierstrass_discriminant(self):
        v = ("x", "g2", "g3")
        cubic = MultiPoly.from_text("4*x^3 - g2*x - g3", v)
        disc = discriminant(cubic, "x")
        delta = MultiPoly.from_text("g2^3 - 27*g3^2", v)
        self.assertEqual(RatFunc(disc, delta), RatFunc(16))


class TestIntegrality(unittest.TestCase):
    def test_denominator_primes(self):
        self.assertEqual(denominator_primes(Fraction(1, 12)), {2, 3})
        self.assertEqual(denominator_primes(P("x/4 + y/9")), {2, 3})
        self.assertEqual(denominator_primes(R("(x/5)/(y + 1/2)")), {2, 5})
        self.assertTrue(has_denominator_support(P("x/8"), [2]))
        self.assertFalse(has_denominator_support(P("x/6"), [2]))
        self.assertTrue(has_denominator_support(P("x"), []))

    def test_delta_units(self):
        v = ("g2", "g3")
        delta = MultiPoly.from_text("g2^3 - 27*g3^2", v)
        self.assertTrue(is_delta_unit(RatFunc(delta * delta * 3), delta))
        self.assertTrue(is_delta_unit(RatFunc(Fraction(1, 1728), delta), delta))
        self.assertTrue(is_delta_unit(RatFunc(5), delta))
        self.assertFalse(is_delta_unit(RatFunc.variable("g2", v), delta))
        self.assertFalse(is_delta_unit(RatFunc(0), delta))

    def test_clear_delta(self):
        v = ("g2", "g3")
        delta = MultiPoly.from_text("g2^3 - 27*g3^2", v)
        g2 = MultiPoly.variable("g2", v)
        self.assertEqual(clear_delta(RatFunc(g2, delta * delta), delta), g2)
        self.assertEqual(clear_delta(RatFunc(g2), delta), g2)
        with self.assertRaises(ValueError):
            clear_delta(RatFunc(1, g2), delta)

    def test_constant_delta(self):
        one = MultiPoly.constant(1, XY)
        self.assertFalse(is_delta_unit(RatFunc.variable("x", XY), one))
        self.assertFalse(is_delta_unit(R("1/(x + 1)"), one))
        self.assertTrue(is_delta_unit(RatFunc(3), one))
        self.assertTrue(is_delta_unit(RatFunc(Fraction(2, 7)), MultiPoly.constant(5)))
        with self.assertRaises(ValueError):
            is_delta_unit(RatFunc(1), MultiPoly.constant(0, XY))


class TestRatMatrix(unittest.TestCase):
    def test_inverse(self):
        M = RatMatrix([[1, R("x")], [0, 1]])
        self.assertEqual(M.inverse(), RatMatrix([[1, R("-x")], [0, 1]]))
        self.assertEqual(M @ M.inverse(), RatMatrix.identity(2))
        with self.assertRaises(ValueError):
            RatMatrix([[R("x"), R("y")], [R("x^2"), R("x*y")]]).inverse()
        with self.assertRaises(ValueError):
            RatMatrix([[1, 2, 3]]).inverse()

    def test_solve(self):
        A = RatMatrix([[R("x"), 1], [1, R("y")]])
        b = RatMatrix([[1], [0]])
        X = A.solve(b)
        self.assertEqual(A @ X, b)
        # overdetermined but consistent
        A3 = RatMatrix([[1, 0], [0, 1], [1, 1]])
        self.assertEqual(A3.solve(RatMatrix([[1], [2], [3]])), RatMatrix([[1], [2]]))
        with self.assertRaises(ValueError):
            A3.solve(RatMatrix([[1], [2], [4]]))

    def test_structure(self):
        M = RatMatrix([[R("x"), R("y")], [R("x*y"), 0]])
        self.assertEqual(M.T, RatMatrix([[R("x"), R("x*y")], [R("y"), 0]]))
        self.assertEqual(M.diff("x"), RatMatrix([[1, 0], [R("y"), 0]]))
        self.assertEqual(M.substitute({"x": 2}), RatMatrix([[2, R("y")], [R("2*y"), 0]]))
        self.assertEqual(M.scale(2) - M, M)
        self.assertTrue((M - M).is_zero())
        self.assertEqual(M.trace(), R("x"))
        self.assertEqual(M.to_text(), [["x", "y"], ["x*y", "0"]])
        with self.assertRaises(ValueError):
            RatMatrix([[1, 2], [3]])
        with self.assertRaises(ValueError):
            M @ RatMatrix([[1, 2, 3]])


class TestWeierstrassSubstitution(unittest.TestCase):
    def test_e_to_b_discriminant(self):
        e_vars = ("e4", "e6")
        b_vars = ("b2", "b4", "b6")
        delta_e = MultiPoly.from_text("e4^3 - e6^2", e_vars)
        image = substitute(
            delta_e,
            {
                "e4": R("b2^2 - 24*b4", b_vars),
                "e6": R("b2^3 - 36*b2*b4 + 216*b6", b_vars),
            },
        )
        self.assertTrue(image.is_polynomial())
        expected = "-432*b2^3*b6 + 432*b2^2*b4^2 + 15552*b2*b4*b6 - 13824*b4^3 - 46656*b6^2"
        self.assertEqual(image.as_poly().with_variables(b_vars).to_text(), expected)
        delta_b = MultiPoly.from_text(
            "b2^2*(b4^2 - b2*b6)/4 - 8*b4^3 - 27*b6^2 + 9*b2*b4*b6", b_vars
        )
        self.assertEqual(image, RatFunc(1728 * delta_b))

    def test_g_to_e_discriminant(self):
        e_vars = ("e4", "e6")
        delta_g = MultiPoly.from_text("g2^3 - 27*g3^2", ("g2", "g3"))
        image = substitute(delta_g, {"g2": R("e4/12", e_vars), "g3": R("-e6/216", e_vars)})
        self.assertEqual(image.as_poly().with_variables(e_vars).to_text(), "1/1728*e4^3 - 1/1728*e6^2")


class TestRingProperties(unittest.TestCase):
    def setUp(self):
        self.rng = random.Random(20260401)

    def test_ring_axioms(self):
        zero = MultiPoly.constant(0, XY)
        one = MultiPoly.constant(1, XY)
        for _ in range(1000):
            a, b, c = (random_poly(self.rng) for _ in range(3))
            self.assertEqual(a + b, b + a)
            self.assertEqual(a * b, b * a)
            self.assertEqual((a + b) + c, a + (b + c))
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertEqual(a + zero, a)
            self.assertEqual(a * one, a)
            self.assertTrue((a - a).is_zero())

    def test_normalization_is_idempotent(self):
        for _ in range(200):
            r = RatFunc(random_poly(self.rng), random_nonzero_poly(self.rng))
            again = RatFunc(r.numerator, r.denominator)
            self.assertEqual(again.numerator.to_text(), r.numerator.to_text())
            self.assertEqual(again.denominator.to_text(), r.denominator.to_text())
            self.assertEqual(RatFunc.from_text(r.to_text(), XY), r)

    def test_leibniz(self):
        for _ in range(300):
            p, q = random_poly(self.rng), random_poly(self.rng)
            for var in XY:
                self.assertEqual((p * q).diff(var), p.diff(var) * q + p * q.diff(var))
        for _ in range(100):
            r = RatFunc(random_poly(self.rng), random_nonzero_poly(self.rng))
            s = RatFunc(random_poly(self.rng), random_nonzero_poly(self.rng))
            self.assertEqual(partial(r * s, "x"), partial(r, "x") * s + r * partial(s, "x"))

    def test_substitute_is_a_ring_morphism(self):
        for _ in range(200):
            p, q = random_poly(self.rng), random_poly(self.rng)
            assignment = {
                "x": RatFunc(random_poly(self.rng, ("t",))),
                "y": RatFunc(random_poly(self.rng, ("t",))),
            }
            self.assertEqual(substitute(p + q, assignment), substitute(p, assignment) + substitute(q, assignment))
            self.assertEqual(substitute(p * q, assignment), substitute(p, assignment) * substitute(q, assignment))
        self.assertEqual(substitute(MultiPoly.constant(7, XY), {"x": R("y")}), RatFunc(7))


if __name__ == "__main__":
    unittest.main()
