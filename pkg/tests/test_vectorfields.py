# coding: utf-8

import unittest

from ramanujan.exact import RatFunc
from ramanujan.gaussmanin import builtin_chart, derived_chart
from ramanujan.model import Chart
from ramanujan.vectorfields import (
    ChartIsomorphism,
    PolyVectorField,
    b_to_e_isomorphism,
    compose_isomorphisms,
    coordinate_field,
    identity_isomorphism,
    lie_bracket,
    pushforward,
    ramanujan_field,
    scaling_exponent,
    scaling_isomorphism,
    solve_higher_ramanujan,
    verify_commutation,
)

B = ("b2", "b4", "b6")
E = ("e2", "e4", "e6")
XY = ("x", "y")


class TestFields(unittest.TestCase):
    def test_published_fields(self):
        v = ramanujan_field(Chart.B)
        self.assertEqual(v.coordinates, B)
        self.assertEqual(v.to_dict(), {"b2": "2*b4", "b4": "3*b6", "b6": "b2*b6 - b4^2"})
        w = ramanujan_field("e")
        self.assertEqual(w.component("e2"), RatFunc.from_text("(e2^2 - e4)/12", E))
        self.assertTrue(w.is_polynomial())
        with self.assertRaises(ValueError):
            ramanujan_field(Chart.WEIERSTRASS)

    def test_apply(self):
        v = ramanujan_field(Chart.B)
        self.assertEqual(v.apply(RatFunc.variable("b2", B)), RatFunc.from_text("2*b4", B))
        self.assertEqual(v.apply(RatFunc.from_text("b2*b4", B)), RatFunc.from_text("2*b4^2 + 3*b2*b6", B))
        self.assertEqual(v.apply(RatFunc(7)), RatFunc(0))

    def test_construction(self):
        with self.assertRaises(ValueError):
            PolyVectorField(XY, [1])
        with self.assertRaises(ValueError):
            PolyVectorField.from_mapping(XY, {"z": 1})
        v = PolyVectorField.from_mapping(XY, {"y": "x^2"})
        self.assertEqual(v.component("x"), RatFunc(0))
        self.assertTrue(PolyVectorField.zero(XY).is_zero())
        self.assertEqual(v + v, v.scale(2))
        self.assertTrue((v - v).is_zero())
        with self.assertRaises(ValueError):
            coordinate_field(XY, "z")
        with self.assertRaises(ValueError):
            v + ramanujan_field(Chart.B)


class TestBrackets(unittest.TestCase):
    def test_bracket(self):
        dx = coordinate_field(XY, "x")
        dy = coordinate_field(XY, "y")
        x_dy = PolyVectorField.from_mapping(XY, {"y": "x"})
        self.assertTrue(lie_bracket(dx, dy).is_zero())
        self.assertEqual(lie_bracket(dx, x_dy), dy)
        self.assertEqual(lie_bracket(x_dy, dx), -dy)
        v = ramanujan_field(Chart.B)
        self.assertTrue(lie_bracket(v, v).is_zero())

    def test_commutation(self):
        dx = coordinate_field(XY, "x")
        dy = coordinate_field(XY, "y")
        self.assertTrue(verify_commutation([dx, dy]))
        self.assertTrue(verify_commutation([ramanujan_field(Chart.E)]))
        self.assertFalse(verify_commutation([dx, PolyVectorField.from_mapping(XY, {"y": "x"})]))


class TestIsomorphisms(unittest.TestCase):
    def test_b_to_e(self):
        iso = b_to_e_isomorphism()
        self.assertEqual(iso.source, B)
        self.assertEqual(iso.target, E)
        pushed = pushforward(ramanujan_field(Chart.B), iso)
        self.assertEqual(pushed, ramanujan_field(Chart.E))

    def test_identity_and_composition(self):
        iso = b_to_e_isomorphism()
        both = compose_isomorphisms(iso, identity_isomorphism(B))
        v = ramanujan_field(Chart.B)
        self.assertEqual(pushforward(v, both), pushforward(v, iso))
        self.assertEqual(pushforward(v, identity_isomorphism(B)), v)
        with self.assertRaises(ValueError):
            compose_isomorphisms(identity_isomorphism(B), iso)
        with self.assertRaises(ValueError):
            pushforward(ramanujan_field(Chart.E), iso)

    def test_not_an_isomorphism(self):
        x, y = RatFunc.variable("x", XY), RatFunc.variable("y", XY)
        with self.assertRaises(ValueError):
            ChartIsomorphism(XY, XY, {"x": x, "y": x + y}, {"x": x, "y": y})
        with self.assertRaises(ValueError):
            ChartIsomorphism(XY, XY, {"x": x}, {"x": x, "y": y})
        iso = ChartIsomorphism(XY, XY, {"x": x, "y": x + y}, {"x": x, "y": y - x})
        self.assertEqual(
            pushforward(coordinate_field(XY, "x"), iso),
            PolyVectorField(XY, [1, 1]),
        )

    def test_scaling(self):
        self.assertEqual(scaling_exponent(ramanujan_field(Chart.B), (2, 4, 6)), -2)
        self.assertEqual(scaling_exponent(ramanujan_field(Chart.E), (2, 4, 6)), -2)
        self.assertEqual(scaling_exponent(coordinate_field(XY, "x"), (1, 3)), 1)
        mixed = PolyVectorField.from_mapping(XY, {"x": "1", "y": "1"})
        self.assertIsNone(scaling_exponent(mixed, (1, 3)))
        self.assertIsNone(scaling_exponent(PolyVectorField.zero(XY), (1, 3)))
        with self.assertRaises(ValueError):
            scaling_isomorphism(XY, (1, 3), parameter="x")
        with self.assertRaises(ValueError):
            scaling_isomorphism(XY, (1,))


class TestSolve(unittest.TestCase):
    def test_recovers_published_fields(self):
        for which in (Chart.E, Chart.B):
            fields = solve_higher_ramanujan(derived_chart(which))
            self.assertEqual(list(fields), [(1, 1)])
            self.assertTrue(fields[(1, 1)].is_polynomial())
            self.assertEqual(fields[(1, 1)], ramanujan_field(which))

    def test_wrong_dimension(self):
        with self.assertRaises(ValueError):
            solve_higher_ramanujan(builtin_chart(Chart.WEIERSTRASS))


if __name__ == "__main__":
    unittest.main()
