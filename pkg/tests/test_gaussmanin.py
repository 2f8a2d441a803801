# coding: utf-8

import unittest

from ramanujan.exact import MultiPoly, RatFunc, RatMatrix, has_denominator_support
from ramanujan.gaussmanin import (
    AffineChart,
    ChartMorphism,
    ConnectionChart,
    builtin_chart,
    builtin_morphism,
    check_curvature,
    check_homogeneity,
    check_symplectic_compatibility,
    compose_morphisms,
    contract,
    derived_chart,
    diff_charts,
    identity_morphism,
    kodaira_spencer,
    phi_matrix,
    printed_anomalies,
    printed_chart,
    pullback_connection,
    standard_form,
)
from ramanujan.model import Chart
from ramanujan.vectorfields import coordinate_field, ramanujan_field

W = ("g2", "g3")


class TestBuiltinCharts(unittest.TestCase):
    def test_weierstrass(self):
        chart = builtin_chart(Chart.WEIERSTRASS)
        self.assertEqual(chart.g, 1)
        self.assertEqual(chart.coordinates, W)
        self.assertEqual(chart.delta, MultiPoly.from_text("g2^3 - 27*g3^2", W))
        delta = RatFunc(chart.delta)
        self.assertEqual(chart.omega("g2")[1, 0], RatFunc.from_text("-9/2*g3", W) / delta)
        self.assertEqual(chart.omega("g3")[0, 0], RatFunc.from_text("9/2*g3", W) / delta)
        self.assertEqual(chart.omega("g3")[1, 1], RatFunc.from_text("-9/2*g3", W) / delta)
        self.assertEqual(chart.anomalies, ())

    def test_coercion(self):
        self.assertEqual(builtin_chart("e"), builtin_chart(Chart.E))
        self.assertEqual(builtin_chart(3).coordinates, ("b2", "b4", "b6"))

    def test_printed_b_anomalies(self):
        anomalies = printed_anomalies(Chart.B)
        duplicated = {(a["entry"], a["differential"]) for a in anomalies if a["kind"] == "duplicated"}
        missing = {(a["entry"], a["differential"]) for a in anomalies if a["kind"] == "missing"}
        self.assertEqual(duplicated, {("11", "db6"), ("12", "db6")})
        self.assertEqual(missing, {("11", "db4"), ("12", "db4")})
        self.assertEqual(len(builtin_chart(Chart.B).anomalies), 4)
        self.assertEqual(printed_anomalies(Chart.E), [])
        self.assertEqual(len(printed_chart(Chart.B)["11"]), 3)
        self.assertEqual(printed_chart(Chart.B)["22"], "-11")

    def test_invalid_chart(self):
        delta = MultiPoly.from_text("x", ("x",))
        with self.assertRaises(ValueError):
            ConnectionChart("bad", ("x",), delta, ("omega", "eta"), {})
        with self.assertRaises(ValueError):
            ConnectionChart(
                "bad", ("x",), delta, ("omega", "eta"), {"x": RatMatrix.identity(3)}
            )
        with self.assertRaises(ValueError):
            ConnectionChart(
                "bad",
                ("x",),
                delta,
                ("omega", "eta"),
                {"x": RatMatrix([[RatFunc.from_text("1/(x + 1)", ("x",)), 0], [0, 0]])},
            )
        with self.assertRaises(ValueError):
            AffineChart("bad", ("x", "x"), delta)
        with self.assertRaises(ValueError):
            AffineChart("bad", ("y",), delta)


class TestPullback(unittest.TestCase):
    def test_e_chart_matches_printed(self):
        self.assertEqual(derived_chart(Chart.E), builtin_chart(Chart.E))

    def test_b_chart_differs_from_printed(self):
        printed = builtin_chart(Chart.B)
        derived = derived_chart(Chart.B)
        self.assertNotEqual(printed, derived)
        rows = diff_charts(printed, derived)
        self.assertEqual(len(rows), 3 * 4)
        bad = [r for r in rows if not r["equal"]]
        self.assertTrue(bad)
        self.assertTrue(all(r["coordinate"] in ("b4", "b6") for r in bad))
        self.assertTrue(all(r["entry"] in ("11", "12", "22") for r in bad))

    def test_composition(self):
        w = builtin_chart(Chart.WEIERSTRASS)
        m = compose_morphisms(builtin_morphism("e_to_weierstrass"), builtin_morphism("b_to_e"))
        self.assertEqual(m.source.coordinates, ("b2", "b4", "b6"))
        self.assertEqual(pullback_connection(w, m), derived_chart(Chart.B))
        with self.assertRaises(ValueError):
            compose_morphisms(builtin_morphism("b_to_e"), builtin_morphism("e_to_weierstrass"))

    def test_identity(self):
        chart = builtin_chart(Chart.E)
        self.assertEqual(pullback_connection(chart, identity_morphism(chart)), chart)

    def test_mismatch(self):
        with self.assertRaises(ValueError):
            pullback_connection(builtin_chart(Chart.E), builtin_morphism("e_to_weierstrass"))
        with self.assertRaises(KeyError):
            builtin_morphism("weierstrass_to_b")

    def test_delta_must_pull_back_to_unit(self):
        e = builtin_chart(Chart.E).affine
        w = builtin_chart(Chart.WEIERSTRASS).affine
        cmap = {"g2": RatFunc.variable("e2"), "g3": RatFunc.variable("e4")}
        with self.assertRaises(ValueError):
            ChartMorphism(e, w, cmap, RatMatrix.identity(2))
        with self.assertRaises(ValueError):
            ChartMorphism(e, w, {"g2": RatFunc.variable("e4")}, RatMatrix.identity(2))


class TestStructure(unittest.TestCase):
    def test_compatibility(self):
        for chart in (
            builtin_chart(Chart.WEIERSTRASS),
            builtin_chart(Chart.E),
            builtin_chart(Chart.B),
            derived_chart(Chart.B),
        ):
            self.assertTrue(all(check_symplectic_compatibility(chart).values()), chart.name)

    def test_flatness(self):
        for chart in (builtin_chart(Chart.WEIERSTRASS), derived_chart(Chart.E), derived_chart(Chart.B)):
            result = check_curvature(chart)
            self.assertTrue(result)
            self.assertTrue(all(result.values()), chart.name)

    def test_homogeneity(self):
        for which in Chart:
            self.assertTrue(all(check_homogeneity(derived_chart(which)).values()), which)
        self.assertFalse(all(check_homogeneity(builtin_chart(Chart.B)).values()))

    def test_integrality(self):
        primes = {Chart.E: (2, 3), Chart.B: (2,)}
        for which, allowed in primes.items():
            chart = derived_chart(which)
            for c in chart.coordinates:
                for row in chart.omega(c).rows:
                    for entry in row:
                        self.assertTrue(has_denominator_support(entry, allowed), entry)

    def test_forms(self):
        self.assertEqual(standard_form(1), RatMatrix([[0, 1], [-1, 0]]))
        self.assertEqual(phi_matrix(2, 1, 2), RatMatrix([[0, 1], [1, 0]]))
        self.assertEqual(phi_matrix(2, 2, 2), RatMatrix([[0, 0], [0, 1]]))
        with self.assertRaises(ValueError):
            phi_matrix(2, 1, 3)


class TestContraction(unittest.TestCase):
    def test_ramanujan_field(self):
        for which in (Chart.E, Chart.B):
            chart = derived_chart(which)
            v = ramanujan_field(which)
            self.assertEqual(contract(chart, v), RatMatrix([[0, 0], [1, 0]]))
            self.assertEqual(kodaira_spencer(chart, v), RatMatrix([[1]]))

    def test_coordinate_field(self):
        chart = builtin_chart(Chart.E)
        v = coordinate_field(chart.coordinates, "e2")
        self.assertEqual(contract(chart, v), chart.omega("e2"))

    def test_wrong_chart(self):
        with self.assertRaises(ValueError):
            contract(builtin_chart(Chart.E), ramanujan_field(Chart.B))


if __name__ == "__main__":
    unittest.main()
