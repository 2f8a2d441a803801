# coding: utf-8

import unittest

import ramanujan, ramanujan.model


class TestEnums(unittest.TestCase):
    def test_chart_coercion(self):
        Chart = ramanujan.model.Chart
        self.assertIs(Chart.coerce("b"), Chart.B)
        self.assertIs(Chart.coerce(" Weierstrass "), Chart.WEIERSTRASS)
        self.assertIs(Chart.coerce(2), Chart.E)
        self.assertIs(Chart.coerce(Chart.B), Chart.B)
        with self.assertRaises(KeyError):
            Chart.coerce("c")
        with self.assertRaises(ValueError):
            Chart.coerce(7)
        with self.assertRaises(TypeError):
            Chart.coerce(2.0)

    def test_check_status(self):
        Check = ramanujan.model.Check
        CheckStatus = ramanujan.model.CheckStatus
        self.assertIs(Check("a", True).status, CheckStatus.PASS)
        self.assertIs(Check("a", False).status, CheckStatus.FAIL)
        self.assertIs(Check("a", "info").status, CheckStatus.INFO)
        self.assertIs(Check("a", 0).status, CheckStatus.FAIL)
        self.assertTrue(Check("a", "info").passed)
        self.assertFalse(Check("a", "fail").passed)
        with self.assertRaises(TypeError):
            Check("a", 1.5)
        check = Check("a", "pass", {"x": 1})
        self.assertEqual(check.to_dict(), {"name": "a", "status": "pass", "detail": {"x": 1}})
        self.assertEqual(Check.from_dict(check.to_dict()), check)


class TestReport(unittest.TestCase):
    def test_add_and_counts(self):
        report = ramanujan.model.Report("verify-qseries", inputs={"order": 10})
        report.add("one", True, order=10)
        report.add("two", "info")
        self.assertTrue(report.passed)
        self.assertEqual(report.counts, {"fail": 0, "pass": 1, "info": 1})
        report.add("three", False)
        self.assertFalse(report.passed)
        self.assertEqual(report.checks[0].detail, {"order": 10})

    def test_extend(self):
        inner = ramanujan.model.Report("flow")
        inner.add("e/series", True)
        outer = ramanujan.model.Report("all")
        outer.extend(inner, prefix="flow")
        outer.extend(inner)
        self.assertEqual([c.name for c in outer.checks], ["flow/e/series", "e/series"])

    def test_validate(self):
        report = ramanujan.model.Report("all")
        report.add("a", True)
        report.validate()
        report.add("a", True)
        with self.assertRaises(ValueError):
            report.validate()
        with self.assertRaises(ValueError):
            ramanujan.model.Report("").validate()
        with self.assertRaises(ValueError):
            ramanujan.model.Report("all", schema_version=99).validate()

    def test_dict_roundtrip(self):
        report = ramanujan.model.Report("flow", inputs={"tol": 1e-10}, versions={"ramanujan": "x"})
        report.add("e/series", True, max_abs_err=1e-12)
        d = report.to_dict()
        self.assertEqual(d["schema-version"], 1)
        self.assertTrue(d["passed"])
        self.assertEqual(ramanujan.model.Report.from_dict(d), report)


class TestSettings(unittest.TestCase):
    def test_defaults(self):
        settings = ramanujan.model.Settings()
        self.assertEqual(settings.order, 200)
        self.assertEqual(settings.g, 4)
        self.assertEqual(settings.trials, 500)
        self.assertEqual(settings.torsor_trials, 200)
        self.assertEqual(settings.tol, 1e-10)
        self.assertEqual(settings.seed, 1729)

    def test_from_dict(self):
        settings = ramanujan.model.Settings.from_dict({"torsor-trials": "5", "tol": "1e-8", "Series Order": 32})
        self.assertEqual(settings.torsor_trials, 5)
        self.assertEqual(settings.tol, 1e-8)
        self.assertEqual(settings.series_order, 32)
        self.assertEqual(settings.to_dict()["torsor-trials"], 5)
        with self.assertRaises(TypeError):
            ramanujan.model.Settings.from_dict({"colour": "blue"})

    def test_default_map(self):
        settings = ramanujan.model.Settings(order=12, g=8)
        dmap = settings.default_map()
        self.assertEqual(dmap["verify-qseries"], {"order": 12})
        self.assertEqual(dmap["symplectic-selftest"]["g"], 6)
        self.assertEqual(dmap["formal-check"]["g"], 8)
        self.assertEqual(set(dmap["flow"]), {"tol", "q0", "q1", "series_order"})
        self.assertEqual(dmap["all"]["q1"], settings.q1)
        self.assertEqual(dmap["all"]["series_order"], settings.series_order)


if __name__ == "__main__":
    unittest.main()
