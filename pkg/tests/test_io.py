# coding: utf-8

import json
import os
import tempfile
import unittest

import pandas as pd
import ramanujan, ramanujan.io, ramanujan.model


class TestSettingsFiles(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        # Set up temporary directory
        cls.tempdir = tempfile.TemporaryDirectory()
        cls.tempdirname = cls.tempdir.name

        # Set temporary filenames
        cls.settings_toml = os.path.join(cls.tempdirname, "settings.toml")
        cls.nested_toml = os.path.join(cls.tempdirname, "nested.toml")
        cls.settings_json = os.path.join(cls.tempdirname, "settings.json")
        cls.settings_txt = os.path.join(cls.tempdirname, "settings.txt")
        cls.settings_yaml = os.path.join(cls.tempdirname, "settings.yaml")
        cls.bad_toml = os.path.join(cls.tempdirname, "bad.toml")

        with open(cls.settings_toml, "w") as fout:
            fout.write('order = 20\ntorsor-trials = 7\ntol = 1e-9\n')
        with open(cls.nested_toml, "w") as fout:
            fout.write("[settings]\ng = 2\nseed = 11\n")
        with open(cls.settings_json, "w") as fout:
            json.dump({"order": 30, "q1": 0.03}, fout)
        with open(cls.settings_txt, "w") as fout:
            json.dump({"series-order": 16}, fout)
        with open(cls.settings_yaml, "w") as fout:
            fout.write("formal-trials: 4\n")
        with open(cls.bad_toml, "w") as fout:
            fout.write("orders = 20\n")

    @classmethod
    def tearDownClass(cls):
        cls.tempdir.cleanup()

    def test_read_toml(self):
        settings = ramanujan.io.read_settings(self.settings_toml)
        self.assertEqual(settings.order, 20)
        self.assertEqual(settings.torsor_trials, 7)
        self.assertEqual(settings.tol, 1e-9)
        self.assertEqual(settings.g, 4)
        nested = ramanujan.io.read_settings(self.nested_toml)
        self.assertEqual((nested.g, nested.seed), (2, 11))

    def test_read_json(self):
        settings = ramanujan.io.read_settings(self.settings_json)
        self.assertEqual(settings.order, 30)
        self.assertEqual(settings.q1, 0.03)
        forced = ramanujan.io.read_settings(self.settings_txt, format="json")
        self.assertEqual(forced.series_order, 16)

    def test_read_yaml(self):
        try:
            import yaml  # noqa: F401
        except ImportError:
            self.skipTest("pyyaml is not installed")
        settings = ramanujan.io.read_settings(self.settings_yaml)
        self.assertEqual(settings.formal_trials, 4)

    def test_unknown_key(self):
        with self.assertRaises(TypeError):
            ramanujan.io.read_settings(self.bad_toml)


class TestReports(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.tempdir = tempfile.TemporaryDirectory()
        cls.tempdirname = cls.tempdir.name

    @classmethod
    def tearDownClass(cls):
        cls.tempdir.cleanup()

    def _report(self):
        report = ramanujan.model.Report(
            "verify-qseries", inputs={"order": 10}, versions={"ramanujan": ramanujan.__version__}
        )
        report.add("ramanujan-e2", True, order=10, first_nonzero_index=None)
        report.add("ramanujan-literal-reading", "info", residual_zero=False)
        return report

    def test_write_and_read(self):
        first = os.path.join(self.tempdirname, "first.json")
        second = os.path.join(self.tempdirname, "second.json")
        text = ramanujan.io.write_report(self._report(), first)
        ramanujan.io.write_report(self._report(), second)
        with open(first, "rb") as f1, open(second, "rb") as f2:
            self.assertEqual(f1.read(), f2.read())
        self.assertEqual(json.loads(text)["counts"], {"fail": 0, "info": 1, "pass": 1})
        self.assertEqual(ramanujan.io.read_report(first), self._report())

    def test_invalid_report(self):
        report = self._report()
        report.add("ramanujan-e2", True)
        with self.assertRaises(ValueError):
            ramanujan.io.write_report(report)

    def test_trajectory_csv(self):
        filename = os.path.join(self.tempdirname, "trajectory.csv")
        samples = pd.DataFrame({"step": [0, 1], "time.real": [0.0, 0.5], "x.real": [1.0, 2.0]})
        ramanujan.io.write_trajectory_csv(samples, filename)
        df = pd.read_csv(filename)
        self.assertEqual(list(df.columns), ["step", "time.real", "x.real"])
        self.assertEqual(len(df), 2)


class TestPackagedData(unittest.TestCase):
    def test_chart_data(self):
        data = ramanujan.io.load_chart_data()
        self.assertEqual(set(data["charts"]), {"weierstrass", "e", "b"})
        self.assertEqual(set(data["morphisms"]), {"e_to_weierstrass", "b_to_e"})
        self.assertEqual(set(data["fields"]), {"e", "b"})
        self.assertEqual(data["schema-version"], 1)

    def test_hash(self):
        digest = ramanujan.io.data_file_hash()
        self.assertEqual(len(digest), 64)
        self.assertEqual(digest, ramanujan.io.data_file_hash())


if __name__ == "__main__":
    unittest.main()
