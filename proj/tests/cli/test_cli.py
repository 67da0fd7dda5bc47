#!/usr/bin/env python3
"""End-to-end tests of the h4tool command line: exit codes, output files and
determinism."""

import argparse
import json
import os
import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

TOOL = None
FIXTURES = None


def h4tool(*args, cwd=None):
    return subprocess.run([TOOL, *args], cwd=cwd, capture_output=True, text=True)


class WorkDir(unittest.TestCase):
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.work = Path(self._tmp.name)

    def tearDown(self):
        self._tmp.cleanup()

    def run_ok(self, *args):
        proc = h4tool(*args, cwd=self.work)
        self.assertEqual(proc.returncode, 0, proc.stderr)
        return proc

    def load(self, name):
        return json.loads((self.work / name).read_text())


class BuildTest(WorkDir):
    def test_build_is_deterministic(self):
        self.run_ok("build", "--out", "a.json")
        self.run_ok("build", "--out", "b.json")
        a = (self.work / "a.json").read_bytes()
        self.assertEqual(a, (self.work / "b.json").read_bytes())
        doc = json.loads(a)
        self.assertEqual(doc["kind"], "config")
        self.assertEqual(len(doc["points"]), 60)
        self.assertEqual(len(doc["planes"]), 60)
        self.assertEqual(len(doc["lines"]), 72)

    def test_default_output_name(self):
        self.run_ok("build")
        self.assertTrue((self.work / "config.json").exists())

    def test_unwritable_path_is_a_usage_error(self):
        proc = h4tool("build", "--out", str(self.work / "missing" / "dir" / "c.json"))
        self.assertEqual(proc.returncode, 2)
        self.assertIn("cannot open", proc.stderr)

    def test_unknown_subcommand(self):
        self.assertEqual(h4tool("frobnicate").returncode, 2)
        self.assertEqual(h4tool().returncode, 2)


class IncidenceTest(WorkDir):
    def test_plane_table_matches(self):
        proc = self.run_ok("incidences", "--kind", "planes")
        rows = proc.stdout.splitlines()
        self.assertEqual(len(rows), 60)
        self.assertTrue(rows[0].startswith("V_1: "))
        self.assertEqual(len(rows[0].split(":")[1].split(",")), 15)

    def test_line_table_json(self):
        self.run_ok("incidences", "--kind", "lines", "--emit", "json", "--out", "lines.json")
        lines = self.load("lines.json")
        self.assertEqual(len(lines), 72)
        self.assertTrue(all(len(l) == 5 for l in lines))

    def test_corrupted_reference_is_reported(self):
        proc = h4tool("incidences", "--kind", "planes", "--reference", str(FIXTURES / "planes_corrupted.txt"))
        self.assertEqual(proc.returncode, 1)
        self.assertIn("- V_7:", proc.stderr)
        self.assertIn("+ V_7:", proc.stderr)

    def test_missing_reference_file(self):
        proc = h4tool("incidences", "--reference", str(self.work / "nope.txt"))
        self.assertEqual(proc.returncode, 2)

    def test_bad_kind(self):
        self.assertEqual(h4tool("incidences", "--kind", "points").returncode, 2)


class CoveringTest(WorkDir):
    def test_count(self):
        proc = self.run_ok("coverings", "--count-only")
        self.assertEqual(proc.stdout.strip(), "84")

    def test_json_rows_are_partitions(self):
        self.run_ok("coverings", "--emit", "json", "--out", "c.json")
        covers = self.load("c.json")
        self.assertEqual(len(covers), 84)
        self.assertEqual(covers, sorted(covers))
        self.run_ok("incidences", "--kind", "lines", "--emit", "json", "--out", "lines.json")
        lines = self.load("lines.json")
        for cover in covers:
            points = sorted(p for l in cover for p in lines[l - 1])
            self.assertEqual(points, list(range(1, 61)))

    def test_computed_lines_file_reproduces_table(self):
        self.run_ok("incidences", "--kind", "lines", "--emit", "json", "--out", "lines.json")
        proc = self.run_ok("coverings", "--count-only", "--lines-file", "lines.json")
        self.assertEqual(proc.stdout.strip(), "84")

    def test_tampered_lines_file_fails(self):
        proc = h4tool("coverings", "--count-only", "--lines-file", str(FIXTURES / "lines_tampered.json"))
        self.assertEqual(proc.returncode, 1)
        self.assertNotEqual(proc.stdout.strip(), "84")

    def test_malformed_lines_file(self):
        (self.work / "bad.json").write_text("[[1, 2,")
        proc = h4tool("coverings", "--lines-file", "bad.json", cwd=self.work)
        self.assertEqual(proc.returncode, 2)


class GridTest(WorkDir):
    def test_count(self):
        proc = self.run_ok("grids", "--count-only")
        self.assertEqual(proc.stdout.strip(), "72")

    def test_reference_grids_listed(self):
        self.run_ok("grids", "--emit", "json", "--out", "g.json")
        grids = self.load("g.json")
        self.assertEqual(len(grids), 72)
        self.assertIn({"l": [1, 17, 32, 54, 58], "m": grids[0]["m"]}, grids)


class VerifyTest(WorkDir):
    def test_geproci_seed_1(self):
        proc = self.run_ok("verify", "geproci", "--seed", "1")
        cert = self.load("geproci-cert.json")
        self.assertEqual(cert["kind"], "geproci")
        self.assertTrue(cert["passed"])
        self.assertEqual(cert["dimension_table"], [0, 0, 0, 0, 0, 1])
        self.assertEqual(cert["c6_smoothness"]["status"], "smooth")
        self.assertEqual(cert["bezout_count"], 60)
        self.assertFalse(cert["c6_divides_product"])
        self.assertIn("pass  bezout_count", proc.stdout)

    def test_halfgrid_z1(self):
        self.run_ok("verify", "halfgrid", "--subset", "z1", "--seed", "1", "--out", "a.json")
        cert = self.load("a.json")
        self.assertTrue(cert["passed"])
        self.assertEqual(len(cert["subset"]), 30)
        self.assertEqual(len(cert["lines"]), 6)
        self.assertEqual(cert["line_product"]["degree"], 6)
        self.assertEqual(cert["gamma"]["form"]["degree"], 5)
        self.run_ok("verify", "halfgrid", "--subset", "z1", "--seed", "1", "--out", "b.json")
        self.assertEqual((self.work / "a.json").read_bytes(), (self.work / "b.json").read_bytes())

    def test_halfgrid_wrong_lines(self):
        cover = self._reference_cover("z2")
        wrong = list(cover)
        wrong[1] = next(l for l in range(1, 73) if l not in cover)
        proc = h4tool("verify", "halfgrid", "--subset", "z2", "--lines", ",".join(map(str, wrong)), cwd=self.work)
        self.assertEqual(proc.returncode, 1)
        cert = self.load("halfgrid-cert.json")
        self.assertFalse(cert["passed"])

    def test_halfgrid_bad_subset(self):
        self.assertEqual(h4tool("verify", "halfgrid", "--subset", "z3").returncode, 2)

    def test_not_halfgrid(self):
        proc = self.run_ok("verify", "not-halfgrid")
        self.assertIn("max_collinear = 5", proc.stdout)
        report = self.load("refutation.json")
        self.assertTrue(report["refuted"])
        self.assertEqual(report["point_count"], 60)
        self.assertTrue(all(t["excluded"] for t in report["types"]))

    def test_refutation_does_not_apply_to_a_half(self):
        proc = h4tool("verify", "not-halfgrid", "--subset", "z1", cwd=self.work)
        self.assertEqual(proc.returncode, 1)
        report = self.load("refutation.json")
        self.assertFalse(report["refuted"])
        self.assertTrue(any(not t["excluded"] for t in report["types"]))

    def _reference_cover(self, half):
        self.run_ok("verify", "halfgrid", "--subset", half, "--out", "cover.json")
        return self.load("cover.json")["lines"]


class ReportTest(WorkDir):
    def test_report_single_seed(self):
        self.run_ok("report", "--seeds", "1", "--out", "r.json")
        report = self.load("r.json")
        self.assertEqual(report["kind"], "report")
        self.assertTrue(report["passed"])
        self.assertEqual(report["seeds"], [1])
        names = [c["name"] for c in report["checks"]]
        for expected in ["plane_table", "line_table", "coverings", "grid_count", "geproci_seed_1",
                         "halfgrid_z1_seed_1", "halfgrid_z2_seed_1", "not_halfgrid", "z1_refutation_fails"]:
            self.assertIn(expected, names)

    def test_bad_seed_list(self):
        proc = h4tool("report", "--seeds", "1,x", "--out", "r.json", cwd=self.work)
        self.assertEqual(proc.returncode, 2)
        self.assertFalse((self.work / "r.json").exists())


def main():
    global TOOL, FIXTURES
    parser = argparse.ArgumentParser()
    parser.add_argument("--tool", required=True)
    parser.add_argument("--fixtures", required=True)
    args, rest = parser.parse_known_args()
    TOOL = os.path.abspath(args.tool)
    FIXTURES = Path(args.fixtures).resolve()
    unittest.main(argv=[sys.argv[0], *rest], verbosity=2)


if __name__ == "__main__":
    main()
