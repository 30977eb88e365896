"""End-to-end checks of the amod command line: outputs, formats, exit codes."""

import json
import os
import subprocess
import sys
import tempfile
import unittest

CLI = sys.argv.pop(1) if len(sys.argv) > 1 else "amod"


def run(*args):
    p = subprocess.run([CLI, *args], capture_output=True, text=True, timeout=300)
    return p.returncode, p.stdout, p.stderr


class CliTest(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()

    def path(self, name):
        return os.path.join(self.tmp.name, name)

    def test_wieferich(self):
        code, out, _ = run("log", "wieferich", "--alpha", "2", "--target", "0", "--hi", "10000")
        self.assertEqual(code, 0)
        self.assertEqual(out.split(), ["p", "1093", "3511"])
        code, out, _ = run("log", "wieferich", "--alpha", "2", "--target", "1", "--hi", "10000", "--format", "json")
        self.assertEqual(json.loads(out)["primes"], [3, 29, 37, 3373])

    def test_sweep_csv_and_json_agree(self):
        code, csv_out, _ = run("sweep", "fib", "--q", "2,3", "--lo", "7", "--hi", "500")
        self.assertEqual(code, 0)
        lines = csv_out.strip().splitlines()
        self.assertEqual(lines[0], "q,p,ord,index,lhs,rhs,verdict,skip_reason")
        code, js, _ = run("sweep", "fib", "--q", "2,3", "--lo", "7", "--hi", "500", "--format", "json")
        rows = [r for s in json.loads(js) for r in s["rows"]]
        self.assertEqual(len(rows), len(lines) - 1)
        self.assertEqual(sum(r["verdict"] == "violation" for r in rows), 0)

    def test_sweeps_of_every_kind(self):
        for kind, extra in [("bressoud", ["--q", "2"]), ("bernoulli", []), ("euler", []), ("ec", ["--curve", "1,0"])]:
            code, out, err = run("sweep", kind, "--lo", "5", "--hi", "300", *extra)
            self.assertEqual(code, 0, kind + ": " + err)
            self.assertNotIn("violation", out)

    def test_deterministic_output(self):
        args = ("sweep", "bressoud", "--q", "2,3/2", "--lo", "5", "--hi", "800")
        self.assertEqual(run(*args)[1], run(*args)[1])

    def test_element_scan_round_trip(self):
        f = self.path("f1.json")
        code, _, err = run("element", "build", "fib", "--q", "1", "--lo", "7", "--hi", "500", "--out", f)
        self.assertEqual(code, 0, err)
        with open(f) as fh:
            self.assertEqual(json.load(fh)["window"], {"lo": 7, "hi": 500})
        code, out, _ = run("scan", "relation", "--in", f, "--dmax", "2", "--hmax", "3")
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[1].split(",")[0], "x^2-1")

        b, e = self.path("B.csv"), self.path("E.csv")
        run("element", "build", "scriptB", "--lo", "7", "--hi", "500", "--out", b)
        run("element", "build", "scriptE", "--lo", "7", "--hi", "500", "--out", e)
        code, out, _ = run("scan", "relation", "--in", b, "--in2", e, "--dmax", "2", "--hmax", "1", "--format", "json")
        self.assertEqual(code, 0)
        self.assertIn("x*y", [h["poly"] for h in json.loads(out)["hits"]])

    def test_audits(self):
        self.assertEqual(run("audit", "growth", "--values", "floorlog", "--dmax", "4")[0], 0)
        self.assertEqual(run("audit", "growth", "--values", "floorsqrt", "--dmax", "2")[0], 1)
        code, out, _ = run("audit", "lz1", "--q", "2", "--r", "3", "--c", "1", "--N", "1", "--X", "10000",
                           "--format", "json")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["verdict"], "consistent")

    def test_phiell(self):
        code, out, _ = run("log", "phiell", "--u", "2", "--v", "1", "--ell", "11", "--rat", "1/1", "--format", "json")
        self.assertEqual(code, 0)
        r = json.loads(out)
        self.assertEqual(r["phi"], "2047")
        self.assertEqual([f["p"] for f in r["factors"]], ["23", "89"])

    def test_config_file(self):
        cfg = self.path("run.cfg")
        with open(cfg, "w") as fh:
            fh.write("# small sweep\nlo=7\nhi=100\nq=2,3\nformat=json\n")
        code, out, _ = run("sweep", "fib", "--config", cfg)
        self.assertEqual(code, 0)
        self.assertEqual(len(json.loads(out)), 2)
        # Command-line values win over the file.
        code, out, _ = run("sweep", "fib", "--config", cfg, "--hi", "20", "--format", "csv")
        self.assertEqual(out.splitlines()[-1].split(",")[1], "19")

    def test_out_suffix_selects_json(self):
        f = self.path("traces.json")
        self.assertEqual(run("sweep", "ec", "--curve", "-1,1", "--lo", "5", "--hi", "200", "--out", f)[0], 0)
        with open(f) as fh:
            json.load(fh)

    def test_exit_codes(self):
        self.assertEqual(run()[0], 2)
        self.assertEqual(run("sweep", "fib", "--q", "2", "--lo", "50", "--hi", "10")[0], 2)
        self.assertEqual(run("sweep", "fib", "--q", "2", "--hi", "100000000")[0], 3)
        self.assertEqual(run("sweep", "fib", "--q", "1/0")[0], 2)
        self.assertEqual(run("sweep", "ec", "--curve", "0,0")[0], 2)
        self.assertEqual(run("scan", "relation", "--in", self.path("missing.csv"))[0], 2)
        code, _, err = run("log", "wieferich", "--alpha", "2", "--hi", "20000000")
        self.assertEqual(code, 3)
        self.assertIn("capacity", err)


if __name__ == "__main__":
    unittest.main()
