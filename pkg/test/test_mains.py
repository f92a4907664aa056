#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Unit testing for the hankelfq command line"""

import unittest
import io
import json

import hankelfq
import hankelfq.__main__

def run(argv):
    """Run the driver and capture (exit code, stdout, stderr)"""
    out, err = io.StringIO(), io.StringIO()
    code = hankelfq.__main__.main(argv, out, err)
    return code, out.getvalue(), err.getvalue()

class TestSingleValues(unittest.TestCase):
    """Test Suite for verbs printing a single value"""
    def test_count(self):
        code, out, _ = run("count --field q=2 --hankel-rank n=3 r=2".split())
        self.assertEqual((code, out), (0, "12\n"))
        self.assertEqual(run("count --field q=2 --coprime degrees=2,1,1".split())[1], "12\n")
        self.assertEqual(run("count --field q=3 --stratum n=2 k=2".split())[1], "18\n")
        self.assertEqual(run("count --field q=2 --stratum-rank n=3 k=1 r=2".split())[1], "4\n")
        self.assertEqual(run("count --field q=2 --rank-at-most n=3 r=2".split())[1], "16\n")

    def test_count_json(self):
        code, out, _ = run("count --field q=4 --hankel-rank n=2 r=2 --format json".split())
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out), { "q": 4, "n": 2, "r": 2, "count": 48 })

    def test_expand(self):
        code, out, _ = run("expand --field q=2 --u coeffs:1,1,1 --v coeffs:0,1 --terms 4".split())
        self.assertEqual((code, out), (0, "1,1,0,1\n"))
        self.assertEqual(run(["expand", "--field", "q=3", "--u", "X+1", "--v", "2", "--terms", "4"])[1], "2,1,2,1\n")

    def test_bezout_and_hankel(self):
        self.assertEqual(run("bezout --field q=2 --u X^2+X+1 --v X --n 2".split())[1], "1,0;0,1\n")
        code, out, _ = run("hankel --field q=2 --u X^2+X+1 --v X --barnett".split())
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines(), [ "H:q=2;n=2;a=1,1,0", "B(u,v) = 1,0;0,1", "B(u,1) = 1,1;1,0" ])

    def test_sigma(self):
        code, out, _ = run("sigma --field q=2 --f X^2+1 --g X^2+X+1".split())
        self.assertEqual((code, out), (0, "T:q=2;n=2;a=1,0,1\n"))

class TestTables(unittest.TestCase):
    """Test Suite for verbs printing JSON tables and reports"""
    def test_fiber(self):
        code, out, _ = run(["fiber", "--field", "q=2", "--hankel", "H:q=2;n=2;a=1,0,1"])
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out), [
            { "f": "coeffs:1,0,1", "g": "coeffs:1,1,1", "n": 2, "q": "2" },
            { "f": "coeffs:1,1,1", "g": "coeffs:0,0,1", "n": 2, "q": "2" } ])
        code, out, _ = run(["fiber", "--field", "q=2", "--hankel", "H:q=2;n=2;a=1,0,1", "--lambda", "1"])
        self.assertEqual(json.loads(out), { "u": "coeffs:1,1,1", "v": "coeffs:1,1", "n": 2, "q": "2" })

    def test_census(self):
        code, out, _ = run("census --field q=2 --hankel n=3".split())
        self.assertEqual(code, 0)
        table = json.loads(out)
        self.assertEqual(table["total"], 32)
        self.assertEqual(sum(c["count"] for c in table["cells"] if c["rank"] == 2), 12)
        self.assertTrue(out.startswith('{"q":2,"n":3,"cells":[{"rank":0,"delta":0,"count":1}'))
        code, out, _ = run("census --field q=2 --coprime degrees=1,1,1".split())
        self.assertEqual(json.loads(out)["by_gcd_degree"], [ { "degree": 0, "count": 6 }, { "degree": 1, "count": 2 } ])

    def test_census_text(self):
        code, out, _ = run("census --field q=2 --hankel n=2 --format text".split())
        self.assertEqual(code, 0)
        self.assertIn("Using hankelfq", out)

    def test_byte_stable(self):
        """Same inputs, same bytes, whatever the number of jobs"""
        first = run("census --field q=3 --hankel n=2".split())[1]
        second = run("census --field q=3 --hankel n=2 --jobs 2".split())[1]
        self.assertEqual(first, second)

    def test_verify(self):
        code, out, _ = run("verify --field q=2 --sigma n=2 --format json".split())
        self.assertEqual(code, 0)
        report = json.loads(out)
        self.assertTrue(report["fibers_uniform"])
        self.assertTrue(report["surjective"])
        self.assertEqual((report["pairs"], report["images"], report["fiber_size"]), (8, 4, 2))
        self.assertEqual(run("verify --field q=3 --hankel n=2".split())[0], 0)
        self.assertEqual(run("verify --field q=2 --coprime degrees=2,2 --format text".split())[0], 0)

class TestErrors(unittest.TestCase):
    """Test Suite for exit codes on bad input"""
    def test_bad_field(self):
        code, out, err = run("count --field q=6 --stratum n=2 k=1".split())
        self.assertEqual(code, 2)
        self.assertEqual(out, "")
        self.assertIn("prime power", err)

    def test_bad_poly(self):
        code, _, err = run("expand --field q=3 --u coeffs:3,1 --v coeffs:1 --terms 2".split())
        self.assertEqual(code, 2)
        self.assertTrue(err)

    def test_precondition(self):
        self.assertEqual(run("sigma --field q=2 --f X^2+1 --g X^2+1".split())[0], 2)
        self.assertEqual(run(["fiber", "--field", "q=2", "--hankel", "H:q=2;n=2;a=1,1,1"])[0], 2)
        self.assertEqual(run("count --field q=2 --hankel-rank n=2 r=3".split())[0], 2)
        self.assertEqual(run("census --field q=3 --hankel n=4 --budget 100".split())[0], 2)

    def test_unicode_digits(self):
        code, out, err = run(["expand", "--field", "q=2", "--u", "X^2+\N{SUPERSCRIPT TWO}", "--v", "X", "--terms", "2"])
        self.assertEqual((code, out), (2, ""))
        self.assertIn("hankelfq expand", err)

    def test_usage(self):
        self.assertEqual(run("count --field q=2".split())[0], 2)
        self.assertEqual(run("count --field q=2 --stratum n=2".split())[0], 2)

    def test_usage_goes_to_errfile(self):
        """argparse diagnostics land in the given error stream"""
        code, out, err = run(["frobnicate"])
        self.assertEqual((code, out), (2, ""))
        self.assertIn("usage: hankelfq", err)
        code, out, err = run("count --field q=2".split())
        self.assertEqual(code, 2)
        self.assertIn("usage:", err)

    def test_version(self):
        code, out, _ = run(["--version"])
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), "hankelfq {}".format(hankelfq.__version__))

if __name__ == '__main__':
    unittest.main()
