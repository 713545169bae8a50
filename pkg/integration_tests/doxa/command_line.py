"""
doxa command line tests.

Runs 'python -m doxa' in a subprocess and checks the output streams and exit codes.
"""

import os
import subprocess
import sys
import tempfile
import unittest

from . import expected  # pylint: disable=no-name-in-module

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")
SOURCE = os.path.join(os.getcwd(), "src")


def doxa(*args):
    env = dict(os.environ)
    env["PYTHONPATH"] = os.pathsep.join(p for p in (SOURCE, env.get("PYTHONPATH")) if p)

    return subprocess.run([sys.executable, "-m", "doxa", *args], capture_output=True, text=True, env=env, check=False)


def fixture(name):
    return os.path.join(FIXTURES, name)


class TestCommandLine(unittest.TestCase):
    """
    End-to-end tests for the command line verbs.
    """

    def test_example(self):
        """
        Tests that every fixture file is reproduced by the example verb.
        """
        for name, corpus_id in expected.FIXTURES.items():
            with open(fixture(name), encoding="utf-8", newline="") as f:
                text = f.read()

            result = doxa("example", corpus_id.value)

            self.assertEqual(result.returncode, 0, name)
            self.assertEqual(result.stdout, text, name)

        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "deck.bps")
            result = doxa("example", "drawing-card", "-o", path)

            self.assertEqual(result.returncode, 0)
            with open(path, "rb") as f, open(fixture("drawing-card.bps"), "rb") as g:
                self.assertEqual(f.read(), g.read())

    def test_check(self):
        """
        Tests summarizing a fixture file.
        """
        result = doxa("check", fixture("drawing-card.bps"))

        self.assertEqual(result.returncode, 0)
        self.assertEqual(result.stdout, "states:    53\nanswers:   2\nevidence:  53\nthreshold: 17/20\n")
        self.assertEqual(result.stderr, "")

    def test_principles(self):
        """
        Tests the exit codes for failing and holding principles.
        """
        result = doxa("principles", fixture("drawing-card.bps"), "--only", "diamond-r")

        self.assertEqual(result.returncode, 1)
        self.assertTrue(result.stdout.startswith("<>R  hpd  fails"))

        result = doxa("principles", fixture("pi-minus-counter.bps"), "--only", "pi-r,box-minus")

        self.assertEqual(result.returncode, 0)

    def test_errors(self):
        """
        Tests that usage and input errors are reported on stderr with exit code 2.
        """
        tests = [
            ("frobnicate",),
            ("check", fixture("missing.bps")),
            ("believe", fixture("drawing-card.bps"), "--evidence", "{F52 Q}"),
            ("search", "--principle", "box-minus", "--operator", "hpd", "--budget", "0", "--seed", "1"),
        ]

        for args in tests:
            result = doxa(*args)

            self.assertEqual(result.returncode, 2, args)
            self.assertEqual(result.stdout, "", args)
            self.assertTrue(result.stderr.startswith("doxa: "), args)
            self.assertEqual(result.stderr.count("\n"), 1, args)

    def test_debug(self):
        """
        Tests that --debug logs to stderr without changing stdout.
        """
        quiet = doxa("check", fixture("pi-minus-counter.bps"))
        debug = doxa("--debug", "check", fixture("pi-minus-counter.bps"))

        self.assertEqual(debug.returncode, 0)
        self.assertEqual(debug.stdout, quiet.stdout)
        self.assertIn("DEBUG", debug.stderr)

    def test_search(self):
        """
        Tests that a search run is reproducible across processes.
        """
        args = ("search", "--principle", "diamond-minus", "--operator", "hpd", "--budget", "5000", "--seed", "1")
        first = doxa(*args)
        second = doxa(*args)

        self.assertEqual(first.returncode, 1)
        self.assertEqual(first.stdout, second.stdout)


if __name__ == "__main__":
    unittest.main()
