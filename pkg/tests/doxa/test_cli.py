"""
Command line unit tests.

Runs each verb in-process and checks the rendered output and exit code.
"""

import json
import os
import tempfile
import unittest

from doxa import corpus
from doxa.cli import run
from doxa.dsl import parse
from doxa.dsl import serialize
from doxa.principles import check_principle
from doxa.structs import BeliefOperator
from doxa.structs import Format
from doxa.structs import Principle


class TestCLI(unittest.TestCase):
    """
    Test suite for the command line verbs.
    """

    @classmethod
    def setUpClass(cls):
        cls._dir = tempfile.TemporaryDirectory()  # pylint: disable=consider-using-with
        cls.deck = os.path.join(cls._dir.name, "deck.bps")
        cls.flips = os.path.join(cls._dir.name, "flips.bps")

        with open(cls.flips, "w", encoding="utf-8") as f:
            f.write(serialize(corpus.make_flipping(walkaway=True)))

    @classmethod
    def tearDownClass(cls):
        cls._dir.cleanup()

    def setUp(self):
        self.assertEqual(run(["example", "drawing-card", "-o", self.deck]).exit_code, 0)

    def path(self, name):
        return os.path.join(self._dir.name, name)

    def test_example(self):
        """
        Tests writing a named structure to a file and to stdout.
        """
        report = run(["example", "drawing-card", "-o", self.deck])

        self.assertEqual(report.exit_code, 0)
        self.assertEqual(report.payload, f"wrote drawing-card to {self.deck}")

        with open(self.deck, encoding="utf-8") as f:
            self.assertEqual(f.read(), serialize(corpus.make_drawing_card()))

        report = run(["example", "pi-minus-counter", "--t", "2/3"])

        self.assertEqual(report.exit_code, 0)
        self.assertTrue(report.payload.startswith("# probability structure\n"))
        self.assertTrue(report.payload.endswith("threshold: 2/3"))

    def test_check(self):
        """
        Tests validating and summarizing a structure file.
        """
        report = run(["check", self.deck])

        self.assertEqual(report.exit_code, 0)
        self.assertEqual(report.payload, "states:    53\nanswers:   2\nevidence:  53\nthreshold: 17/20")

    def test_believe(self):
        """
        Tests computing belief sets by evidence index and by set.
        """
        report = run(["believe", self.deck, "--evidence", "0"])
        fair = "{" + " ".join(f"F{i}" for i in range(1, 53)) + "}"

        self.assertEqual(report.exit_code, 0)
        self.assertIn(f"B(E)       {fair}", report.payload)
        self.assertIn("Pr(B(E)|E) 9/10", report.payload)

        report = run(["believe", self.deck, "--evidence", "{F52 T}"])

        self.assertIn("B(E)       {T}", report.payload)
        self.assertIn("Pr(B(E)|E) 52/61", report.payload)

    def test_believe_json(self):
        """
        Tests the JSON rendering of a belief set.
        """
        report = run(["--format", "json", "believe", self.deck, "--evidence", "{F52 T}", "--operator", "lk"])
        document = json.loads(report.payload)

        self.assertEqual(report.format, Format.JSON)
        self.assertEqual(document, {"operator": "lk", "evidence": ["F52", "T"], "believed": ["T"], "mass": "52/61"})

    def test_believe_question_file(self):
        """
        Tests replacing the question from a file.
        """
        question = self.path("q.bps")
        with open(question, "w", encoding="utf-8") as f:
            f.write("question: " + " ".join(f"{{ F{i} }}" for i in range(1, 53)) + " { T }\n")

        report = run(["believe", self.deck, "--evidence", "S", "--question-file", question])

        self.assertEqual(report.exit_code, 0)
        self.assertIn("Pr(B(E)|E) 1\n", report.payload)

    def test_principles(self):
        """
        Tests that <>R fails on Drawing a Card with the ace of spades as witness.
        """
        report = run(["principles", self.deck, "--only", "diamond-r"])

        self.assertEqual(report.exit_code, 1)
        self.assertTrue(report.payload.startswith("<>R  hpd  fails  52 instances"))
        self.assertIn("     E' = {F52 T}", report.payload)

        report = run(["principles", self.deck, "--only", "box-minus,cautious-monotony"])
        self.assertEqual(report.exit_code, 0)

    def test_principles_json(self):
        """
        Tests the JSON rendering of verdicts.
        """
        report = run(["principles", self.flips, "--only", "cut", "--format", "json"])
        document = json.loads(report.payload)

        self.assertEqual(report.exit_code, 1)
        self.assertEqual(len(document), 1)
        self.assertEqual(document[0]["principle"], "box-plus")
        self.assertEqual(document[0]["outcome"], "fails")
        self.assertEqual(document[0]["witnesses"][0]["before"], [f"s{i}" for i in range(1, 8)])
        self.assertEqual(document[0]["witnesses"][0]["after"], [[f"s{i}" for i in range(1, 7)]])

    def test_props(self):
        """
        Tests the constraint reports.
        """
        report = run(["props", self.deck])

        self.assertEqual(report.exit_code, 1)
        self.assertIn("orthogonality fails", report.payload)
        self.assertIn("stability     fails", report.payload)
        self.assertIn("threshold     holds", report.payload)

        report = run(["props", self.deck, "--refine"])
        self.assertIn("orthogonality holds", report.payload)

        report = run(["props", self.flips])

        self.assertEqual(report.exit_code, 0)
        self.assertIn("stability     skipped", report.payload)

    def test_search(self):
        """
        Tests searching for countermodels.
        """
        report = run(["search", "--principle", "box-minus", "--operator", "hpd", "--budget", "200", "--seed", "1"])

        self.assertEqual(report.exit_code, 0)
        self.assertEqual(report.payload, "[]- hpd: 200 tried, 200 accepted\nno countermodel found")

        output = self.path("found.bps")
        args = ["search", "--principle", "diamond-minus", "--operator", "hpd", "--budget", "5000", "--seed", "1", "-o", output]
        report = run(args)

        self.assertEqual(report.exit_code, 1)
        self.assertEqual(run(args).payload, report.payload)

        with open(output, encoding="utf-8") as f:
            m = parse(f.read())
        self.assertFalse(check_principle(m, Principle.DIAMOND_MINUS, BeliefOperator.HPD).holds)

    def test_shrink(self):
        """
        Tests shrinking a countermodel.
        """
        output = self.path("shrunk.bps")
        report = run(["shrink", self.deck, "--principle", "diamond-r", "--operator", "hpd", "-o", output])

        self.assertEqual(report.exit_code, 1)

        with open(output, encoding="utf-8") as f:
            m = parse(f.read())
        self.assertLess(len(m.states), 53)
        self.assertFalse(check_principle(m, Principle.DIAMOND_R, BeliefOperator.HPD).holds)

        report = run(["shrink", self.flips, "--principle", "box-minus", "--operator", "hpd"])
        self.assertEqual(report.exit_code, 2)

    def test_usage_errors(self):
        """
        Tests that invalid command lines exit with code 2 and a one-line diagnostic.
        """
        tests = [
            [],
            ["frobnicate"],
            ["principles"],
            ["principles", self.deck, "--only", "diamond-plus"],
            ["principles", self.deck, "--operator", "xyz"],
            ["believe", self.deck],
            ["believe", self.deck, "--evidence", "53"],
            ["believe", self.deck, "--evidence", "{F52 Q}"],
            ["search", "--principle", "box-minus", "--operator", "hpd", "--budget", "0", "--seed", "1"],
            ["search", "--principle", "box-minus", "--operator", "hpd", "--budget", "10", "--seed", "-1"],
            ["search", "--principle", "box-minus", "--operator", "hpd", "--budget", "10", "--seed", "1", "--max-states", "1"],
            ["example", "coin"],
            ["example", "flipping", "--n", "4"],
            ["example", "pi-minus-counter", "--t", "1/0"],
            ["--format", "xml", "check", self.deck],
        ]

        for argv in tests:
            report = run(argv)

            self.assertEqual(report.exit_code, 2, argv)
            self.assertTrue(report.payload.startswith("doxa: "), argv)
            self.assertNotIn("\n", report.payload, argv)

    def test_input_errors(self):
        """
        Tests that unreadable and invalid files exit with code 2.
        """
        invalid = self.path("invalid.bps")
        with open(invalid, "w", encoding="utf-8") as f:
            f.write("states: a b\nprior: uniform\nquestion: { a b }\nevidence: { S }\nthreshold: 3/2\n")

        report = run(["check", invalid])

        self.assertEqual(report.exit_code, 2)
        self.assertEqual(report.payload, f"doxa: {invalid}:5:12: threshold 3/2 not in [0,1]")

        report = run(["check", self.path("missing.bps")])

        self.assertEqual(report.exit_code, 2)
        self.assertTrue(report.payload.startswith("doxa: "))

    def test_errors_are_text(self):
        """
        Tests that errors are reported as a line of text also when JSON output is requested.
        """
        tests = [
            ["--format", "json", "check", self.path("missing.bps")],
            ["principles", self.deck, "--format", "json", "--only", "diamond-plus"],
            ["believe", self.deck, "--format", "json", "--evidence", "{F52 Q}"],
        ]

        for argv in tests:
            report = run(argv)

            self.assertEqual(report.exit_code, 2, argv)
            self.assertIs(report.format, Format.TEXT, argv)
            self.assertTrue(report.payload.startswith("doxa: "), argv)
            self.assertNotIn("\n", report.payload, argv)

    def test_deterministic(self):
        """
        Tests that identical invocations produce identical output.
        """
        for argv in (["principles", self.deck], ["props", self.deck, "--format", "json"]):
            self.assertEqual(run(argv), run(argv))


if __name__ == "__main__":
    unittest.main()
