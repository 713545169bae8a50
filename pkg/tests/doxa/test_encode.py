"""
Structure-definition encoder unit tests.
"""

import random
import unittest

from doxa import core
from doxa import corpus
from doxa.dsl import parse
from doxa.dsl import serialize
from doxa.dsl import codec
from doxa.search import generate_random
from doxa.structs import CorpusId
from doxa.structs import GeneratorConfig
from doxa.structs import Mode

EXPECTED = """\
# probability structure
states: s1 s2 s3 s4 s5 s6
prior: s1=1/6 s2=1/6 s3=1/6 s4=1/6 s5=1/6 s6=1/6
question: { s1 s2 } { s3 s4 } { s5 } { s6 }
evidence: { S } { s1 s3 s5 } { s2 s4 s6 }
threshold: 13/20
"""


class TestEncode(unittest.TestCase):
    """
    Test suite for the structure-definition encoder.
    """

    def test_serialize(self):
        """
        Tests the canonical text of a small structure.
        """
        self.assertEqual(serialize(corpus.make_appendix(CorpusId.PI_MINUS_COUNTER)), EXPECTED)

    def test_serialize_canonical(self):
        """
        Tests that equal structures serialize to identical text.
        """
        m = core.structure(["a", "b", "c"], [2, 1, 1], [["b", "c"], ["a"]], [["b", "c"], ["a", "b", "c"]], "1/2")
        n = core.structure(["a", "b", "c"], [1, "1/2", ".5"], [["a"], ["c", "b"]], [["a", "b", "c"], ["c", "b"]], ".5")

        self.assertEqual(serialize(m), serialize(n))
        self.assertEqual(
            serialize(m),
            "# probability structure\n"
            "states: a b c\n"
            "prior: a=1/2 b=1/4 c=1/4\n"
            "question: { a } { b c }\n"
            "evidence: { S } { b c }\n"
            "threshold: 1/2\n",
        )

    def test_serialize_wraps_long_sections(self):
        """
        Tests that long sections are wrapped onto indented continuation lines.
        """
        text = serialize(corpus.make_flipping())
        lines = text.split("\n")

        self.assertTrue(all(len(line) <= codec.WIDTH for line in lines))
        self.assertTrue(any(line.startswith(codec.INDENT) for line in lines))
        self.assertTrue(text.endswith("\n"))
        self.assertNotIn("\r", text)

    def test_serialize_one_cell_question(self):
        """
        Tests that a one-cell question is written out in full and reads back.
        """
        m = core.structure(["a", "b"], "uniform", [["a", "b"]], [["a", "b"], ["a"]], "1/2")
        text = serialize(m)

        self.assertIn("question: { a b }\n", text)
        self.assertIn("evidence: { S } { a }\n", text)
        self.assertEqual(parse(text), m)

    def test_round_trip_random(self):
        """
        Tests that parse(serialize(m)) == m for random structures in every generator mode.
        """
        rng = random.Random(37)

        for i in range(300):
            cfg = GeneratorConfig(states=(1, 8), mode=list(Mode)[i % 3], seed=rng.getrandbits(64))
            m = generate_random(cfg)
            text = serialize(m)

            self.assertEqual(parse(text), m, text)
            self.assertEqual(serialize(parse(text)), text)

    def test_round_trip(self):
        """
        Tests that parsing the text of every named structure gives back the structure.
        """
        for name in CorpusId:
            m = corpus.make(name)
            text = serialize(m)

            self.assertEqual(parse(text), m, name)
            self.assertEqual(serialize(parse(text)), text, name)


if __name__ == "__main__":
    unittest.main()
