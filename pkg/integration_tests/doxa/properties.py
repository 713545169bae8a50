"""
doxa property tests.

Checks the valid principles on large batches of seeded random structures and compares the HPD belief
sets with the independent oracle. DOXA_PROPERTY_TRIALS sets the number of structures per test (default
10000).
"""

import os
import random
import unittest

from fractions import Fraction

from doxa import corpus
from doxa.belief import belief_set
from doxa.belief import hpd_oracle
from doxa.principles import check_principle
from doxa.properties import check_orthogonality
from doxa.properties import satisfies
from doxa.search import generate_random
from doxa.structs import Constraint
from doxa.structs import CorpusId
from doxa.structs import GeneratorConfig
from doxa.structs import Mode
from doxa.structs import Principle

from . import expected  # pylint: disable=no-name-in-module

HPD = expected.HPD
LK = expected.LK

MAX_STATES = 8
ACCEPTED = 500


def trials():
    try:
        return max(int(os.environ.get("DOXA_PROPERTY_TRIALS", "10000")), 1)
    except ValueError:
        return 10000


def structures(seed, count, modes=(Mode.FREE,), **kwargs):
    """
    Yields 'count' random structures with at most MAX_STATES states, cycling through the generator modes.
    """
    rng = random.Random(seed)

    for i in range(count):
        cfg = GeneratorConfig(states=(1, MAX_STATES), mode=modes[i % len(modes)], seed=rng.getrandbits(64), **kwargs)

        yield generate_random(cfg)


class TestProperties(unittest.TestCase):
    """
    Randomized checks of the valid principles.
    """

    def assertHolds(self, m, principles, op):  # pylint: disable=invalid-name
        for principle in principles:
            verdict = check_principle(m, principle, op)
            if not verdict.holds:
                self.fail(f"{principle.value} fails for {op.value}: {verdict.witnesses[0].detail}")

    def test_hpd(self):
        """
        Tests that []- and []R hold for HPD.
        """
        for m in structures(101, trials()):
            self.assertHolds(m, (Principle.BOX_MINUS, Principle.BOX_R), HPD)

    def test_lk(self):
        """
        Tests that []+ and []- hold for LK.
        """
        for m in structures(103, trials()):
            self.assertHolds(m, (Principle.BOX_PLUS, Principle.BOX_MINUS), LK)

    def test_hpd_orthogonal(self):
        """
        Tests that <>R and Pi- hold for HPD on orthogonal structures.
        """
        for m in structures(107, trials(), modes=(Mode.COARSE, Mode.PRODUCT)):
            self.assertTrue(check_orthogonality(m).holds)
            self.assertHolds(m, (Principle.DIAMOND_R, Principle.PI_MINUS), HPD)

    def test_lk_orthogonal(self):
        """
        Tests that []+, []-, []R, <>R and Pi- hold for LK on orthogonal structures.
        """
        principles = (Principle.BOX_PLUS, Principle.BOX_MINUS, Principle.BOX_R, Principle.DIAMOND_R, Principle.PI_MINUS)

        for m in structures(109, trials(), modes=(Mode.COARSE, Mode.PRODUCT)):
            self.assertHolds(m, principles, LK)

    def test_hpd_stable_orthogonal(self):
        """
        Tests that <>- holds for HPD on structures that are both stable and orthogonal.
        """
        target = min(ACCEPTED, trials())
        accepted = 0
        constraints = (Constraint.ORTHOGONALITY, Constraint.STABILITY)

        for m in structures(113, 100 * target, modes=(Mode.COARSE, Mode.PRODUCT), cells=(1, 4)):
            if satisfies(m, constraints):
                accepted += 1
                self.assertHolds(m, (Principle.DIAMOND_MINUS,), HPD)
                if accepted >= target:
                    break

        self.assertGreaterEqual(accepted, target)

    def test_hpd_high_threshold(self):
        """
        Tests that Pi R holds for HPD when t > 1/2.
        """
        for m in structures(127, trials(), threshold_range=(Fraction(51, 100), Fraction(1))):
            self.assertGreater(m.threshold, Fraction(1, 2))
            self.assertHolds(m, (Principle.PI_R,), HPD)

    def test_hpd_oracle(self):
        """
        Tests that the HPD belief sets match the independent oracle on the named and random structures.
        """
        for corpus_id in CorpusId:
            m = corpus.make(corpus_id)
            for e in m.evidence:
                self.assertEqual(belief_set(m, e), hpd_oracle(m, e), corpus_id)

        for m in structures(131, trials(), modes=(Mode.FREE, Mode.COARSE, Mode.PRODUCT), threshold_range=(0, 1)):
            for e in m.evidence:
                self.assertEqual(belief_set(m, e), hpd_oracle(m, e))


if __name__ == "__main__":
    unittest.main()
