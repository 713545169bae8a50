"""
Belief operator unit tests.

Tests the HPD and LK belief sets against worked examples and the independent HPD oracle.
"""

import random
import unittest

from dataclasses import replace
from fractions import Fraction

from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

from doxa import core
from doxa import corpus
from doxa.belief import belief_set
from doxa.belief import lk_belief_set
from doxa.belief import beliefs
from doxa.belief import believes
from doxa.belief import hpd_oracle
from doxa.belief import nm_consequence
from doxa.search import generate_random
from doxa.structs import BeliefOperator
from doxa.structs import CardQuestion
from doxa.structs import GeneratorConfig
from doxa.structs import Mode
from doxa.errors import ConditionOnNull
from doxa.errors import NotEvidence

TRIALS = 500


def names(m, b):
    return set(core.names(m, b.states))


class TestBelief(unittest.TestCase):
    """
    Test suite for the belief operators.
    """

    def test_flipping_for_heads(self):
        """
        Tests that on every suffix you believe the coin lands heads within the next seven flips.
        """
        m = corpus.make_flipping()

        for i in range(1, 22):
            e = core.proposition(m, [f"s{j}" for j in range(i, 31)])
            b = belief_set(m, e)

            self.assertEqual(names(m, b), {f"s{j}" for j in range(i, i + 7)})

    def test_drawing_card(self):
        """
        Tests the belief sets of the Drawing a Card structure under its three questions.
        """
        m = corpus.make_drawing_card()
        e = core.proposition(m, ["F52", "T"])

        self.assertEqual(names(m, belief_set(m, m.full)), {f"F{i}" for i in range(1, 53)})
        self.assertEqual(names(m, belief_set(m, e)), {"T"})
        self.assertEqual(belief_set(m, e).mass, Fraction(52, 61))
        self.assertEqual(belief_set(m, m.full).mass, Fraction(9, 10))

        m = corpus.make_drawing_card(question=CardQuestion.Q_PRIME)
        self.assertEqual(names(m, belief_set(m, m.full)), {f"F{i}" for i in range(1, 52)})

        m = corpus.make_drawing_card(question=CardQuestion.Q_DOUBLE_PRIME)
        self.assertEqual(belief_set(m, m.full).states, m.full)

    def test_lk_drawing_card_v2(self):
        """
        Tests the LK belief sets of Drawing a Card v.2.
        """
        m = corpus.make_drawing_card_v2()
        fair = {f"fair_{j}" for j in range(1, 53)}

        self.assertEqual(names(m, lk_belief_set(m, m.full)), fair)
        self.assertEqual(lk_belief_set(m, m.full).mass, Fraction(1, 5))

        for j in range(1, 53):
            e = core.proposition(m, [f"fair_{j}", f"trick_{j}"])
            self.assertEqual(names(m, lk_belief_set(m, e)), {f"trick_{j}"})

    def test_lk_threshold_failure(self):
        """
        Tests that LK belief on the singleton question at t=1/5 is only 1/10 likely.
        """
        m = corpus.make_drawing_card(question=CardQuestion.Q_DOUBLE_PRIME, t=Fraction(1, 5))
        b = lk_belief_set(m, m.full)

        self.assertEqual(names(m, b), {"T"})
        self.assertEqual(b.mass, Fraction(1, 10))

    def test_threshold_extremes(self):
        """
        Tests the belief sets at t=0 and t=1.
        """
        m = core.structure(["a", "b", "c"], [3, 2, 1], [["a"], ["b"], ["c"]], [["a", "b", "c"]], 0)

        self.assertTrue(belief_set(m, m.full).is_empty)
        self.assertEqual(lk_belief_set(m, m.full).states, m.full)

        m = core.structure(["a", "b", "c"], [3, 2, 0], [["a"], ["b"], ["c"]], [["a", "b", "c"]], 1)

        self.assertEqual(names(m, belief_set(m, m.full)), {"a", "b"})
        self.assertEqual(names(m, lk_belief_set(m, m.full)), {"a"})

    def test_ties(self):
        """
        Tests that equally probable answers are believed together.
        """
        m = core.structure(["a", "b", "c"], [2, 2, 1], [["a"], ["b"], ["c"]], [["a", "b", "c"]], "1/10")

        self.assertEqual(names(m, belief_set(m, m.full)), {"a", "b"})

    def test_beliefs(self):
        """
        Tests the operator dispatch and the belief query.
        """
        m = corpus.make_drawing_card_v2()

        self.assertEqual(beliefs(m, m.full, BeliefOperator.LK), lk_belief_set(m, m.full))
        self.assertEqual(beliefs(m, m.full, "hpd"), belief_set(m, m.full))
        self.assertTrue(believes(m, m.full, core.proposition(m, [f"fair_{j}" for j in range(1, 53)]), BeliefOperator.LK))
        self.assertFalse(believes(m, m.full, frozenset({0}), BeliefOperator.LK))

    def test_condition_on_null(self):
        """
        Tests that belief on a zero probability proposition raises ConditionOnNull.
        """
        m = core.structure(["a", "b"], [1, 0], [["a"], ["b"]], [["a", "b"]], "1/2")

        with self.assertRaises(ConditionOnNull):
            belief_set(m, frozenset({1}))

        with self.assertRaises(ConditionOnNull):
            lk_belief_set(m, frozenset({1}))

    def test_nm_consequence(self):
        """
        Tests the nonmonotonic consequence relation.
        """
        m = corpus.make_drawing_card()
        fair = core.proposition(m, [f"F{i}" for i in range(1, 53)])
        e = core.proposition(m, ["F52", "T"])

        self.assertTrue(nm_consequence(m, m.full, fair))
        self.assertFalse(nm_consequence(m, e, fair))

        with self.assertRaises(NotEvidence):
            nm_consequence(m, fair, fair)

    def test_hpd_oracle_corpus(self):
        """
        Tests that the HPD belief set matches the oracle on the worked examples.
        """
        structures = [
            corpus.make_flipping(),
            corpus.make_flipping(walkaway=True),
            corpus.make_drawing_card(),
            corpus.make_drawing_card(question=CardQuestion.Q_DOUBLE_PRIME),
            corpus.make_drawing_card_v2(),
            corpus.make_hundred_flips(n=20),
        ]

        for m in structures:
            for e in m.evidence:
                self.assertEqual(belief_set(m, e), hpd_oracle(m, e))

    def test_hpd_oracle_random(self):
        """
        Tests that the HPD belief set matches the oracle on random structures.
        """
        rng = random.Random(17)

        for _ in range(TRIALS):
            m = generate_random(GeneratorConfig(states=(1, 8), threshold_range=(0, 1), seed=rng.getrandbits(64)))
            for e in m.evidence:
                self.assertEqual(belief_set(m, e), hpd_oracle(m, e))

    def test_monotone_in_threshold(self):
        """
        Tests that raising the threshold never shrinks the HPD belief set.
        """
        rng = random.Random(43)

        for i in range(TRIALS):
            m = generate_random(GeneratorConfig(states=(1, 8), mode=list(Mode)[i % 3], seed=rng.getrandbits(64)))
            thresholds = sorted({Fraction(rng.randint(0, 20), 20) for _ in range(4)} | {m.threshold})

            for e in m.evidence:
                previous = frozenset()
                for t in thresholds:
                    b = belief_set(replace(m, threshold=t), e)
                    self.assertLessEqual(previous, b.states, t)
                    previous = b.states

    @settings(max_examples=100, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=2**64 - 1), mode=st.sampled_from(list(Mode)))
    def test_belief_invariants(self, seed, mode):
        """
        Tests that belief sets are subsets of the evidence, closed under answers and that HPD belief reaches the
        threshold.
        """
        m = generate_random(GeneratorConfig(states=(1, 8), cells=(1, 4), mode=mode, seed=seed))
        t = m.threshold

        for e in m.evidence:
            for op in BeliefOperator:
                b = beliefs(m, e, op)
                self.assertLessEqual(b.states, e)
                for s in b.states:
                    self.assertLessEqual(core.answer_of(m, s) & e, b.states)

            self.assertGreaterEqual(belief_set(m, e).mass, t)
            self.assertFalse(lk_belief_set(m, e).is_empty)


if __name__ == "__main__":
    unittest.main()
