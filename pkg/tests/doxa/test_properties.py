"""
Structural constraint unit tests.
"""

import os
import random
import unittest

from fractions import Fraction
from unittest import mock

from doxa import core
from doxa import corpus
from doxa.belief import beliefs
from doxa.properties import check_orthogonality
from doxa.properties import check_stability
from doxa.properties import check_threshold
from doxa.properties import satisfies
from doxa.search import generate_random
from doxa.structs import BeliefOperator
from doxa.structs import CardQuestion
from doxa.structs import Constraint
from doxa.structs import CorpusId
from doxa.structs import GeneratorConfig
from doxa.structs import Mode
from doxa.structs import OrthogonalityDetail
from doxa.structs import StabilityDetail
from doxa.errors import QuestionTooLarge

TRIALS = 500


class TestProperties(unittest.TestCase):
    """
    Test suite for the ORTHOGONALITY, STABILITY and THRESHOLD checks.
    """

    def test_orthogonality(self):
        """
        Tests orthogonality on the worked examples.
        """
        tests = [
            (corpus.make_appendix(CorpusId.STABILITY_BOX_PLUS), True),
            (corpus.make_appendix(CorpusId.STABILITY_DIAMOND_MINUS), False),
            (corpus.make_drawing_card(), False),
            (corpus.make_drawing_card(question=CardQuestion.Q_PRIME), True),
            (corpus.make_flipping(), True),
            (corpus.make_hundred_flips(n=10, question="sequence"), True),
        ]

        for m, expected in tests:
            self.assertEqual(check_orthogonality(m).holds, expected)

    def test_orthogonality_violation(self):
        """
        Tests the details of an orthogonality violation.
        """
        m = corpus.make_appendix(CorpusId.STABILITY_DIAMOND_MINUS)
        report = check_orthogonality(m)
        e = core.proposition(m, ["A_in", "B_in", "C_in"])

        self.assertEqual(report.constraint, Constraint.ORTHOGONALITY)
        self.assertEqual(report.violations[0].evidence, e)
        self.assertEqual(
            report.violations[0].detail,
            OrthogonalityDetail((0, 1), (m.index["A_in"], m.index["B_in"]), Fraction(5, 3), Fraction(1)),
        )

    def test_hundred_flips_orthogonality(self):
        """
        Tests that learning the first flip changes the odds of 49 against 51 heads.
        """
        m = corpus.make_hundred_flips()
        report = check_orthogonality(m)

        self.assertFalse(report.holds)
        self.assertTrue(any(v.detail.cells == (49, 51) for v in report.violations))

    def test_refined_question_is_orthogonal(self):
        """
        Tests that refining the question by the evidence makes a structure orthogonal.
        """
        rng = random.Random(31)

        for _ in range(TRIALS // 5):
            m = generate_random(GeneratorConfig(states=(1, 8), seed=rng.getrandbits(64)))

            self.assertTrue(check_orthogonality(core.refine_question(m)).holds)

    def test_stability(self):
        """
        Tests stability on the worked examples.
        """
        tests = [
            (corpus.make_appendix(CorpusId.STABILITY_BOX_PLUS), True),
            (corpus.make_appendix(CorpusId.STABILITY_DIAMOND_MINUS), True),
            (corpus.make_drawing_card(), False),
            (corpus.make_appendix(CorpusId.PI_MINUS_COUNTER), True),
        ]

        for m, expected in tests:
            self.assertEqual(check_stability(m).holds, expected)

    def test_stability_violation(self):
        """
        Tests the details of a stability violation.
        """
        m = corpus.make_drawing_card()
        report = check_stability(m)
        e = core.proposition(m, ["F52", "T"])

        self.assertEqual(report.checked, len(m.evidence) * 4)
        self.assertEqual(len(report.violations), 1)
        self.assertEqual(report.violations[0].evidence, e)
        self.assertEqual(report.violations[0].detail, StabilityDetail((0,), Fraction(9, 10), Fraction(9, 61)))

    def test_stability_question_too_large(self):
        """
        Tests that the stability check refuses questions with more answers than the configured limit.
        """
        m = corpus.make_flipping()

        with self.assertRaises(QuestionTooLarge):
            check_stability(m)

        with mock.patch.dict(os.environ, {"DOXA_MAX_QUESTION_CELLS": "2"}):
            with self.assertRaises(QuestionTooLarge):
                check_stability(corpus.make_drawing_card(question=CardQuestion.Q_PRIME))

    def test_threshold(self):
        """
        Tests THRESHOLD for both operators.
        """
        m = corpus.make_drawing_card(question=CardQuestion.Q_DOUBLE_PRIME, t=Fraction(1, 5))

        self.assertTrue(check_threshold(m, BeliefOperator.HPD).holds)

        report = check_threshold(m, BeliefOperator.LK)
        self.assertFalse(report.holds)
        self.assertEqual(report.violations[0].evidence, m.full)
        self.assertEqual(report.violations[0].detail.believed, core.proposition(m, ["T"]))
        self.assertEqual(report.violations[0].detail.mass, Fraction(1, 10))

    def test_threshold_random(self):
        """
        Tests that HPD satisfies THRESHOLD on random structures.
        """
        rng = random.Random(37)

        for _ in range(TRIALS):
            m = generate_random(GeneratorConfig(states=(1, 8), seed=rng.getrandbits(64)))
            self.assertTrue(check_threshold(m).holds)

    def test_rescaling(self):
        """
        Tests that multiplying every prior weight by the same positive factor changes no probability, belief set
        or constraint report.
        """
        rng = random.Random(47)

        for i in range(TRIALS):
            m = generate_random(GeneratorConfig(states=(1, 8), cells=(1, 4), mode=list(Mode)[i % 3], seed=rng.getrandbits(64)))
            k = Fraction(rng.randint(1, 1000), rng.randint(1, 1000))
            scaled = core.structure(
                list(m.states),
                [p * k for p in m.prior],
                [core.names(m, cell) for cell in m.question.cells],
                [core.names(m, e) for e in m.evidence],
                m.threshold,
            )

            self.assertEqual(scaled, m)
            self.assertEqual(check_orthogonality(scaled), check_orthogonality(m))
            self.assertEqual(check_stability(scaled), check_stability(m))

            for e in m.evidence:
                for cell in m.question.cells:
                    self.assertEqual(core.conditional_probability(scaled, cell, e), core.conditional_probability(m, cell, e))
                for op in BeliefOperator:
                    self.assertEqual(beliefs(scaled, e, op), beliefs(m, e, op))

    def test_satisfies(self):
        """
        Tests the early-exit constraint filter against the full reports.
        """
        rng = random.Random(41)

        for _ in range(TRIALS // 5):
            m = generate_random(GeneratorConfig(states=(1, 8), cells=(1, 6), mode=Mode.COARSE, seed=rng.getrandbits(64)))

            self.assertEqual(satisfies(m, [Constraint.ORTHOGONALITY]), check_orthogonality(m).holds)
            self.assertEqual(satisfies(m, [Constraint.STABILITY]), check_stability(m).holds)
            self.assertEqual(
                satisfies(m, [Constraint.ORTHOGONALITY, Constraint.STABILITY]),
                check_orthogonality(m).holds and check_stability(m).holds,
            )

    def test_stability_brute_force(self):
        """
        Tests the stability check against a direct enumeration of unions of answers.
        """
        rng = random.Random(43)

        for _ in range(TRIALS // 5):
            m = generate_random(GeneratorConfig(states=(1, 6), cells=(1, 4), seed=rng.getrandbits(64)))
            cells = m.question.cells
            t = m.threshold

            stable = True
            for mask in range(1, 1 << len(cells)):
                union = frozenset().union(*(c for i, c in enumerate(cells) if mask >> i & 1))
                if core.weight(m, union) >= t:
                    for e in m.evidence:
                        if union & e and core.conditional_probability(m, union, e) < t:
                            stable = False

            self.assertEqual(check_stability(m).holds, stable)

    def test_orthogonal_drawing_card(self):
        """
        Tests that drawing the ace of spades still leaves you believing the trick deck under the orthogonal question.
        """
        m = corpus.make_drawing_card(question=CardQuestion.Q_PRIME)
        e = core.proposition(m, ["F52", "T"])

        self.assertTrue(check_orthogonality(m).holds)
        self.assertEqual(core.names(m, beliefs(m, e).states), ["T"])


if __name__ == "__main__":
    unittest.main()
