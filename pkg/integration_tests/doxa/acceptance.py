"""
doxa acceptance tests.

End-to-end checks of the worked examples: belief sets, principle verdicts and constraint reports on the
fixture files, countermodel search and the structure-definition file format.
"""

import os
import unittest

from doxa import core
from doxa import corpus
from doxa.belief import belief_set
from doxa.belief import lk_belief_set
from doxa.dsl import parse
from doxa.dsl import serialize
from doxa.principles import check_principle
from doxa.principles import replay
from doxa.properties import check_orthogonality
from doxa.properties import check_stability
from doxa.search import search_countermodel
from doxa.search import shrink
from doxa.structs import CardQuestion
from doxa.structs import CorpusId
from doxa.structs import FlipsQuestion
from doxa.structs import GeneratorConfig
from doxa.structs import Principle

from . import expected  # pylint: disable=no-name-in-module

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")

HPD = expected.HPD
LK = expected.LK


def load(name):
    with open(os.path.join(FIXTURES, name), encoding="utf-8", newline="") as f:
        return f.read()


def names(m, p):
    return set(core.names(m, p))


class TestAcceptance(unittest.TestCase):
    """
    Acceptance tests for the worked examples.
    """

    def test_flipping_for_heads(self):
        """
        Tests that on every suffix you believe the coin lands heads within the next seven flips.
        """
        m = parse(load("flipping.bps"))

        for i, believed in expected.FlippingBeliefs.items():
            e = core.proposition(m, [f"s{j}" for j in range(i, 31)])
            self.assertEqual(names(m, belief_set(m, e).states), believed, i)

    def test_flipping_walkaway(self):
        """
        Tests the []+ violation of the walkaway variant.
        """
        m = corpus.make(CorpusId.FLIPPING_WITH_WALKAWAY)
        e = core.proposition(m, expected.WalkawayBefore)

        self.assertEqual(names(m, belief_set(m, e).states), expected.WalkawayAfter)

        verdict = check_principle(m, Principle.BOX_PLUS, HPD)

        self.assertFalse(verdict.holds)
        self.assertEqual(len(verdict.witnesses), 1)
        self.assertEqual(names(m, verdict.witnesses[0].before.states), expected.WalkawayBefore)
        self.assertEqual(names(m, verdict.witnesses[0].after[0].states), expected.WalkawayAfter)

    def test_drawing_card(self):
        """
        Tests Drawing a Card under its three questions and the <>R reversal.
        """
        m = parse(load("drawing-card.bps"))
        e = core.proposition(m, ["F52", "T"])

        self.assertEqual(names(m, belief_set(m, m.full).states), expected.DrawingCard["B(S)"])
        self.assertEqual(names(m, belief_set(m, e).states), expected.DrawingCard["B({F52,T})"])
        self.assertEqual(core.conditional_probability(m, core.proposition(m, ["T"]), e), expected.DrawingCard["Pr(T|{F52,T})"])

        verdict = check_principle(m, Principle.DIAMOND_R, HPD)

        self.assertFalse(verdict.holds)
        self.assertEqual(verdict.witnesses[0].discovery, e)

        q1 = corpus.make_drawing_card(question=CardQuestion.Q_PRIME)
        q2 = corpus.make_drawing_card(question=CardQuestion.Q_DOUBLE_PRIME)

        self.assertEqual(names(q1, belief_set(q1, q1.full).states), expected.DrawingCard["B(S) Q'"])
        self.assertEqual(belief_set(q2, q2.full).states, q2.full)

    def test_pi_minus_counter(self):
        """
        Tests that Pi- fails for the odd/even partition and that each discovery is believed exactly.
        """
        m = parse(load("pi-minus-counter.bps"))
        odd, even = (core.proposition(m, p) for p in expected.PiMinusCounter["partition"])

        self.assertEqual(names(m, belief_set(m, m.full).states), expected.PiMinusCounter["B(S)"])
        self.assertEqual(belief_set(m, odd).states, odd)
        self.assertEqual(belief_set(m, even).states, even)

        verdict = check_principle(m, Principle.PI_MINUS, HPD)

        self.assertFalse(verdict.holds)
        self.assertEqual(set(verdict.witnesses[0].partition), {odd, even})

    def test_stability_box_plus(self):
        """
        Tests that []+ fails on a stable structure.
        """
        m = parse(load("stability-box-plus.bps"))
        ab = core.proposition(m, ["a", "b"])

        self.assertTrue(check_stability(m).holds)
        self.assertEqual(names(m, belief_set(m, m.full).states), expected.StabilityBoxPlus["B(S)"])
        self.assertEqual(names(m, belief_set(m, ab).states), expected.StabilityBoxPlus["B({a,b})"])
        self.assertFalse(check_principle(m, Principle.BOX_PLUS, HPD).holds)

    def test_stability_diamond_minus(self):
        """
        Tests that <>- fails on a stable structure that is not orthogonal.
        """
        m = parse(load("stability-diamond-minus.bps"))
        e = core.proposition(m, expected.StabilityDiamondMinus["E"])

        self.assertTrue(check_stability(m).holds)
        self.assertFalse(check_orthogonality(m).holds)
        self.assertEqual(belief_set(m, e).states, e)

        verdict = check_principle(m, Principle.DIAMOND_MINUS, HPD)

        self.assertFalse(verdict.holds)
        self.assertEqual(verdict.witnesses[0].after[0].states, e)

    def test_drawing_card_v2(self):
        """
        Tests the LK belief sets of Drawing a Card v.2 and the principles that fail for LK.
        """
        m = corpus.make(CorpusId.DRAWING_CARD_V2)

        self.assertEqual(names(m, lk_belief_set(m, m.full).states), expected.DrawingCardV2["B(S)"])

        for j in range(1, 53):
            e = core.proposition(m, [f"fair_{j}", f"trick_{j}"])
            self.assertEqual(names(m, lk_belief_set(m, e).states), {f"trick_{j}"}, j)

        for principle in expected.DrawingCardV2["failures"]:
            self.assertFalse(check_principle(m, principle, LK).holds, principle)

    def test_lk_threshold(self):
        """
        Tests that LK belief on the singleton question can be less likely than the threshold.
        """
        m = corpus.make(CorpusId.DRAWING_CARD_Q_DOUBLE_PRIME, t=expected.LKThreshold["t"])
        b = lk_belief_set(m, m.full)

        self.assertEqual(names(m, b.states), expected.LKThreshold["B(S)"])
        self.assertEqual(b.mass, expected.LKThreshold["mass"])
        self.assertLess(b.mass, m.threshold)

    def test_search(self):
        """
        Tests that the unconstrained search finds countermodels that still fail after shrinking.
        """
        cfg = GeneratorConfig(
            states=(2, expected.SEARCH_MAX_STATES),
            cells=(1, expected.SEARCH_MAX_STATES),
            seed=expected.SEARCH_SEED,
        )

        for principle, op in expected.Searches:
            result = search_countermodel(principle, op, cfg=cfg, budget=expected.SEARCH_BUDGET)

            self.assertIsNotNone(result.found, (principle, op))
            self.assertLessEqual(len(result.found.structure.states), expected.SEARCH_MAX_STATES)

            m = shrink(result.found.structure, principle, op)
            verdict = check_principle(m, principle, op)

            self.assertFalse(verdict.holds, (principle, op))
            self.assertLessEqual(len(m.states), len(result.found.structure.states))
            for witness in verdict.witnesses:
                self.assertTrue(replay(m, principle, op, witness), (principle, op))

    def test_hundred_flips(self):
        """
        Tests the One Hundred Flips belief and orthogonality violation, and the sequence variant.
        """
        m = corpus.make_hundred_flips()
        heads = {s: int(s[2:]) for s in m.states}

        self.assertTrue(all(heads[s] <= 90 for s in core.names(m, belief_set(m, m.full).states)))

        report = check_orthogonality(m)

        self.assertFalse(report.holds)
        self.assertIn((49, 51), [v.detail.cells for v in report.violations])

        m = corpus.make_hundred_flips(n=10, question=FlipsQuestion.SEQUENCE)

        self.assertEqual(belief_set(m, m.full).states, m.full)

    def test_fixtures(self):
        """
        Tests that every fixture file is the canonical text of its named structure.
        """
        for name, corpus_id in expected.FIXTURES.items():
            text = load(name)
            m = parse(text)

            self.assertEqual(m, corpus.make(corpus_id), name)
            self.assertEqual(serialize(m), text, name)
            self.assertEqual(serialize(corpus.make(corpus_id)), text, name)

    def test_round_trip(self):
        """
        Tests that parse(serialize(m)) == m for every named structure.
        """
        for corpus_id in CorpusId:
            m = corpus.make(corpus_id)

            self.assertEqual(parse(serialize(m)), m, corpus_id)
            self.assertEqual(serialize(m), serialize(corpus.make(corpus_id)), corpus_id)


if __name__ == "__main__":
    unittest.main()
