"""
Belief operators.

HPD belief keeps the states whose answer is not outranked by answers of total conditional probability t or
more. LK belief keeps the states whose answer is at least t times as probable as every other answer.
"""

import logging

from collections import Counter
from fractions import Fraction

from . import core

from .structs import BeliefOperator
from .structs import BeliefSet
from .errors import ConditionOnNull
from .errors import NotEvidence

log = logging.getLogger(__name__)


def belief_set(m, e):
    """
    Returns the HPD belief set B(E): the states s in E for which the answers strictly more probable than
    [s]_Q have total conditional probability less than t.

        Parameters:
            m  (ProbabilityStructure)  Structure.
            e  (frozenset)             Evidence E with positive probability.

        Returns:
            BeliefSet.

        Raises:
            ConditionOnNull  If Pr(E) = 0.
    """
    e = frozenset(e)
    weights, total = _weights(m, e)
    t = m.threshold

    # cell mass -> total mass of the strictly heavier cells
    greater = {}
    running = 0
    for w, n in sorted(Counter(weights).items(), reverse=True):
        greater[w] = running
        running += w * n

    kept = {w for w, g in greater.items() if g * t.denominator < t.numerator * total}

    return _belief_set(m, e, BeliefOperator.HPD, kept, weights, total)


def lk_belief_set(m, e):
    """
    Returns the LK belief set B_LK(E): the states s in E with Pr([s]_Q|E) >= t.Pr(q|E) for every answer q.

        Parameters:
            m  (ProbabilityStructure)  Structure.
            e  (frozenset)             Evidence E with positive probability.

        Returns:
            BeliefSet.

        Raises:
            ConditionOnNull  If Pr(E) = 0.
    """
    e = frozenset(e)
    weights, total = _weights(m, e)
    t = m.threshold
    heaviest = max(weights)

    kept = {w for w in weights if w * t.denominator >= t.numerator * heaviest}

    return _belief_set(m, e, BeliefOperator.LK, kept, weights, total)


def beliefs(m, e, op=BeliefOperator.HPD):
    """
    Returns the belief set of either operator.

        Parameters:
            m   (ProbabilityStructure)  Structure.
            e   (frozenset)             Evidence E with positive probability.
            op  (BeliefOperator)        HPD or LK.

        Returns:
            BeliefSet.

        Raises:
            ConditionOnNull  If Pr(E) = 0.
    """
    if BeliefOperator(op) is BeliefOperator.LK:
        return lk_belief_set(m, e)

    return belief_set(m, e)


def believes(m, e, p, op=BeliefOperator.HPD):
    """
    Returns True if an agent with evidence E believes p, i.e. B(E) is a subset of p.
    """
    return beliefs(m, e, op).states <= frozenset(p)


def hpd_oracle(m, e):
    """
    Computes B(E) independently of belief_set: answers are ranked by conditional probability and the
    shortest run of the ranking that reaches probability t, extended to include every answer as probable as
    one already included, is intersected with E.

        Parameters:
            m  (ProbabilityStructure)  Structure.
            e  (frozenset)             Evidence E with positive probability.

        Returns:
            BeliefSet.

        Raises:
            ConditionOnNull  If Pr(E) = 0.
    """
    e = frozenset(e)
    ranked = sorted(zip(core.cell_masses(m, e), m.question.cells), key=lambda c: c[0], reverse=True)
    t = m.threshold

    region = set()
    reached = Fraction(0)
    i = 0
    while reached < t and i < len(ranked):
        level = ranked[i][0]
        while i < len(ranked) and ranked[i][0] == level:
            region.update(ranked[i][1])
            reached += level
            i += 1

    states = frozenset(region) & e

    return BeliefSet(e, BeliefOperator.HPD, states, core.conditional_probability(m, states, e))


def nm_consequence(m, p, q, op=BeliefOperator.HPD):
    """
    Nonmonotonic consequence: p |~ q iff B(p) is a subset of q.

        Parameters:
            m   (ProbabilityStructure)  Structure.
            p   (frozenset)             Antecedent, which must be a body of evidence.
            q   (frozenset)             Consequent.
            op  (BeliefOperator)        Belief operator (defaults to HPD).

        Returns:
            bool.

        Raises:
            NotEvidence      If p is not a body of evidence of the structure.
            ConditionOnNull  If Pr(p) = 0.
    """
    p = frozenset(p)
    if p not in m.evidence:
        raise NotEvidence(f"{{{' '.join(core.names(m, p))}}} is not a body of evidence")

    return believes(m, p, q, op)


def _weights(m, e):
    weights = core.cell_weights(m, e)
    total = sum(weights)
    if total == 0:
        raise ConditionOnNull(f"cannot condition on {{{' '.join(core.names(m, e))}}} (zero probability)")

    return weights, total


def _belief_set(m, e, op, kept, weights, total):
    cell_of = m.question.cell_of
    states = frozenset(s for s in e if weights[cell_of[s]] in kept)

    return BeliefSet(e, op, states, Fraction(core.mass(m, states), total))
