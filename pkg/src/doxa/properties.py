"""
Structural constraints.

ORTHOGONALITY: conditioning on a body of evidence never changes the ratio of the probabilities of two
answers, unless it rules one of them out.

STABILITY: every union of answers with prior probability at least t keeps conditional probability at least
t on every body of evidence it overlaps.

THRESHOLD: everything believed on a body of evidence has conditional probability at least t.
"""

import logging

from fractions import Fraction

from . import config
from . import core

from .belief import beliefs
from .structs import BeliefOperator
from .structs import Constraint
from .structs import ConstraintReport
from .structs import OrthogonalityDetail
from .structs import Outcome
from .structs import StabilityDetail
from .structs import ThresholdDetail
from .structs import Violation
from .errors import QuestionTooLarge

log = logging.getLogger(__name__)


def check_orthogonality(m):
    """
    Checks ORTHOGONALITY using the division-free identity Pr(q).Pr(q' & E) = Pr(q').Pr(q & E) for every
    body of evidence E and every pair of answers q, q' that intersect E with Pr(q'|E) > 0.

        Parameters:
            m  (ProbabilityStructure)  Structure.

        Returns:
            ConstraintReport.
    """
    violations = tuple(_orthogonality(m))
    checked = sum(_cell_pairs(m, e) for e in m.evidence)

    return _report(Constraint.ORTHOGONALITY, violations, checked)


def check_stability(m, limit=None):
    """
    Checks STABILITY by enumerating every set X of answers: if Pr(UX) >= t and UX intersects E then
    Pr(UX|E) >= t, for every body of evidence E.

        Parameters:
            m      (ProbabilityStructure)  Structure.
            limit  (int)                   Optional maximum number of answers. Defaults to config.max_question_cells().

        Returns:
            ConstraintReport.

        Raises:
            QuestionTooLarge  If the question has more answers than the limit.
    """
    _check_size(m, limit)

    violations = tuple(_stability(m))
    checked = len(m.evidence) * 2 ** len(m.question.cells)

    return _report(Constraint.STABILITY, violations, checked)


def check_threshold(m, op=BeliefOperator.HPD):
    """
    Checks THRESHOLD: Pr(B(E)|E) >= t for every body of evidence E.

        Parameters:
            m   (ProbabilityStructure)  Structure.
            op  (BeliefOperator)        Belief operator.

        Returns:
            ConstraintReport.
    """
    op = BeliefOperator(op)
    t = m.threshold
    violations = []

    for e in m.evidence:
        b = beliefs(m, e, op)
        if b.mass < t:
            violations.append(Violation(e, ThresholdDetail(op, b.states, b.mass)))

    return _report(Constraint.THRESHOLD, tuple(violations), len(m.evidence))


def satisfies(m, constraints, limit=None):
    """
    Returns True if the structure satisfies every listed constraint. Stops at the first violation.

        Parameters:
            m            (ProbabilityStructure)  Structure.
            constraints  (list)                  Constraints (ORTHOGONALITY and/or STABILITY).
            limit        (int)                   Optional maximum number of answers for STABILITY.

        Raises:
            QuestionTooLarge  If STABILITY is required and the question has too many answers.
    """
    for constraint in constraints:
        match Constraint(constraint):
            case Constraint.ORTHOGONALITY:
                if next(_orthogonality(m), None) is not None:
                    return False

            case Constraint.STABILITY:
                _check_size(m, limit)
                if next(_stability(m), None) is not None:
                    return False

            case Constraint.THRESHOLD:
                if not check_threshold(m).holds:
                    return False

    return True


def _report(constraint, violations, checked):
    outcome = Outcome.FAILS if violations else Outcome.HOLDS

    log.debug("%s: %d checked, %d violations", constraint.value, checked, len(violations))

    return ConstraintReport(constraint, outcome, violations, checked)


def _check_size(m, limit):
    limit = config.max_question_cells(limit)
    if len(m.question.cells) > limit:
        raise QuestionTooLarge(f"question has {len(m.question.cells)} cells (limit is {limit})")


def _cell_masses(m):
    return [core.mass(m, cell) for cell in m.question.cells]


def _orthogonality(m):
    cells = m.question.cells
    prior = _cell_masses(m)

    for e in m.evidence:
        w = core.cell_weights(m, e)
        overlap = [i for i, cell in enumerate(cells) if cell & e]
        positive = [i for i in overlap if w[i] > 0]
        ref = positive[0]

        if all(prior[i] * w[ref] == prior[ref] * w[i] for i in overlap):
            continue

        for i in overlap:
            for j in positive:
                if i == j or (i > j and w[i] > 0):
                    continue

                if prior[i] * w[j] != prior[j] * w[i]:
                    detail = OrthogonalityDetail(
                        (i, j),
                        (min(cells[i] & e), min(cells[j] & e)),
                        Fraction(prior[i], prior[j]),
                        Fraction(w[i], w[j]),
                    )

                    yield Violation(e, detail)


def _cell_pairs(m, e):
    w = core.cell_weights(m, e)
    overlap = sum(1 for cell in m.question.cells if cell & e)
    positive = sum(1 for x in w if x > 0)

    return positive * (positive - 1) // 2 + (overlap - positive) * positive


def _subset_sums(values):
    sums = [0] * (1 << len(values))
    for mask in range(1, len(sums)):
        low = mask & -mask
        sums[mask] = sums[mask ^ low] + values[low.bit_length() - 1]

    return sums


def _stability(m):
    t = m.threshold
    cells = m.question.cells
    prior = _subset_sums(_cell_masses(m))
    total = prior[-1]

    for e in m.evidence:
        w = core.cell_weights(m, e)
        conditional = _subset_sums(w)
        overlap = sum(1 << i for i, cell in enumerate(cells) if cell & e)
        denominator = conditional[-1]

        for mask in range(1, len(prior)):
            if mask & overlap and prior[mask] * t.denominator >= t.numerator * total:
                if conditional[mask] * t.denominator < t.numerator * denominator:
                    detail = StabilityDetail(
                        tuple(i for i in range(len(cells)) if mask >> i & 1),
                        Fraction(prior[mask], total),
                        Fraction(conditional[mask], denominator),
                    )

                    yield Violation(e, detail)
