"""
Belief-revision principles.

Decides the seven principles on a structure for either belief operator. A discovery of p with evidence E
is represented by the body of evidence E' = E & p: the preconditions and conclusions of every pairwise
principle depend on p only through E', so checking every pair E' < E of bodies of evidence is exhaustive.
"""

import itertools
import logging

from . import config
from . import core

from .belief import beliefs
from .structs import BeliefOperator
from .structs import Outcome
from .structs import Principle
from .structs import Verdict
from .structs import Witness

log = logging.getLogger(__name__)

# (precondition, conclusion) of the pairwise principles
_PAIRWISE = {
    Principle.DIAMOND_MINUS: ("diamond", "minus"),
    Principle.DIAMOND_R: ("diamond", "r"),
    Principle.BOX_PLUS: ("box", "plus"),
    Principle.BOX_MINUS: ("box", "minus"),
    Principle.BOX_R: ("box", "r"),
}

_ENTAILMENTS = [
    (Principle.DIAMOND_MINUS, Principle.BOX_MINUS),
    (Principle.DIAMOND_R, Principle.BOX_R),
    (Principle.BOX_MINUS, Principle.BOX_R),
    (Principle.BOX_PLUS, Principle.BOX_R),
    (Principle.PI_MINUS, Principle.PI_R),
]


def enumerate_discoveries(m):
    """
    Returns every ordered pair (E, E') of bodies of evidence with E' a proper subset of E, in canonical
    order.

        Parameters:
            m  (ProbabilityStructure)  Structure.

        Returns:
            list of (frozenset, frozenset) tuples.
    """
    return [(e, f) for e in m.evidence for f in m.evidence if f < e]


def enumerate_partitions(m, e, limit=None):
    """
    Returns the subfamilies of the evidence family that partition E, including the trivial partition {E}.
    Each partition is a tuple of bodies of evidence in canonical order.

        Parameters:
            m      (ProbabilityStructure)  Structure.
            e      (frozenset)             Body of evidence to partition.
            limit  (int)                   Optional maximum number of partitions to return. Defaults to
                                           config.max_partitions().

        Returns:
            list of tuples.
    """
    limit = config.max_partitions(limit)

    return list(itertools.islice(exact_covers(frozenset(e), m.evidence), limit))


def exact_covers(universe, candidates):
    """
    Generates every selection of pairwise disjoint candidates whose union is the universe, branching on the
    uncovered element with the fewest remaining candidates.

        Parameters:
            universe    (frozenset)  Set to cover.
            candidates  (list)       Candidate subsets, in the order partition members are reported.

        Returns:
            Generator over tuples of candidates, each in candidate order.
    """
    order = {c: i for i, c in enumerate(candidates)}

    def search(remaining, available, chosen):
        if not remaining:
            yield tuple(sorted(chosen, key=order.get))
            return

        options = {s: [c for c in available if s in c] for s in remaining}
        element = min(remaining, key=lambda s: (len(options[s]), s))

        for c in options[element]:
            rest = remaining - c
            yield from search(rest, [d for d in available if d <= rest], chosen + [c])

    yield from search(universe, [c for c in candidates if c and c <= universe], [])


def check_principle(m, principle, op=BeliefOperator.HPD, limit=None):
    """
    Checks a principle on every instance of a structure.

        Parameters:
            m          (ProbabilityStructure)  Structure.
            principle  (Principle)             Principle to check.
            op         (BeliefOperator)        Belief operator.
            limit      (int)                   Optional cap on partitions enumerated per body of evidence
                                               (partition principles only). Defaults to config.max_partitions().

        Returns:
            Verdict with every violation as a witness, in canonical order.
    """
    principle = Principle(principle)
    op = BeliefOperator(op)
    believed = {e: beliefs(m, e, op) for e in m.evidence}

    if principle.is_partitional:
        witnesses, instances, bounded = _check_partitions(m, principle, believed, config.max_partitions(limit))
    else:
        witnesses, instances, bounded = _check_pairs(m, principle, believed)

    log.debug(
        "%s/%s: %d instances, %d witnesses%s",
        principle.value,
        op.value,
        instances,
        len(witnesses),
        " (bounded)" if bounded else "",
    )

    outcome = Outcome.FAILS if witnesses else Outcome.HOLDS

    return Verdict(principle, op, outcome, tuple(witnesses), instances, bounded)


def check_all(m, op=BeliefOperator.HPD, limit=None):
    """
    Checks all seven principles, in the order <>-, <>R, []+, []-, []R, Pi-, PiR.

        Returns:
            list of Verdict.
    """
    return [check_principle(m, principle, op, limit) for principle in Principle]


def replay(m, principle, op, witness):
    """
    Re-evaluates a principle's defining condition on the data of a witness.

        Parameters:
            m          (ProbabilityStructure)  Structure the witness was found on.
            principle  (Principle)             Principle.
            op         (BeliefOperator)        Belief operator.
            witness    (Witness)               Witness to replay.

        Returns:
            True if the witness is a violation of the principle.
    """
    principle = Principle(principle)
    before = beliefs(m, witness.evidence, op).states

    if principle.is_partitional:
        partition = witness.partition or ()
        if frozenset().union(*partition) != witness.evidence:
            return False

        if any(a & b for a, b in itertools.combinations(partition, 2)):
            return False

        after = [beliefs(m, p, op).states for p in partition]

        return not any(_pi_ok(principle, before, b) for b in after)

    precondition, conclusion = _PAIRWISE[principle]
    after = beliefs(m, witness.discovery, op).states

    return _applies(precondition, before, witness.discovery) and not _concludes(conclusion, before, after)


def entailments(verdicts):
    """
    Returns the (stronger, weaker) principle pairs for which the stronger principle holds and the weaker
    one fails. The pairs checked are <>- => []-, <>R => []R, []- => []R, []+ => []R and Pi- => PiR, which
    hold on every structure whose belief sets are nonempty.

        Parameters:
            verdicts  (list)  Verdicts for one structure and operator.

        Returns:
            list of (Principle, Principle) tuples.
    """
    outcome = {v.principle: v.holds for v in verdicts}

    return [(a, b) for a, b in _ENTAILMENTS if a in outcome and b in outcome and outcome[a] and not outcome[b]]


def _check_pairs(m, principle, believed):
    precondition, conclusion = _PAIRWISE[principle]
    witnesses = []
    pairs = enumerate_discoveries(m)

    for e, f in pairs:
        before = believed[e]
        after = believed[f]
        if _applies(precondition, before.states, f) and not _concludes(conclusion, before.states, after.states):
            detail = _describe(m, conclusion, before, after)
            witnesses.append(Witness(e, f, None, before, (after,), detail))

    return witnesses, len(pairs), False


def _check_partitions(m, principle, believed, limit):
    witnesses = []
    instances = 0
    bounded = False

    for e in m.evidence:
        partitions = list(itertools.islice(exact_covers(e, m.evidence), limit + 1))
        if len(partitions) > limit:
            bounded = True
            partitions = partitions[:limit]
            log.warning("%s: partition enumeration capped at %d for %s", principle.value, limit, core.show(m, e))

        before = believed[e]
        for partition in partitions:
            instances += 1
            after = tuple(believed[p] for p in partition)
            if not any(_pi_ok(principle, before.states, b.states) for b in after):
                detail = _describe_partition(m, principle, before, after)
                witnesses.append(Witness(e, partition[0], partition, before, after, detail))

    return witnesses, instances, bounded


def _applies(precondition, before, discovery):
    if precondition == "diamond":
        return bool(before & discovery)

    return before <= discovery


def _concludes(conclusion, before, after):
    if conclusion == "minus":
        return after <= before

    if conclusion == "plus":
        return before <= after

    return bool(before & after)


def _pi_ok(principle, before, after):
    if principle is Principle.PI_MINUS:
        return after <= before

    return bool(before & after)


def _describe(m, conclusion, before, after):
    b = _show(m, before)
    a = _show(m, after)

    if conclusion == "minus":
        return f"B(E') = {a} is not a subset of B(E) = {b}"

    if conclusion == "plus":
        return f"B(E) = {b} is not a subset of B(E') = {a}"

    return f"B(E) = {b} and B(E') = {a} are disjoint"


def _describe_partition(m, principle, before, after):
    b = _show(m, before)
    members = ", ".join(_show(m, x) for x in after)

    if principle is Principle.PI_MINUS:
        return f"no B(p) in [{members}] is a subset of B(E) = {b}"

    return f"every B(p) in [{members}] is disjoint from B(E) = {b}"


def _show(m, belief):
    return core.show(m, belief.states)
