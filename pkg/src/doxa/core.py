"""
Probability structures.

Validates structure data and implements exact conditioning and the question/answer accessors used by every
other module. Propositions are frozensets of state indices.
"""

import logging

from collections import namedtuple
from collections.abc import Iterable
from collections.abc import Mapping
from dataclasses import replace
from fractions import Fraction

from .structs import ProbabilityStructure
from .structs import Question

from .errors import EmptyStateSet
from .errors import DuplicateState
from .errors import UnknownState
from .errors import MissingWeight
from .errors import NegativeWeight
from .errors import ZeroTotalWeight
from .errors import NotAPartition
from .errors import EmptyEvidenceSet
from .errors import ZeroProbabilityEvidence
from .errors import DuplicateEvidence
from .errors import ThresholdOutOfRange
from .errors import InvalidValue
from .errors import ConditionOnNull

log = logging.getLogger(__name__)

Discovery = namedtuple("Discovery", "proposition admissible")


def rational(v):
    """
    Converts a value to an exact rational. Strings may be integers, fractions ('52/61') or decimal literals
    ('.99'). Floats are converted from their shortest decimal representation, so 0.99 becomes 99/100.

        Parameters:
            v  (int|Fraction|string|float)  Value to convert.

        Returns:
            Fraction.

        Raises:
            ValueError         If a string is not a valid rational literal.
            ZeroDivisionError  If a fraction has a zero denominator.
            TypeError          For any other type.
    """
    if isinstance(v, bool):
        raise TypeError(f"invalid rational ({v})")

    if isinstance(v, (int, Fraction)):
        return Fraction(v)

    if isinstance(v, float):
        return Fraction(repr(v))

    if isinstance(v, str):
        return Fraction(v.strip())

    raise TypeError(f"invalid rational ({v!r})")


def validate_structure(raw):
    """
    Validates candidate structure data and returns the equivalent canonical probability structure. Priors
    are normalized to probabilities, cells are ordered by least member and evidence sets by descending size
    and then by member indices.

        Parameters:
            raw  (Mapping)  Candidate structure with the keys:
                            - 'states'    list of state names
                            - 'prior'     mapping name -> weight, list of weights in state order, or 'uniform'
                            - 'question'  list of cells, each a list of state names or indices
                            - 'evidence'  list of evidence sets, each a list of state names or indices
                            - 'threshold' threshold t

        Returns:
            ProbabilityStructure.

        Raises:
            StructureError  The first violated invariant, checked in the order states, prior, question,
                            evidence and threshold.
    """
    states = tuple(f"{s}" for s in raw.get("states", ()))
    if not states:
        raise EmptyStateSet("structure has no states")

    index = {}
    for i, name in enumerate(states):
        if name in index:
            raise DuplicateState(f"duplicate state '{name}'")
        index[name] = i

    weights = _weights(raw.get("prior"), states, index)
    total = sum(weights)
    prior = tuple(w / total for w in weights)

    cells = _partition(raw.get("question") or (), states, index)
    evidence = _evidence(raw.get("evidence") or (), states, index, prior)

    threshold = _value(raw.get("threshold"), "threshold")
    if not 0 <= threshold <= 1:
        raise ThresholdOutOfRange(f"threshold {threshold} not in [0,1]")

    m = ProbabilityStructure(states, prior, Question(cells), evidence, threshold)

    log.debug("validated %s", describe(m))

    return m


def structure(states, prior, question, evidence, threshold):
    """
    Builds a validated probability structure from its components.

        Parameters:
            states    (list)                 State names.
            prior     (Mapping|list|string)  Weights by name, weights in state order or 'uniform'.
            question  (list)                 Cells as lists of names or indices.
            evidence  (list)                 Evidence sets as lists of names or indices.
            threshold (Fraction|int|string)  Threshold t.

        Returns:
            ProbabilityStructure.

        Raises:
            StructureError  If the data violates a structure invariant.
    """
    return validate_structure(
        {
            "states": states,
            "prior": prior,
            "question": question,
            "evidence": evidence,
            "threshold": threshold,
        }
    )


def conditional_probability(m, p, e):
    """
    Returns Pr(p|E) exactly.

        Parameters:
            m  (ProbabilityStructure)  Structure.
            p  (frozenset)             Proposition.
            e  (frozenset)             Conditioning proposition.

        Returns:
            Fraction.

        Raises:
            ConditionOnNull  If Pr(E) = 0.
    """
    denominator = mass(m, e)
    if denominator == 0:
        raise ConditionOnNull(f"cannot condition on {show(m, e)} (zero probability)")

    return Fraction(mass(m, p & e), denominator)


def weight(m, p):
    """
    Returns the prior probability Pr(p).
    """
    return Fraction(mass(m, p), sum(m.masses))


def mass(m, p):
    """
    Returns the integer mass of a proposition, i.e. its prior probability scaled by the structure's least
    common denominator.
    """
    masses = m.masses
    return sum(masses[s] for s in p)


def cell_weights(m, e):
    """
    Returns the integer mass of q & E for every cell q, in cell order.
    """
    weights = [0] * len(m.question.cells)
    cell_of = m.question.cell_of
    masses = m.masses
    for s in e:
        weights[cell_of[s]] += masses[s]

    return weights


def cell_masses(m, e):
    """
    Returns Pr(q|E) for every cell q, in cell order.

        Raises:
            ConditionOnNull  If Pr(E) = 0.
    """
    weights = cell_weights(m, e)
    total = sum(weights)
    if total == 0:
        raise ConditionOnNull(f"cannot condition on {show(m, e)} (zero probability)")

    return [Fraction(w, total) for w in weights]


def answer_of(m, s):
    """
    Returns the question cell [s]_Q containing a state.

        Parameters:
            m  (ProbabilityStructure)  Structure.
            s  (int|string)            State index or name.

        Returns:
            frozenset  Cell containing s.

        Raises:
            UnknownState  If s is not a state of the structure.
    """
    i = state_index(m, s)

    return m.question.cells[m.question.cell_of[i]]


def with_question(m, q):
    """
    Returns a copy of the structure with a different question.

        Parameters:
            m  (ProbabilityStructure)  Structure.
            q  (Question|list)         Question, or a list of cells as lists of state names or indices.

        Returns:
            ProbabilityStructure.

        Raises:
            NotAPartition  If q is not a partition of the structure's states.
            UnknownState   If a cell refers to an unknown state.
    """
    cells = q.cells if isinstance(q, Question) else q
    question = Question(_partition(cells, m.states, m.index))

    if question == m.question:
        return m

    return replace(m, question=question)


def discover(m, e, p):
    """
    Returns the result of discovering p with evidence E, i.e. E & p, together with a flag that is True if
    E & p is itself a body of evidence (and so admissible for revision).

        Parameters:
            m  (ProbabilityStructure)  Structure.
            e  (frozenset)             Evidence E.
            p  (frozenset)             Discovered proposition.

        Returns:
            Discovery  (proposition, admissible) named tuple.
    """
    q = frozenset(e) & frozenset(p)

    return Discovery(q, q in set(m.evidence))


def refine_question(m):
    """
    Returns a copy of the structure whose question is the coarsest common refinement of the question and
    every body of evidence. Every body of evidence is then a union of cells.
    """
    cell_of = m.question.cell_of
    blocks = {}
    for s in range(len(m.states)):
        key = (cell_of[s],) + tuple(s in e for e in m.evidence)
        blocks.setdefault(key, []).append(s)

    return with_question(m, list(blocks.values()))


def state_index(m, s):
    """
    Returns the index of a state given by index or name.

        Raises:
            UnknownState  If s is not a state of the structure.
    """
    if isinstance(s, int) and not isinstance(s, bool):
        if 0 <= s < len(m.states):
            return s
    elif (i := m.index.get(f"{s}")) is not None:
        return i

    raise UnknownState(f"unknown state '{s}'")


def proposition(m, members):
    """
    Returns the proposition with the given members.

        Parameters:
            m        (ProbabilityStructure)  Structure.
            members  (iterable)              State names or indices.

        Returns:
            frozenset of state indices.

        Raises:
            UnknownState  If a member is not a state of the structure.
    """
    return frozenset(state_index(m, s) for s in members)


def names(m, p):
    """
    Returns the names of the states in a proposition, in index order.
    """
    return [m.states[s] for s in sorted(p)]


def describe(m):
    """
    Returns a one-line summary of a structure, e.g. '53 states, 2 cells, 53 evidence sets, t=17/20'.
    """
    return f"{len(m.states)} states, {len(m.question.cells)} cells, {len(m.evidence)} evidence sets, t={m.threshold}"


def canonical_key(p):
    """
    Sort key for propositions: larger first, then lexicographic by member index.
    """
    return (-len(p), sorted(p))


def show(m, p):
    members = names(m, p)
    if len(members) > 8:
        members = members[:8] + ["..."]

    return "{" + " ".join(members) + "}"


def _weights(prior, states, index):
    if isinstance(prior, str):
        if prior.strip() != "uniform":
            raise MissingWeight(f"invalid prior '{prior}'")
        weights = [Fraction(1)] * len(states)

    elif isinstance(prior, Mapping):
        for name in prior:
            if f"{name}" not in index:
                raise UnknownState(f"unknown state '{name}' in prior")

        weights = []
        for name in states:
            if name not in prior:
                raise MissingWeight(f"no prior weight for state '{name}'")
            weights.append(_value(prior[name], f"prior weight for state '{name}'"))

    elif isinstance(prior, Iterable):
        weights = [_value(w, "prior weight") for w in prior]
        if len(weights) != len(states):
            raise MissingWeight(f"expected {len(states)} prior weights, got {len(weights)}")

    elif prior is None:
        raise MissingWeight("structure has no prior")

    else:
        raise InvalidValue(f"invalid prior ({prior!r})")

    for name, w in zip(states, weights):
        if w < 0:
            raise NegativeWeight(f"negative prior weight {w} for state '{name}'")

    if sum(weights) == 0:
        raise ZeroTotalWeight("prior weights sum to zero")

    return weights


def _value(v, what):
    if v is None:
        raise InvalidValue(f"missing {what}")

    try:
        return rational(v)
    except (TypeError, ValueError, ZeroDivisionError) as x:
        raise InvalidValue(f"invalid {what} ({v!r})") from x


def _members(items, states, index, where):
    members = []
    for item in items:
        if isinstance(item, int) and not isinstance(item, bool):
            if not 0 <= item < len(states):
                raise UnknownState(f"unknown state index {item} in {where}")
            members.append(item)
        elif (i := index.get(f"{item}")) is not None:
            members.append(i)
        else:
            raise UnknownState(f"unknown state '{item}' in {where}")

    return members


def _partition(cells, states, index):
    seen = set()
    partition = []
    for cell in cells:
        members = _members(cell, states, index, "question")
        if not members:
            raise NotAPartition("question has an empty cell")

        for s in members:
            if s in seen:
                raise NotAPartition(f"state '{states[s]}' is in more than one cell")
            seen.add(s)

        partition.append(frozenset(members))

    for s, name in enumerate(states):
        if s not in seen:
            raise NotAPartition(f"state '{name}' is not in any cell")

    return tuple(sorted(partition, key=min))


def _evidence(family, states, index, prior):
    evidence = []
    seen = set()
    for items in family:
        e = frozenset(_members(items, states, index, "evidence"))
        if not e:
            raise EmptyEvidenceSet("evidence family contains the empty set")

        if sum(prior[s] for s in e) == 0:
            members = " ".join(states[s] for s in sorted(e))
            raise ZeroProbabilityEvidence(f"evidence set {{{members}}} has zero probability")

        if e in seen:
            members = " ".join(states[s] for s in sorted(e))
            raise DuplicateEvidence(f"duplicate evidence set {{{members}}}")

        seen.add(e)
        evidence.append(e)

    return tuple(sorted(evidence, key=canonical_key))
