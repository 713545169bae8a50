"""
Expected values for the doxa integration tests.
"""

# pylint: disable=invalid-name

from fractions import Fraction

from doxa.structs import BeliefOperator
from doxa.structs import CorpusId
from doxa.structs import Principle

HPD = BeliefOperator.HPD
LK = BeliefOperator.LK

# fixture file -> named structure
FIXTURES = {
    "flipping.bps": CorpusId.FLIPPING_FOR_HEADS,
    "flipping-walkaway.bps": CorpusId.FLIPPING_WITH_WALKAWAY,
    "drawing-card.bps": CorpusId.DRAWING_CARD,
    "drawing-card-q-prime.bps": CorpusId.DRAWING_CARD_Q_PRIME,
    "drawing-card-q-double-prime.bps": CorpusId.DRAWING_CARD_Q_DOUBLE_PRIME,
    "drawing-card-v2.bps": CorpusId.DRAWING_CARD_V2,
    "hundred-flips.bps": CorpusId.HUNDRED_FLIPS,
    "pi-minus-counter.bps": CorpusId.PI_MINUS_COUNTER,
    "stability-box-plus.bps": CorpusId.STABILITY_BOX_PLUS,
    "stability-diamond-minus.bps": CorpusId.STABILITY_DIAMOND_MINUS,
}

FlippingBeliefs = {i: {f"s{j}" for j in range(i, i + 7)} for i in range(1, 22)}

WalkawayBefore = {f"s{i}" for i in range(1, 8)}
WalkawayAfter = {f"s{i}" for i in range(1, 7)}

DrawingCard = {
    "B(S)": {f"F{i}" for i in range(1, 53)},
    "B(S) Q'": {f"F{i}" for i in range(1, 52)},
    "B({F52,T})": {"T"},
    "Pr(T|{F52,T})": Fraction(52, 61),
}

PiMinusCounter = {
    "B(S)": {"s1", "s2", "s3", "s4"},
    "partition": ({"s1", "s3", "s5"}, {"s2", "s4", "s6"}),
}

StabilityBoxPlus = {
    "B(S)": {"a", "b"},
    "B({a,b})": {"a"},
}

StabilityDiamondMinus = {
    "E": {"A_in", "B_in", "C_in"},
}

DrawingCardV2 = {
    "B(S)": {f"fair_{j}" for j in range(1, 53)},
    "failures": (Principle.PI_R, Principle.PI_MINUS, Principle.DIAMOND_R),
}

LKThreshold = {
    "t": Fraction(1, 5),
    "B(S)": {"T"},
    "mass": Fraction(1, 10),
}

# (principle, operator) pairs for which the unconstrained search finds a countermodel
Searches = [
    (Principle.DIAMOND_MINUS, HPD),
    (Principle.DIAMOND_R, HPD),
    (Principle.BOX_PLUS, HPD),
    (Principle.DIAMOND_R, LK),
    (Principle.PI_MINUS, LK),
]

SEARCH_BUDGET = 100_000
SEARCH_MAX_STATES = 6
SEARCH_SEED = 1
