"""
Named probability structures from the worked examples.

  - flipping:          a fair coin is flipped until it lands heads; the evidence is how many flips failed
  - drawing-card:      a fair deck or a trick deck made of aces of spades; one card is drawn
  - drawing-card-v2:   a fair deck or one of 52 trick decks, each made of a single repeated card
  - hundred-flips:     100 flips of a fair coin; the evidence is the first flip
  - pi-minus-counter:  six equiprobable states on which Pi- fails
  - stability-*:       structures satisfying STABILITY on which []+ and <>- fail
"""

import itertools
import math

from fractions import Fraction

from . import core

from .structs import CardQuestion
from .structs import CorpusId
from .structs import FlipsQuestion
from .errors import InfeasibleConfig


def make_flipping(n=30, t=Fraction(99, 100), walkaway=False, bias=Fraction(1, 2)):
    """
    Flipping for Heads, truncated to n states. State s_i is 'the coin first lands heads on flip i' and s_n
    lumps together every flip from n on. The bodies of evidence are the suffixes {s_i,...,s_n} (the coin
    has landed tails i-1 times) and, with walkaway, {s1,...,s7} (told later that heads came within seven flips).

        Parameters:
            n         (int)       Number of states (at least 16).
            t         (Fraction)  Threshold.
            walkaway  (bool)      Adds the {s1,...,s7} body of evidence.
            bias      (Fraction)  Chance of heads on each flip.

        Returns:
            ProbabilityStructure.

        Raises:
            InfeasibleConfig  If n < 16 or the bias is not in (0,1).
    """
    bias = core.rational(bias)
    if n < 16:
        raise InfeasibleConfig(f"flipping needs at least 16 states ({n})")

    if not 0 < bias < 1:
        raise InfeasibleConfig(f"invalid bias ({bias})")

    states = [f"s{i}" for i in range(1, n + 1)]
    prior = [(1 - bias) ** (i - 1) * bias for i in range(1, n)] + [(1 - bias) ** (n - 1)]
    question = [[s] for s in states]
    evidence = [states[i:] for i in range(n)]

    if walkaway:
        evidence.append(states[:7])

    return core.structure(states, prior, question, evidence, t)


def make_drawing_card(question=CardQuestion.Q, cards=52, t=Fraction(17, 20)):
    """
    Drawing a Card. The deck is fair (probability 9/10) or a trick deck of aces of spades (probability
    1/10). The card drawn is either one of F1..F51, which rules out the trick deck, or the ace of spades,
    which does not.

        Parameters:
            question  (CardQuestion)  Q: which deck?  Q': which deck and is the card an ace of spades?  Q'': singletons.
            cards     (int)           Number of cards in the fair deck.
            t         (Fraction)      Threshold.

        Returns:
            ProbabilityStructure.

        Raises:
            InfeasibleConfig  If there are fewer than 2 cards.
    """
    if cards < 2:
        raise InfeasibleConfig(f"drawing a card needs at least 2 cards ({cards})")

    fair = [f"F{i}" for i in range(1, cards + 1)]
    states = fair + ["T"]
    prior = {f: Fraction(9, 10 * cards) for f in fair} | {"T": Fraction(1, 10)}
    evidence = [states] + [[f] for f in fair[:-1]] + [[fair[-1], "T"]]

    match CardQuestion(question):
        case CardQuestion.Q_PRIME:
            cells = [fair[:-1], [fair[-1]], ["T"]]
        case CardQuestion.Q_DOUBLE_PRIME:
            cells = [[s] for s in states]
        case _:
            cells = [fair, ["T"]]

    return core.structure(states, prior, cells, evidence, t)


def make_drawing_card_v2(t=Fraction(3, 10), cards=52):
    """
    Drawing a Card v.2. The deck is fair (probability 1/5) or one of the trick decks trick_1..trick_52, each
    made of 52 copies of card j. Drawing card j leaves (fair_j, trick_j). The question is which deck.

        Parameters:
            t      (Fraction)  Threshold.
            cards  (int)       Number of distinct cards.

        Returns:
            ProbabilityStructure.

        Raises:
            InfeasibleConfig  If there are fewer than 2 cards.
    """
    if cards < 2:
        raise InfeasibleConfig(f"drawing a card needs at least 2 cards ({cards})")

    fair = [f"fair_{j}" for j in range(1, cards + 1)]
    trick = [f"trick_{j}" for j in range(1, cards + 1)]
    states = fair + trick
    prior = [Fraction(1, 5 * cards)] * cards + [Fraction(4, 5 * cards)] * cards
    question = [fair] + [[x] for x in trick]
    evidence = [states] + [[f, x] for f, x in zip(fair, trick)]

    return core.structure(states, prior, question, evidence, t)


def make_hundred_flips(n=100, question=FlipsQuestion.COUNT, t=Fraction(999, 1000)):
    """
    One Hundred Flips. For the count and polar questions the states are (first flip, number of heads)
    pairs named H_k and T_k; for the sequence question the states are the 2^n flip sequences. The bodies of
    evidence are S, 'the first flip landed heads' and 'the first flip landed tails'.

        Parameters:
            n         (int)            Number of flips (at most 100, or 12 for the sequence question).
            question  (FlipsQuestion)  COUNT: how many heads?  POLAR: more than 90% heads?  SEQUENCE: which sequence?
            t         (Fraction)       Threshold.

        Returns:
            ProbabilityStructure.

        Raises:
            InfeasibleConfig  If n is out of range for the question.
    """
    question = FlipsQuestion(question)

    if question is FlipsQuestion.SEQUENCE:
        if not 1 <= n <= 12:
            raise InfeasibleConfig(f"sequence question supports 1 to 12 flips ({n})")

        states = ["".join(flips) for flips in itertools.product("HT", repeat=n)]
        heads = [s for s in states if s[0] == "H"]
        tails = [s for s in states if s[0] == "T"]

        return core.structure(states, "uniform", [[s] for s in states], [states, heads, tails], t)

    if not 1 <= n <= 100:
        raise InfeasibleConfig(f"count and polar questions support 1 to 100 flips ({n})")

    states = []
    prior = {}
    heads = {}
    for k in range(n + 1):
        if k >= 1:
            states.append(f"H_{k}")
            prior[f"H_{k}"] = Fraction(math.comb(n - 1, k - 1), 2**n)
            heads[f"H_{k}"] = k
        if k <= n - 1:
            states.append(f"T_{k}")
            prior[f"T_{k}"] = Fraction(math.comb(n - 1, k), 2**n)
            heads[f"T_{k}"] = k

    if question is FlipsQuestion.POLAR:
        bound = math.ceil(Fraction(9, 10) * n)
        cells = [[s for s in states if heads[s] <= bound], [s for s in states if heads[s] > bound]]
        cells = [c for c in cells if c]
    else:
        cells = [[s for s in states if heads[s] == k] for k in range(n + 1)]

    evidence = [states, [s for s in states if s[0] == "H"], [s for s in states if s[0] == "T"]]

    return core.structure(states, prior, cells, evidence, t)


def make_appendix(corpus):
    """
    Returns one of the small appendix structures.

        Parameters:
            corpus  (CorpusId)  PI_MINUS_COUNTER, STABILITY_BOX_PLUS or STABILITY_DIAMOND_MINUS.

        Returns:
            ProbabilityStructure.

        Raises:
            ValueError  For any other corpus id.
    """
    match CorpusId(corpus):
        case CorpusId.PI_MINUS_COUNTER:
            states = [f"s{i}" for i in range(1, 7)]
            question = [["s1", "s2"], ["s3", "s4"], ["s5"], ["s6"]]
            evidence = [states, ["s1", "s3", "s5"], ["s2", "s4", "s6"]]

            return core.structure(states, "uniform", question, evidence, Fraction(13, 20))

        case CorpusId.STABILITY_BOX_PLUS:
            prior = {"a": Fraction(9, 10), "b": Fraction(9, 100), "c": Fraction(1, 100)}

            return core.structure(["a", "b", "c"], prior, [["a"], ["b"], ["c"]], [["a", "b", "c"], ["a", "b"]], Fraction(9001, 10000))

        case CorpusId.STABILITY_DIAMOND_MINUS:
            # answers A, B, C split into the states inside and outside E; epsilon = 1/20
            prior = {
                "A_in": Fraction(1, 6),
                "A_out": Fraction(1, 3),
                "B_in": Fraction(1, 6),
                "B_out": Fraction(2, 15),
                "C_in": Fraction(1, 6),
                "C_out": Fraction(1, 30),
            }
            states = list(prior)
            question = [["A_in", "A_out"], ["B_in", "B_out"], ["C_in", "C_out"]]
            evidence = [states, ["A_in", "B_in", "C_in"]]

            return core.structure(states, prior, question, evidence, Fraction(11, 20))

    raise ValueError(f"{corpus} is not an appendix structure")


def make(corpus, n=None, t=None, question=None):
    """
    Builds a named structure with optional parameter overrides.

        Parameters:
            corpus    (CorpusId)  Structure name.
            n         (int)       Flipping: number of states. Hundred flips: number of flips. Drawing a card: number of cards.
            t         (Fraction)  Threshold.
            question  (string)    Question variant (drawing-card: q, q-prime, q-double-prime; hundred-flips: count,
                                  polar, sequence).

        Returns:
            ProbabilityStructure.

        Raises:
            InfeasibleConfig  If a parameter is out of range.
            ValueError        If the question variant is invalid.
    """
    corpus = CorpusId(corpus)
    kwargs = {}
    if t is not None:
        kwargs["t"] = core.rational(t)

    match corpus:
        case CorpusId.FLIPPING_FOR_HEADS | CorpusId.FLIPPING_WITH_WALKAWAY:
            if n is not None:
                kwargs["n"] = n
            return make_flipping(walkaway=corpus is CorpusId.FLIPPING_WITH_WALKAWAY, **kwargs)

        case CorpusId.DRAWING_CARD | CorpusId.DRAWING_CARD_Q_PRIME | CorpusId.DRAWING_CARD_Q_DOUBLE_PRIME:
            if n is not None:
                kwargs["cards"] = n
            variant = _CARD_QUESTIONS[corpus] if question is None else CardQuestion(question)
            return make_drawing_card(question=variant, **kwargs)

        case CorpusId.DRAWING_CARD_V2:
            if n is not None:
                kwargs["cards"] = n
            return make_drawing_card_v2(**kwargs)

        case CorpusId.HUNDRED_FLIPS:
            if n is not None:
                kwargs["n"] = n
            variant = FlipsQuestion.COUNT if question is None else FlipsQuestion(question)
            return make_hundred_flips(question=variant, **kwargs)

    structure = make_appendix(corpus)
    if t is not None:
        structure = core.structure(
            structure.states,
            structure.prior,
            structure.question.cells,
            structure.evidence,
            kwargs["t"],
        )

    return structure


_CARD_QUESTIONS = {
    CorpusId.DRAWING_CARD: CardQuestion.Q,
    CorpusId.DRAWING_CARD_Q_PRIME: CardQuestion.Q_PRIME,
    CorpusId.DRAWING_CARD_Q_DOUBLE_PRIME: CardQuestion.Q_DOUBLE_PRIME,
}
