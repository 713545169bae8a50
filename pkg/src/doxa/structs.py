"""
Shared dataclass definitions.
"""

import math

from enum import Enum

from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction
from typing import NewType
from typing import Optional
from typing import Union
from types import MappingProxyType
from collections.abc import Mapping

Proposition = NewType("Proposition", frozenset)


class BeliefOperator(Enum):
    """
    Constants for the two belief operators.
    """

    HPD = "hpd"
    LK = "lk"


class Outcome(Enum):
    """
    Result of a principle or constraint check.
    """

    HOLDS = "holds"
    FAILS = "fails"


class Principle(Enum):
    """
    The seven belief-revision principles. The enum value is the command-line name.
    """

    DIAMOND_MINUS = "diamond-minus"
    DIAMOND_R = "diamond-r"
    BOX_PLUS = "box-plus"
    BOX_MINUS = "box-minus"
    BOX_R = "box-r"
    PI_MINUS = "pi-minus"
    PI_R = "pi-r"

    @property
    def klm_alias(self) -> Optional[str]:
        """
        Returns the KLM name of the principle read as a nonmonotonic consequence rule (or None).
        """
        return _KLM_ALIASES.get(self)

    @property
    def symbol(self) -> str:
        """
        Returns the short symbolic name used in text reports, e.g. '<>-' or 'Pi R'.
        """
        return _SYMBOLS[self]

    @property
    def is_partitional(self) -> bool:
        """
        True for the principles that quantify over partitions of an evidence set.
        """
        return self in (Principle.PI_MINUS, Principle.PI_R)

    @classmethod
    def parse(cls, name):
        """
        Looks up a principle by command-line name or KLM alias ('rational-monotony', 'cut',
        'cautious-monotony'). Case and '_' vs '-' are ignored.

            Parameters:
               name  (string)  Principle name.

            Returns:
               Principle.

            Raises:
               ValueError  If the name is not a principle name or alias.
        """
        key = f"{name}".strip().lower().replace("_", "-").replace(" ", "-")

        for principle in cls:
            if key == principle.value:
                return principle

            if (alias := principle.klm_alias) is not None and key == alias.replace(" ", "-"):
                return principle

        raise ValueError(f"unknown principle '{name}'")


_KLM_ALIASES = MappingProxyType(
    {
        Principle.DIAMOND_MINUS: "rational monotony",
        Principle.BOX_PLUS: "cut",
        Principle.BOX_MINUS: "cautious monotony",
    }
)

_SYMBOLS = MappingProxyType(
    {
        Principle.DIAMOND_MINUS: "<>-",
        Principle.DIAMOND_R: "<>R",
        Principle.BOX_PLUS: "[]+",
        Principle.BOX_MINUS: "[]-",
        Principle.BOX_R: "[]R",
        Principle.PI_MINUS: "Pi-",
        Principle.PI_R: "PiR",
    }
)


class Constraint(Enum):
    """
    Structural constraints on probability structures.
    """

    ORTHOGONALITY = "orthogonality"
    STABILITY = "stability"
    THRESHOLD = "threshold"


class ConstraintFilter(Enum):
    """
    Constraint filters accepted by the countermodel search.
    """

    ORTHOGONALITY = "orthogonality"
    STABILITY = "stability"
    BOTH = "both"

    @property
    def constraints(self) -> tuple:
        """
        Returns the constraints a structure has to satisfy to pass the filter.
        """
        if self is ConstraintFilter.BOTH:
            return (Constraint.ORTHOGONALITY, Constraint.STABILITY)

        return (Constraint(self.value),)


class Mode(Enum):
    """
    Random structure generator modes.
    """

    FREE = "free"
    COARSE = "coarse"
    PRODUCT = "product"


class CorpusId(Enum):
    """
    Named structures from the worked examples. The enum value is the command-line example name.
    """

    FLIPPING_FOR_HEADS = "flipping"
    FLIPPING_WITH_WALKAWAY = "flipping-walkaway"
    DRAWING_CARD = "drawing-card"
    DRAWING_CARD_Q_PRIME = "drawing-card-q-prime"
    DRAWING_CARD_Q_DOUBLE_PRIME = "drawing-card-q-double-prime"
    DRAWING_CARD_V2 = "drawing-card-v2"
    HUNDRED_FLIPS = "hundred-flips"
    PI_MINUS_COUNTER = "pi-minus-counter"
    STABILITY_BOX_PLUS = "stability-box-plus"
    STABILITY_DIAMOND_MINUS = "stability-diamond-minus"


class CardQuestion(Enum):
    """
    Question variants for the Drawing a Card structure.
    """

    Q = "q"
    Q_PRIME = "q-prime"
    Q_DOUBLE_PRIME = "q-double-prime"


class FlipsQuestion(Enum):
    """
    Question variants for the One Hundred Flips structure.
    """

    POLAR = "polar"
    COUNT = "count"
    SEQUENCE = "sequence"


class ParseErrorKind(Enum):
    """
    Categories of structure-definition parse errors.
    """

    SYNTAX = "syntax"
    UNKNOWN_STATE = "unknown-state"
    DUPLICATE_STATE = "duplicate-state"
    BAD_RATIONAL = "bad-rational"
    MISSING_SECTION = "missing-section"
    SEMANTIC_INVALID = "semantic-invalid"


class Format(Enum):
    """
    CLI output formats.
    """

    TEXT = "text"
    JSON = "json"


@dataclass(frozen=True)
class Question:
    """
    Container class for a question, i.e. a partition of the state indices.

       Fields:
          cells    (tuple)  Cells (answers) as frozensets of state indices, ordered by least member.
          cell_of  (tuple)  Maps a state index to the index of the cell containing it.
    """

    cells: tuple
    cell_of: tuple = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        cell_of = {}
        for i, cell in enumerate(self.cells):
            for s in cell:
                cell_of[s] = i

        object.__setattr__(self, "cell_of", tuple(cell_of[s] for s in sorted(cell_of)))

    def __len__(self):
        return len(self.cells)


@dataclass(frozen=True)
class ProbabilityStructure:  # pylint: disable=too-many-instance-attributes
    """
    Container class for a validated probability structure. Construct with core.validate_structure or
    core.structure, which check the invariants and put the fields in canonical order.

       Fields:
          states     (tuple)     State names, indexed 0..|S|-1.
          prior      (tuple)     Normalized prior probability of each state.
          question   (Question)  Partition of the states.
          evidence   (tuple)     Possible bodies of evidence, largest first.
          threshold  (Fraction)  Belief threshold t in [0,1].
          masses     (tuple)     Prior scaled to integers by the least common denominator.
          index      (Mapping)   Maps a state name to its index.
          full       (frozenset) The full state set S.
    """

    states: tuple
    prior: tuple
    question: Question
    evidence: tuple
    threshold: Fraction
    masses: tuple = field(init=False, compare=False, repr=False)
    index: Mapping = field(init=False, compare=False, repr=False)
    full: frozenset = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        scale = math.lcm(*(p.denominator for p in self.prior))

        object.__setattr__(self, "masses", tuple(p.numerator * (scale // p.denominator) for p in self.prior))
        object.__setattr__(self, "index", MappingProxyType({name: i for i, name in enumerate(self.states)}))
        object.__setattr__(self, "full", frozenset(range(len(self.states))))

    def __reduce__(self):
        # derived fields are rebuilt on unpickling (mappingproxy cannot be pickled)
        return (ProbabilityStructure, (self.states, self.prior, self.question, self.evidence, self.threshold))


@dataclass(frozen=True)
class BeliefSet:
    """
    Container class for the belief set of an operator at a body of evidence.

       Fields:
          evidence  (frozenset)       Evidence E.
          operator  (BeliefOperator)  Operator that produced the set.
          states    (frozenset)       Believed states B(E), a subset of E.
          mass      (Fraction)        Pr(B(E)|E).
    """

    evidence: Proposition
    operator: BeliefOperator
    states: Proposition
    mass: Fraction

    @property
    def is_empty(self) -> bool:
        """
        True if no state survives.
        """
        return not self.states

    def names(self, m) -> list:
        """
        Returns the names of the believed states in index order.
        """
        return [m.states[s] for s in sorted(self.states)]


@dataclass(frozen=True)
class Witness:
    """
    Container class for a principle violation.

       Fields:
          evidence   (frozenset)  Evidence E before the discovery.
          discovery  (frozenset)  E' = E & p, or for the partition principles the first member of the partition.
          partition  (tuple)      Partition of E (partition principles only, otherwise None).
          before     (BeliefSet)  B(E).
          after      (tuple)      B(E') or, for the partition principles, B(p) for every member p.
          detail     (string)     Human readable description of the violation.
    """

    evidence: Proposition
    discovery: Proposition
    partition: Optional[tuple]
    before: BeliefSet
    after: tuple
    detail: str


@dataclass(frozen=True)
class Verdict:
    """
    Container class for the result of checking a principle on a structure.

       Fields:
          principle  (Principle)       Principle checked.
          operator   (BeliefOperator)  Belief operator.
          outcome    (Outcome)         HOLDS or FAILS.
          witnesses  (tuple)           Violations in canonical order (empty if the principle holds).
          instances  (int)             Number of (E,E') pairs or (E,partition) instances checked.
          bounded    (bool)            True if partition enumeration hit the configured cap.
    """

    principle: Principle
    operator: BeliefOperator
    outcome: Outcome
    witnesses: tuple
    instances: int
    bounded: bool = False

    @property
    def holds(self) -> bool:
        """
        True if no witness was found.
        """
        return self.outcome is Outcome.HOLDS


@dataclass(frozen=True)
class OrthogonalityDetail:
    """
    Orthogonality violation details.

       Fields:
          cells              (tuple)     (q, q') cell indices.
          states             (tuple)     (s, s') representative states of q & E and q' & E.
          prior_ratio        (Fraction)  Pr(q)/Pr(q').
          conditional_ratio  (Fraction)  Pr(q|E)/Pr(q'|E).
    """

    cells: tuple
    states: tuple
    prior_ratio: Fraction
    conditional_ratio: Fraction


@dataclass(frozen=True)
class StabilityDetail:
    """
    Stability violation details.

       Fields:
          cells        (tuple)     Cell indices of X.
          prior        (Fraction)  Pr(UX).
          conditional  (Fraction)  Pr(UX|E).
    """

    cells: tuple
    prior: Fraction
    conditional: Fraction


@dataclass(frozen=True)
class ThresholdDetail:
    """
    Threshold violation details.

       Fields:
          operator  (BeliefOperator)  Belief operator.
          believed  (frozenset)       B(E).
          mass      (Fraction)        Pr(B(E)|E).
    """

    operator: BeliefOperator
    believed: Proposition
    mass: Fraction


@dataclass(frozen=True)
class Violation:
    """
    A single constraint violation at a body of evidence.
    """

    evidence: Proposition
    detail: Union[OrthogonalityDetail, StabilityDetail, ThresholdDetail]


@dataclass(frozen=True)
class ConstraintReport:
    """
    Container class for the result of checking a structural constraint.

       Fields:
          constraint  (Constraint)  Constraint checked.
          outcome     (Outcome)     HOLDS or FAILS.
          violations  (tuple)       Violations in canonical order.
          checked     (int)         Number of instances checked.
    """

    constraint: Constraint
    outcome: Outcome
    violations: tuple
    checked: int

    @property
    def holds(self) -> bool:
        """
        True if there are no violations.
        """
        return self.outcome is Outcome.HOLDS


@dataclass(frozen=True)
class GeneratorConfig:  # pylint: disable=too-many-instance-attributes
    """
    Random structure generator configuration. Ranges are inclusive (min, max) tuples.

       Fields:
          states                 (tuple)      State count range.
          evidence               (tuple)      Evidence family size range (including S if include_full_evidence).
          cells                  (tuple)      Question cell count range.
          weight_bound           (int)        Weights are integers in [0, weight_bound].
          threshold_range        (tuple)      (lo, hi) Fraction interval, inside [0,1].
          threshold_denominator  (int)        Thresholds are drawn from fractions with denominators up to this.
          mode                   (Mode)       FREE, COARSE or PRODUCT.
          include_full_evidence  (bool)       Always include S in the evidence family.
          split_bias             (float)      FREE mode: chance that a new evidence set is split from an existing one.
          seed                   (int)        64-bit seed.
    """

    states: tuple = (2, 6)
    evidence: tuple = (1, 5)
    cells: tuple = (1, 6)
    weight_bound: int = 10
    threshold_range: tuple = (Fraction(1, 100), Fraction(1))
    threshold_denominator: int = 100
    mode: Mode = Mode.FREE
    include_full_evidence: bool = True
    split_bias: float = 0.5
    seed: int = 0


@dataclass(frozen=True)
class Countermodel:
    """
    A structure together with a witness of a principle violation.
    """

    structure: ProbabilityStructure
    witness: Witness


@dataclass(frozen=True)
class SearchResult:
    """
    Container class for a countermodel search result.

       Fields:
          found     (Countermodel)  Countermodel with the lowest trial index (or None).
          tried     (int)           Number of structures generated.
          accepted  (int)           Number of generated structures that passed the constraint filter.
          elapsed   (float)         Wall clock time (seconds).
    """

    found: Optional[Countermodel]
    tried: int
    accepted: int
    elapsed: float


@dataclass(frozen=True)
class SourceSpan:
    """
    Location in a structure-definition file.

       Fields:
          line    (int)  1-based line number.
          column  (int)  1-based column.
          length  (int)  Length of the offending text.
    """

    line: int
    column: int
    length: int = 1

    def __str__(self):
        return f"{self.line}:{self.column}"


@dataclass(frozen=True)
class Report:
    """
    Container class for a rendered CLI result.

       Fields:
          format     (Format)  TEXT or JSON.
          payload    (string)  Rendered output.
          exit_code  (int)     0: holds/succeeded, 1: fails (witness emitted), 2: usage or input error.
    """

    format: Format
    payload: str
    exit_code: int
