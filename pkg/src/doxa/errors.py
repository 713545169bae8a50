"""
Application specific errors.
"""


class StructureError(ValueError):
    """
    Base class for probability structure validation errors.
    """


class EmptyStateSet(StructureError):
    """
    Error raised if a structure has no states.
    """


class DuplicateState(StructureError):
    """
    Error raised if a state name occurs more than once.
    """


class UnknownState(StructureError, KeyError):
    """
    Error raised if a cell, evidence set or query refers to a state that is not in the structure.
    """

    def __str__(self):
        return ValueError.__str__(self)


class MissingWeight(StructureError):
    """
    Error raised if a state has no prior weight.
    """


class NegativeWeight(StructureError):
    """
    Error raised if a state has a negative prior weight.
    """


class ZeroTotalWeight(StructureError):
    """
    Error raised if the prior weights sum to zero.
    """


class NotAPartition(StructureError):
    """
    Error raised if the question cells overlap, are empty or miss a state.
    """


class EmptyEvidenceSet(StructureError):
    """
    Error raised if a body of evidence is the empty set.
    """


class ZeroProbabilityEvidence(StructureError):
    """
    Error raised if a body of evidence has zero prior probability.
    """


class DuplicateEvidence(StructureError):
    """
    Error raised if the same body of evidence is listed more than once.
    """


class ThresholdOutOfRange(StructureError):
    """
    Error raised if the threshold is not in [0,1].
    """


class InvalidValue(StructureError):
    """
    Error raised if a prior weight or the threshold is missing or is not a rational number.
    """


class ProbabilityError(Exception):
    """
    Base class for conditioning and belief query errors.
    """


class ConditionOnNull(ProbabilityError, ZeroDivisionError):
    """
    Error raised when conditioning on a proposition with zero probability.
    """


class NotEvidence(ProbabilityError, KeyError):
    """
    Error raised if a nonmonotonic consequence query has an antecedent that is not a body of evidence.
    """

    def __str__(self):
        return Exception.__str__(self)


class ConstraintError(Exception):
    """
    Base class for structural constraint check errors.
    """


class QuestionTooLarge(ConstraintError):
    """
    Error raised if the question has too many cells to enumerate all unions of cells.
    """


class SearchError(Exception):
    """
    Base class for structure generation and countermodel search errors.
    """


class InfeasibleConfig(SearchError, ValueError):
    """
    Error raised if a generator configuration or corpus parameter cannot produce a valid structure.
    """


class NotACountermodel(SearchError):
    """
    Error raised if a structure to be shrunk does not violate the principle.
    """


class ParseError(Exception):
    """
    Error raised for an invalid structure-definition file.

       Attributes:
          kind     (ParseErrorKind)  Error category.
          span     (SourceSpan)      Location of the error in the source text.
          message  (string)          Error description without the location.
    """

    def __init__(self, kind, span, message):
        self.kind = kind
        self.span = span
        self.message = message
        super().__init__(f"{span}: {message}")
