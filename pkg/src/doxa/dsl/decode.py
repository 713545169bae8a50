"""
Structure-definition file decoder.

Parses the text of a .bps file into the equivalent validated probability structure. Every error is
reported as a ParseError with the location of the offending text.
"""

import logging

from lark import Token
from lark import Tree
from lark.exceptions import UnexpectedCharacters
from lark.exceptions import UnexpectedEOF
from lark.exceptions import UnexpectedInput
from lark.exceptions import UnexpectedToken

from .. import core

from ..structs import ParseErrorKind
from ..structs import SourceSpan
from ..errors import ParseError
from ..errors import StructureError
from ..errors import MissingWeight
from ..errors import NegativeWeight
from ..errors import ZeroTotalWeight
from ..errors import NotAPartition
from ..errors import EmptyEvidenceSet
from ..errors import ZeroProbabilityEvidence
from ..errors import DuplicateEvidence
from ..errors import ThresholdOutOfRange

from . import codec

log = logging.getLogger(__name__)

# section blamed for a validation error
_SECTION_OF = {
    MissingWeight: codec.PRIOR,
    NegativeWeight: codec.PRIOR,
    ZeroTotalWeight: codec.PRIOR,
    NotAPartition: codec.QUESTION,
    EmptyEvidenceSet: codec.EVIDENCE,
    ZeroProbabilityEvidence: codec.EVIDENCE,
    DuplicateEvidence: codec.EVIDENCE,
    ThresholdOutOfRange: codec.THRESHOLD,
}


def parse(text):
    """
    Parses a structure-definition file.

        Parameters:
            text  (string)  File contents. LF and CRLF line endings are accepted.

        Returns:
            ProbabilityStructure.

        Raises:
            ParseError  With kind SYNTAX, UNKNOWN_STATE, DUPLICATE_STATE, BAD_RATIONAL, MISSING_SECTION or
                        SEMANTIC_INVALID (wrapping the StructureError raised by validation).
    """
    tree = _parse(text, "start")
    sections = _sections(tree)

    for name in codec.SECTIONS:
        if name not in sections:
            raise ParseError(ParseErrorKind.MISSING_SECTION, SourceSpan(1, 1, 0), f"missing '{name}' section")

    states = _states(sections[codec.STATES])
    index = {name: i for i, name in enumerate(states)}

    raw = {
        "states": states,
        "prior": _prior(sections[codec.PRIOR], index),
        "question": _sets(sections[codec.QUESTION], index, False),
        "evidence": _sets(sections[codec.EVIDENCE], index, True),
        "threshold": _rational(sections[codec.THRESHOLD].children[1]),
    }

    try:
        m = core.validate_structure(raw)
    except StructureError as x:
        section = sections[_SECTION_OF.get(type(x), codec.STATES)]
        token = section.children[1] if isinstance(x, ThresholdOutOfRange) else section.children[0]
        raise ParseError(ParseErrorKind.SEMANTIC_INVALID, _span(token), f"{x}") from x

    log.debug("parsed %s", core.describe(m))

    return m


def parse_question(text, m):
    """
    Parses a file holding only a 'question:' section against the states of a structure.

        Parameters:
            text  (string)                File contents.
            m     (ProbabilityStructure)  Structure whose states the cells refer to.

        Returns:
            Question.

        Raises:
            ParseError  With kind SYNTAX, UNKNOWN_STATE or SEMANTIC_INVALID.
    """
    tree = _parse(text, "question_only")
    section = tree.children[0]
    cells = _sets(section, m.index, False)

    try:
        return core.with_question(m, cells).question
    except StructureError as x:
        raise ParseError(ParseErrorKind.SEMANTIC_INVALID, _span(section.children[0]), f"{x}") from x


def _parse(text, start):
    try:
        return codec.parser().parse(text, start=start)

    except UnexpectedEOF as x:
        raise ParseError(ParseErrorKind.SYNTAX, _end(text), "unexpected end of input") from x

    except UnexpectedCharacters as x:
        raise ParseError(ParseErrorKind.SYNTAX, SourceSpan(x.line, x.column, 1), f"unexpected character '{x.char}'") from x

    except UnexpectedToken as x:
        if x.token.type == "$END":
            raise ParseError(ParseErrorKind.SYNTAX, _end(text), "unexpected end of input") from x

        span = _span(x.token)
        raise ParseError(ParseErrorKind.SYNTAX, span, f"unexpected '{x.token}'") from x

    except UnexpectedInput as x:
        raise ParseError(ParseErrorKind.SYNTAX, SourceSpan(max(x.line, 1), max(x.column, 1), 1), "invalid input") from x


def _sections(tree):
    sections = {}
    for section in tree.children:
        name = f"{section.data}"
        if name in sections:
            raise ParseError(ParseErrorKind.SYNTAX, _span(section.children[0]), f"duplicate '{name}' section")

        sections[name] = section

    return sections


def _states(section):
    states = []
    seen = set()
    for token in section.children[1:]:
        if token in (codec.FULL, codec.UNIFORM):
            raise ParseError(ParseErrorKind.SYNTAX, _span(token), f"'{token}' is reserved and cannot name a state")

        if f"{token}" in seen:
            raise ParseError(ParseErrorKind.DUPLICATE_STATE, _span(token), f"duplicate state '{token}'")

        seen.add(f"{token}")
        states.append(f"{token}")

    return states


def _prior(section, index):
    if isinstance(item := section.children[1], Token) and item.type == "UNIFORM":
        return codec.UNIFORM

    prior = {}
    for entry in section.children[1:]:
        name, value = entry.children
        if name not in index:
            raise ParseError(ParseErrorKind.UNKNOWN_STATE, _span(name), f"unknown state '{name}'")

        if name in prior:
            raise ParseError(ParseErrorKind.DUPLICATE_STATE, _span(name), f"duplicate prior entry for '{name}'")

        prior[f"{name}"] = _rational(value)

    return prior


def _sets(section, index, full):
    sets = []
    for item in section.children[1:]:
        if not isinstance(item, Tree):
            if not (full and item == codec.FULL):
                raise ParseError(ParseErrorKind.SYNTAX, _span(item), f"expected '{{' or '{codec.FULL}', got '{item}'")
            sets.append(sorted(index.values()))
            continue

        members = []
        for token in item.children:
            if full and token == codec.FULL:
                members.extend(index.values())
            elif (i := index.get(f"{token}")) is not None:
                members.append(i)
            else:
                raise ParseError(ParseErrorKind.UNKNOWN_STATE, _span(token), f"unknown state '{token}'")

        sets.append(sorted(set(members)))

    return sets


def _rational(token):
    try:
        return core.rational(f"{token}")
    except (ValueError, ZeroDivisionError) as x:
        raise ParseError(ParseErrorKind.BAD_RATIONAL, _span(token), f"invalid rational '{token}'") from x


def _span(token):
    return SourceSpan(token.line, token.column, max(len(token), 1))


def _end(text):
    lines = text.split("\n")
    if len(lines) > 1 and lines[-1] == "":
        lines.pop()

    line = max(len(lines), 1)
    column = len(lines[-1].rstrip("\r")) if lines else 0

    return SourceSpan(line, max(column, 1), 0 if not text else 1)
