"""
Format constants and grammar for structure-definition (.bps) files.
"""

import functools

from lark import Lark

ENCODING = "utf-8"

STATES = "states"
PRIOR = "prior"
QUESTION = "question"
EVIDENCE = "evidence"
THRESHOLD = "threshold"

SECTIONS = (STATES, PRIOR, QUESTION, EVIDENCE, THRESHOLD)

FULL = "S"
UNIFORM = "uniform"
HEADER = "# probability structure"
WIDTH = 100
INDENT = "    "

GRAMMAR = r"""
    start: section*
    question_only: question

    ?section: states | prior | question | evidence | threshold

    states: STATES NAME+
    prior: PRIOR (UNIFORM | entry+)
    entry: NAME "=" RATIONAL
    question: QUESTION cell+
    evidence: EVIDENCE (evset | NAME)+
    threshold: THRESHOLD RATIONAL

    cell: "{" NAME* "}"
    evset: "{" NAME* "}"

    STATES.2: /states[ \t]*:/
    PRIOR.2: /prior[ \t]*:/
    QUESTION.2: /question[ \t]*:/
    EVIDENCE.2: /evidence[ \t]*:/
    THRESHOLD.2: /threshold[ \t]*:/
    UNIFORM.2: /uniform\b/

    NAME: /[A-Za-z_][A-Za-z0-9_]*/
    RATIONAL: /-?(\d+\/\d+|\d+\.\d*|\.\d+|\d+)/

    COMMENT: /#[^\n]*/

    %import common.WS
    %ignore WS
    %ignore COMMENT
"""


@functools.cache
def parser():
    """
    Returns the (shared) LALR parser for structure-definition files.
    """
    return Lark(GRAMMAR, parser="lalr", start=["start", "question_only"], propagate_positions=True, maybe_placeholders=False)
