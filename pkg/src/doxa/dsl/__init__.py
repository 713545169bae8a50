"""
Structure-definition (.bps) file format.

    states:    s1 s2 s3 s4 s5 s6
    prior:     uniform                      # or name=RATIONAL for every state
    question:  { s1 s2 } { s3 s4 } { s5 } { s6 }
    evidence:  { S } { s1 s3 s5 } { s2 s4 s6 }
    threshold: 13/20

Sections may appear in any order, each exactly once. '#' starts a comment. RATIONAL is an integer, a
fraction (52/61) or a decimal literal (.99), always converted exactly. 'S' in the evidence section stands
for the full state set and cannot name a state.
"""

from .decode import parse
from .decode import parse_question
from .encode import serialize
