"""
Structure-definition file encoder.

Encodes a probability structure as the canonical text of a .bps file: states in index order, priors as
exact fractions, cells and bodies of evidence in canonical order, LF line endings.
"""

from . import codec


def serialize(m):
    """
    Encodes a probability structure as structure-definition text. Equal structures produce identical
    text and parse(serialize(m)) == m.

        Parameters:
            m  (ProbabilityStructure)  Structure with identifier state names.

        Returns:
            string.
    """
    states = m.states
    full = m.full

    def braces(p, shorthand=False):
        if shorthand and p == full:
            return f"{{ {codec.FULL} }}"

        return "{ " + " ".join(states[s] for s in sorted(p)) + " }"

    lines = [codec.HEADER]
    lines.extend(_wrap(codec.STATES, states))
    lines.extend(_wrap(codec.PRIOR, [f"{name}={p}" for name, p in zip(states, m.prior)]))
    lines.extend(_wrap(codec.QUESTION, [braces(cell) for cell in m.question.cells]))
    lines.extend(_wrap(codec.EVIDENCE, [braces(e, True) for e in m.evidence]))
    lines.append(f"{codec.THRESHOLD}: {m.threshold}")

    return "\n".join(lines) + "\n"


def _wrap(section, items):
    lines = []
    line = f"{section}:"

    for item in items:
        if len(line) + 1 + len(item) > codec.WIDTH and line != f"{section}:":
            lines.append(line)
            line = codec.INDENT + item
        else:
            line = f"{line} {item}"

    lines.append(line)

    return lines
