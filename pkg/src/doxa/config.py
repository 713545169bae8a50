"""
Configurable limits.

Each limit is resolved from an explicit value, then the environment and finally the default. Values that
are missing, cannot be converted or are out of range fall back to the default.
"""

import os

MAX_PARTITIONS = "DOXA_MAX_PARTITIONS"
MAX_QUESTION_CELLS = "DOXA_MAX_QUESTION_CELLS"
WORKERS = "DOXA_WORKERS"


def max_partitions(val=None, defval=1000):
    """
    Resolves the maximum number of partitions enumerated per body of evidence for the partition principles.
    The cap is on the exact covers of each E, not on the size of the evidence family: any number of bodies
    of evidence is accepted and a Pi verdict is marked bounded only when some E has more covers than the cap.

        Parameters:
            val    (int)  Optional explicit value. Defaults to the DOXA_MAX_PARTITIONS environment variable.
            defval (int)  Optional default value.

        Returns:
            partition cap as an int in the range [1..10^7]
    """
    return _bounded(val, MAX_PARTITIONS, defval, 1, 10_000_000)


def max_question_cells(val=None, defval=20):
    """
    Resolves the largest question for which the stability check enumerates all unions of cells.

        Parameters:
            val    (int)  Optional explicit value. Defaults to the DOXA_MAX_QUESTION_CELLS environment variable.
            defval (int)  Optional default value.

        Returns:
            cell count bound as an int in the range [1..30]
    """
    return _bounded(val, MAX_QUESTION_CELLS, defval, 1, 30)


def workers(val=None, defval=1):
    """
    Resolves the number of countermodel search worker processes.

        Parameters:
            val    (int)  Optional explicit value. Defaults to the DOXA_WORKERS environment variable.
            defval (int)  Optional default value.

        Returns:
            worker count as an int in the range [1..256]
    """
    return _bounded(val, WORKERS, defval, 1, 256)


def _bounded(val, env, defval, lo, hi):
    if val is None:
        val = os.environ.get(env)

    try:
        if val is not None:
            v = int(f"{val}".strip())
            if lo <= v <= hi:
                return v
    except (ValueError, TypeError):
        pass

    return defval
