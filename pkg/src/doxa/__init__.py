"""
Belief revision over finite probability structures.

Computes what an agent believes at a threshold t under the HPD (highest probability density) and LK
(tracking) belief operators, checks the seven belief-revision principles and the ORTHOGONALITY, STABILITY
and THRESHOLD constraints, and searches for small countermodels.

    import doxa

    m = doxa.make("drawing-card")
    b = doxa.beliefs(m, m.full, doxa.BeliefOperator.HPD)
"""

from .structs import BeliefOperator
from .structs import Constraint
from .structs import ConstraintFilter
from .structs import CorpusId
from .structs import GeneratorConfig
from .structs import Mode
from .structs import Principle
from .core import structure
from .core import validate_structure
from .core import conditional_probability
from .core import discover
from .core import refine_question
from .core import with_question
from .belief import beliefs
from .belief import believes
from .belief import nm_consequence
from .principles import check_all
from .principles import check_principle
from .principles import entailments
from .properties import check_orthogonality
from .properties import check_stability
from .properties import check_threshold
from .properties import satisfies
from .search import generate_random
from .search import search_countermodel
from .search import shrink
from .corpus import make
from .dsl import parse
from .dsl import serialize
