"""Khovanov homology of oriented planar tangles."""

from .complex import BigradedComplex, CrossingCapError, build_complex
from .construct import PendantAttachment, attach_pendant_arc, from_morse, random_diagram, random_simple_tangle
from .diagram import (
    DiagramError,
    DiagramSyntaxError,
    TangleDiagram,
    crossing_counts,
    disjoint_union,
    is_simple,
    load_diagram,
    mirror,
    parse_diagram,
    serialize_diagram,
)
from .homology import BettiTable, betti, graded_euler_state_sum, jones_specialization, khovanov_poincare, poincare_polynomial
from .linalg import GF2, QQ, SparseMatrix, rank
from .poly import BigradingMultiset, LaurentPoly, parse_poly
from .reduction import arc_reduction_theorem_check, generator_expansion, reduce, simple_poincare
