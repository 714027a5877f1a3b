"""Exact symbolic computation in the double of the Jordan plane.

The double is a Hopf algebra on ``x, y, g^{+-1}, zeta, u, v``.  The package
straightens products into PBW normal form with rational coefficients, and
builds the coproduct and antipode on top of that.  It also provides the
quotient onto U(sl2), the map into a localized Weyl algebra, and explicit
modules together with the checks that tie them together.
"""

from .engine import (
    AlgebraMap,
    Element,
    NonTerminationError,
    Presentation,
    PresentationError,
    Tensor,
    check_local_confluence,
    commutator,
    degree_of,
    normal_form,
)
from .parser import ParseError, parse, parse_element
from .report import Check, Report

__version__ = "0.1.0"

__all__ = [
    "AlgebraMap",
    "Check",
    "Element",
    "NonTerminationError",
    "ParseError",
    "Presentation",
    "PresentationError",
    "Report",
    "Tensor",
    "check_local_confluence",
    "commutator",
    "degree_of",
    "normal_form",
    "parse",
    "parse_element",
]
