"""Multivariable Alexander polynomials of closed braids via coloured Burau matrices."""

from .alexander import (
    LinkInvariantReport,
    alexander_invariant,
    alexander_polynomial,
    axis_link_polynomial,
    c_matrix,
    coloured_burau,
    full_report,
    identification_map,
)
from .braid import BraidWord, Permutation, components_of, parse_word, permutation_of, undercrossing_labels
from .errors import (
    DivisibilityFailure,
    DivisorZero,
    IndexOutOfRange,
    NotDivisible,
    NotSquare,
    ParseError,
)
from .fox import oracle_axis_polynomial
from .laurent import LaurentPoly, PolyMatrix, canonicalize, determinant, exact_divide, substitute, units_equal

__version__ = "0.1.0"
