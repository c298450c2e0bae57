"""Exact Hochschild (co)homology of hypersurface algebras C[z]/<f>."""

from .engine import Analysis, PreconditionError, Report, analyze
from .grading import NotWeightedHomogeneousError, WeightSystem, detect_weights
from .ideals import (
    INFINITE,
    GroebnerBasis,
    buchberger,
    colon_ideal,
    divide,
    ideal_equals,
    ideal_intersection,
    is_zero_divisor_mod,
    milnor_number,
    normal_form,
    quotient_dimension,
    standard_monomials,
)
from .parsing import ParseError, parse_polynomial
from .poly import MonomialOrder, Polynomial

__all__ = [
    "Analysis", "PreconditionError", "Report", "analyze",
    "NotWeightedHomogeneousError", "WeightSystem", "detect_weights",
    "INFINITE", "GroebnerBasis", "buchberger", "colon_ideal", "divide",
    "ideal_equals", "ideal_intersection", "is_zero_divisor_mod",
    "milnor_number", "normal_form", "quotient_dimension",
    "standard_monomials", "ParseError", "parse_polynomial",
    "MonomialOrder", "Polynomial",
]
