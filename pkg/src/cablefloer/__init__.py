"""Colored knot Floer homology of cables of L-space knots, over GF(2)."""

from .hfunc import HKnot, Staircase, UnverifiedRegimeWarning, h_cable, h_colored, h_knot, h_stab, h_torus
from .laurent import LaurentPoly, NormalizationError, PolynomialSyntaxError, format_poly, parse_poly

__version__ = "0.1.0"

__all__ = [
    "HKnot", "Staircase", "UnverifiedRegimeWarning", "h_cable", "h_colored", "h_knot", "h_stab", "h_torus",
    "LaurentPoly", "NormalizationError", "PolynomialSyntaxError", "format_poly", "parse_poly",
]
