"""Exact arithmetic core: t-adic coefficients, weighted polynomials, binary forms."""

from .binary import BinaryForm, binary_gcd, binary_resultant
from .mpoly import MPoly
from .parse import ParseError, parse_mpoly, parse_tcoeff, parse_wpoly
from .tcoeff import INF, TCoeff, UPoly
from .wpoly import VVARS, WEIGHTS, XVARS, WPoly, weighted_degree

__all__ = [
    "BinaryForm", "INF", "MPoly", "ParseError", "TCoeff", "UPoly", "VVARS", "WEIGHTS",
    "WPoly", "XVARS", "binary_gcd", "binary_resultant", "parse_mpoly", "parse_tcoeff",
    "parse_wpoly", "weighted_degree",
]
