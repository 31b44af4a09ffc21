"""Exact arithmetic substrate: rationals, polynomials, rational functions, series."""

from fractions import Fraction

from .integers import (
    DEFAULT_BOUND,
    FactoredInteger,
    IncompleteFactorization,
    factor_integer,
    is_prime,
    is_rational_square,
    is_square_in_quadratic,
    is_squarefree,
    rational_nth_root,
    squarefree_kernel,
)
from .poly import (
    RatFunc,
    UniPoly,
    X,
    cubic_discriminant,
    multiplicity,
    poly,
    poly_gcd,
    resultant,
    squarefree_decomposition,
)
from .series import InsufficientPrecision, LaurentSeries, PoleError

Rational = Fraction

__all__ = [
    "DEFAULT_BOUND",
    "FactoredInteger",
    "Fraction",
    "IncompleteFactorization",
    "InsufficientPrecision",
    "LaurentSeries",
    "PoleError",
    "RatFunc",
    "Rational",
    "UniPoly",
    "X",
    "cubic_discriminant",
    "factor_integer",
    "is_prime",
    "is_rational_square",
    "is_square_in_quadratic",
    "is_squarefree",
    "multiplicity",
    "poly",
    "poly_gcd",
    "rational_nth_root",
    "resultant",
    "squarefree_decomposition",
    "squarefree_kernel",
]
