"""Exact rational polynomials, a text parser, and Shabat-polynomial checks."""

from .parse import NegativeExponent, PolySyntaxError, parse_poly
from .ratpoly import (
    DivisionByZeroPoly,
    RatPoly,
    format_poly,
    gcd,
    interpolate,
    multiplicity_profile,
    resultant,
    squarefree_decomposition,
)
from .roots import rational_roots, root_multiplicity
from .shabat import (
    CriticalValues,
    DegreeTooSmall,
    NoRationalSecondValue,
    NotASquare,
    NotShabat,
    ShabatCertificate,
    ShabatError,
    ZeroCriticalValueMissing,
    antiderivative,
    critical_value_resultant,
    critical_values,
    poly_sqrt,
    verify_power,
    verify_shabat,
)
