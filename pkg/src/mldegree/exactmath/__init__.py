"""Exact arithmetic substrate: rationals, polynomials, resultants, roots, series."""

from fractions import Fraction as Rational

from mldegree.exactmath.linalg import bareiss_det, integer_kernel, rational_det, rref, saturated_basis
from mldegree.exactmath.multipoly import MultiPoly
from mldegree.exactmath.resultant import resultant, subresultant, subresultant_coefficients
from mldegree.exactmath.roots import CertifiedRoot, complex_roots_numeric, real_root_count, sturm_sequence
from mldegree.exactmath.series import IntSeries, series_coefficient, series_reciprocal
from mldegree.exactmath.unipoly import (
    UniPoly,
    interpolate,
    inverse_mod,
    poly_gcd,
    poly_xgcd,
    remove_common_roots,
    squarefree_part,
)


def parse_rational(text) -> Rational:
    """Parse "p/q", an int, or a decimal string into an exact rational."""
    if isinstance(text, (int, Rational)):
        return Rational(text)
    if isinstance(text, float):
        raise TypeError("floats are not accepted; pass \"p/q\" strings")
    return Rational(str(text).strip())


def format_rational(q) -> str:
    q = Rational(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


__all__ = [
    "Rational", "UniPoly", "MultiPoly", "IntSeries", "CertifiedRoot",
    "bareiss_det", "rational_det", "rref", "integer_kernel", "saturated_basis",
    "resultant", "subresultant", "subresultant_coefficients",
    "complex_roots_numeric", "real_root_count", "sturm_sequence",
    "series_coefficient", "series_reciprocal",
    "interpolate", "inverse_mod", "poly_gcd", "poly_xgcd", "remove_common_roots", "squarefree_part",
    "parse_rational", "format_rational",
]
