"""
Exact Numerics

Integer square roots, exact rational arithmetic and fixed-point
conversions. Every other picophi module builds on these.
"""

from picophi.numerics.fixed_point import fixed_from_rational, fixed_from_surd, sqrt_fixed
from picophi.numerics.isqrt import is_perfect_square, isqrt
from picophi.numerics.rational import add, div, mul, rational_arith, sign, sub

__all__ = [
    "isqrt",
    "is_perfect_square",
    "sqrt_fixed",
    "fixed_from_rational",
    "fixed_from_surd",
    "rational_arith",
    "add",
    "sub",
    "mul",
    "div",
    "sign",
]
