"""
Fixed-Point Conversions

Conversions from exact values to FixedReal. Every conversion truncates
toward zero; the error bound of each function is stated in ulps.
"""

from fractions import Fraction

from picophi.core.exceptions import DomainError
from picophi.core.types import FixedReal, RationalLike
from picophi.numerics.isqrt import isqrt
from picophi.utils.conversion import to_rational
from picophi.utils.validation import ensure_digits


def fixed_from_rational(x: RationalLike, digits: int) -> FixedReal:
    """
    Truncate a rational toward zero to `digits` decimal places.

    Error bound: |x - result| < 1 ulp.

    :param x: Rational value
    :param digits: Decimal places
    :return: FixedReal instance
    """
    ensure_digits(digits)
    value = to_rational(x)
    magnitude = abs(value.numerator) * 10**digits // value.denominator
    return FixedReal(-magnitude if value < 0 else magnitude, digits)


def sqrt_fixed(x: RationalLike, digits: int) -> FixedReal:
    """
    Floor of the square root of a non-negative rational to `digits` places.

    floor(sqrt(x) * 10^d) = isqrt(floor(x * 10^2d)), so the result is exact
    truncation. Error bound: sqrt(x) - result in [0, 1) ulp.

    :param x: Non-negative rational
    :param digits: Decimal places
    :return: FixedReal instance
    :raises DomainError: If x is negative
    """
    ensure_digits(digits)
    value = to_rational(x)
    if value < 0:
        raise DomainError(f"Square root of a negative number: {value}")
    scaled = value.numerator * 10 ** (2 * digits) // value.denominator
    return FixedReal(isqrt(scaled), digits)


def fixed_from_surd(
    base: RationalLike,
    sign: int,
    radicand: RationalLike,
    divisor: RationalLike,
    digits: int,
) -> FixedReal:
    """
    Truncate (base + sign * sqrt(radicand)) / divisor toward zero.

    The value is rewritten as (u + sign * sqrt(W)) / k with integers u and
    k > 0, then floor(sqrt(W)) brackets the numerator between consecutive
    integers, which is enough to decide floor and ceiling exactly.
    Error bound: |value - result| < 1 ulp.

    :param base: Rational term outside the root
    :param sign: +1 or -1
    :param radicand: Non-negative rational under the root
    :param divisor: Positive rational divisor
    :param digits: Decimal places
    :return: FixedReal instance
    :raises DomainError: If the radicand is negative or the divisor is not positive
    """
    ensure_digits(digits)
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    p = to_rational(base)
    r = to_rational(radicand)
    q = to_rational(divisor)
    if r < 0:
        raise DomainError(f"Square root of a negative number: {r}")
    if q <= 0:
        raise DomainError(f"Divisor must be positive, got {q}")

    scale = 10**digits
    u = q.denominator * p.numerator * scale
    w = (q.denominator * p.denominator * scale) ** 2 * r
    k = p.denominator * q.numerator
    root = isqrt(w.numerator // w.denominator)
    exact = w.denominator == 1 and root * root == w.numerator

    # numerator t = u + sign*sqrt(W) lies in (low, low + 1), or equals low when exact
    if sign > 0:
        low = u + root
    else:
        low = u - root - (0 if exact else 1)

    if low >= 0:
        mantissa = low // k
    elif exact:
        mantissa = -((-low) // k)
    else:
        mantissa = low // k + 1
    return FixedReal(mantissa, digits)
