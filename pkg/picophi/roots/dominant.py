"""
Dominant Root of a k-Term Recurrence

The characteristic polynomial of F_n = a_1 F_{n-1} + ... + a_k F_{n-k} is

    p(x) = x^k - a_1 x^(k-1) - ... - a_k

When every a_i > 0, p(x) / x^k = 1 - sum(a_i x^-i) increases strictly on
x > 0, so p has exactly one positive root. It lies in [0, 1 + sum(a_i)]:
p(0) = -a_k < 0 and p(1 + sum(a_i)) > 0.
"""

import logging
from fractions import Fraction
from math import lcm
from typing import List, Sequence

from picophi.core.exceptions import PreconditionError
from picophi.core.types import FixedReal, RationalLike
from picophi.utils.conversion import format_rational_list, to_rational
from picophi.utils.validation import ensure_digits

logger = logging.getLogger(__name__)


def characteristic_sign(coefficients: Sequence[Fraction], x: Fraction) -> int:
    """
    Exact sign of the characteristic polynomial at x.

    :param coefficients: a_1..a_k
    :param x: Evaluation point
    :return: -1, 0 or 1
    """
    value = Fraction(1)
    for a in coefficients:
        value = value * x - a
    return (value > 0) - (value < 0)


def _scaled_polynomial(coefficients: Sequence[Fraction], scale: int) -> List[int]:
    # integer coefficients of L * scale^k * p(m / scale) as a polynomial in m
    common = lcm(*(c.denominator for c in coefficients))
    scaled = [common]
    power = 1
    for a in coefficients:
        power *= scale
        scaled.append(-(a * common).numerator * power)
    return scaled


def _sign_at(scaled: Sequence[int], m: int) -> int:
    value = 0
    for c in scaled:
        value = value * m + c
    return (value > 0) - (value < 0)


def dominant_root_k(coefficients: Sequence[RationalLike], digits: int) -> FixedReal:
    """
    Unique positive root of x^k - a_1 x^(k-1) - ... - a_k, all a_i > 0.

    Bisects over integer mantissas m (x = m / 10^digits) with exact integer
    sign evaluation, keeping p(lo) <= 0 < p(hi). The loop ends with
    hi = lo + 1, so lo is floor(root * 10^digits): error in [0, 1) ulp.

    :param coefficients: a_1..a_k, k >= 1, each > 0
    :param digits: Decimal places
    :return: FixedReal instance
    :raises PreconditionError: If any coefficient is <= 0 or the list is empty
    """
    ensure_digits(digits)
    coeffs = [to_rational(c) for c in coefficients]
    if not coeffs:
        raise PreconditionError("dominant_root_k needs at least one coefficient")
    if any(c <= 0 for c in coeffs):
        raise PreconditionError(
            "dominant-root existence not guaranteed: every coefficient must be > 0, "
            f"got [{format_rational_list(coeffs)}]"
        )
    scale = 10**digits
    scaled = _scaled_polynomial(coeffs, scale)
    upper = (1 + sum(coeffs)) * scale
    lo, hi = 0, -((-upper.numerator) // upper.denominator)  # ceil
    steps = 0
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _sign_at(scaled, mid) <= 0:
            lo = mid
        else:
            hi = mid
        steps += 1
    logger.debug("dominant_root_k: %d bisection steps at %d digits", steps, digits)
    return FixedReal(lo, digits)
