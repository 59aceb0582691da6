"""
Ulp comparison constants and utilities.
"""

from fractions import Fraction

from picophi.core.types import FixedReal
from picophi.values import Precision, ToleranceUlps


class UlpValue:
    """Common tolerance constants and ulp comparisons."""

    tolerance = ToleranceUlps
    precision = Precision

    # ------------------------------------------------------------------------
    # Utility Methods
    # ------------------------------------------------------------------------
    @staticmethod
    def is_within_ulps(x: FixedReal, y: FixedReal, ulps: int) -> bool:
        """
        Check that two values at the same precision differ by at most `ulps`.

        :param x: First value
        :param y: Second value (same digits as x)
        :param ulps: Allowed distance in ulps
        :return: True if |x - y| <= ulps * 10^-digits
        """
        return x.ulps_from(y) <= ulps

    @staticmethod
    def rational_within_ulps(x: Fraction, y: Fraction, digits: int, ulps: int) -> bool:
        """
        Check that two exact rationals differ by at most `ulps` at scale 10^-digits.

        :param x: First value
        :param y: Second value
        :param digits: Decimal places defining the ulp
        :param ulps: Allowed distance in ulps
        :return: True if |x - y| <= ulps * 10^-digits
        """
        return abs(x - y) * 10**digits <= ulps
