"""
Numeric Data Types

This module provides the value types shared by every other module:
Rational (exact reduced fractions) and FixedReal (scaled-integer decimals).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

# Python ints are the arbitrary precision Integer type; Fraction keeps
# numerator/denominator reduced with a positive denominator.
Rational = Fraction
RationalLike = Union[int, Fraction]


@dataclass(frozen=True)
class FixedReal:
    """
    Fixed-point decimal number: mantissa * 10^-digits.

    - 1 ulp = 10^-digits
    - FixedReal(16180, 4) = 1.6180
    - There is no negative zero: a zero mantissa always renders unsigned
    """

    mantissa: int
    digits: int

    def __post_init__(self):
        if isinstance(self.mantissa, bool) or not isinstance(self.mantissa, int):
            raise TypeError(f"Mantissa must be an int, got {type(self.mantissa).__name__}")
        if isinstance(self.digits, bool) or not isinstance(self.digits, int):
            raise TypeError(f"Digits must be an int, got {type(self.digits).__name__}")
        if self.digits < 0:
            raise ValueError(f"Digits must be >= 0, got {self.digits}")

    @classmethod
    def from_int(cls, value: int, digits: int) -> "FixedReal":
        """
        Exact fixed-point form of an integer.

        :param value: Integer value
        :param digits: Decimal places
        :return: FixedReal instance
        """
        return cls(value * 10**digits, digits)

    @property
    def scale(self) -> int:
        """10^digits."""
        return 10**self.digits

    @property
    def ulp(self) -> Fraction:
        """Value of one unit in the last place."""
        return Fraction(1, self.scale)

    def to_rational(self) -> Fraction:
        """Exact rational value."""
        return Fraction(self.mantissa, self.scale)

    def rescale(self, digits: int) -> "FixedReal":
        """
        Change the number of decimal places.

        Widening is exact; narrowing truncates toward zero.

        :param digits: New number of decimal places
        :return: FixedReal instance
        """
        if digits >= self.digits:
            return FixedReal(self.mantissa * 10 ** (digits - self.digits), digits)
        divisor = 10 ** (self.digits - digits)
        magnitude = abs(self.mantissa) // divisor
        return FixedReal(-magnitude if self.mantissa < 0 else magnitude, digits)

    def ulps_from(self, other: "FixedReal") -> int:
        """
        Distance to another value at the same precision, in ulps.

        :param other: Value with the same digits
        :return: |self - other| in ulps
        """
        self._check_same_digits(other)
        return abs(self.mantissa - other.mantissa)

    def is_zero(self) -> bool:
        return self.mantissa == 0

    def _check_same_digits(self, other: "FixedReal") -> None:
        if not isinstance(other, FixedReal):
            raise TypeError(f"Expected FixedReal, got {type(other).__name__}")
        if other.digits != self.digits:
            raise ValueError(f"Precision mismatch: {self.digits} vs {other.digits} digits")

    def __add__(self, other: "FixedReal") -> "FixedReal":
        self._check_same_digits(other)
        return FixedReal(self.mantissa + other.mantissa, self.digits)

    def __sub__(self, other: "FixedReal") -> "FixedReal":
        self._check_same_digits(other)
        return FixedReal(self.mantissa - other.mantissa, self.digits)

    def __neg__(self) -> "FixedReal":
        return FixedReal(-self.mantissa, self.digits)

    def __abs__(self) -> "FixedReal":
        return FixedReal(abs(self.mantissa), self.digits)

    def __lt__(self, other: "FixedReal") -> bool:
        self._check_same_digits(other)
        return self.mantissa < other.mantissa

    def __le__(self, other: "FixedReal") -> bool:
        self._check_same_digits(other)
        return self.mantissa <= other.mantissa

    def __gt__(self, other: "FixedReal") -> bool:
        self._check_same_digits(other)
        return self.mantissa > other.mantissa

    def __ge__(self, other: "FixedReal") -> bool:
        self._check_same_digits(other)
        return self.mantissa >= other.mantissa

    def __str__(self) -> str:
        """
        Decimal rendering: optional '-', integer part, '.', exactly `digits`
        fractional digits.
        """
        sign = "-" if self.mantissa < 0 else ""
        whole, fraction = divmod(abs(self.mantissa), self.scale)
        if self.digits == 0:
            return f"{sign}{whole}"
        return f"{sign}{whole}.{fraction:0{self.digits}d}"
