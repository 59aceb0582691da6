"""
Quadratic Roots

Closed-form roots of x^2 - a x - b via the quadratic formula:

    phi(a, b)   = (a + sqrt(a^2 + 4b)) / 2    ("plus" root)
    minus_root  = (a - sqrt(a^2 + 4b)) / 2 = a - phi(a, b) = -b / phi(a, b)

The golden ratio is phi(1, 1). Both roots are returned as the exact
truncation toward zero to the requested digits (error < 1 ulp).
Negative discriminants (complex roots) are rejected.
"""

from dataclasses import dataclass
from fractions import Fraction

from picophi.core.exceptions import DomainError
from picophi.core.types import FixedReal, RationalLike
from picophi.numerics.fixed_point import fixed_from_surd
from picophi.utils.conversion import format_rational, to_rational


def discriminant(a: RationalLike, b: RationalLike) -> Fraction:
    """Exact a^2 + 4b."""
    a = to_rational(a)
    b = to_rational(b)
    return a * a + 4 * b


def _real_discriminant(a: Fraction, b: Fraction) -> Fraction:
    value = discriminant(a, b)
    if value < 0:
        raise DomainError(
            f"complex roots out of scope: a^2 + 4b = {format_rational(value)} < 0 "
            f"for a={format_rational(a)}, b={format_rational(b)}"
        )
    return value


def phi(a: RationalLike, b: RationalLike, digits: int) -> FixedReal:
    """
    Plus root of x^2 - a x - b.

    :param a: Linear coefficient
    :param b: Constant coefficient
    :param digits: Decimal places
    :return: (a + sqrt(a^2 + 4b)) / 2 truncated toward zero
    :raises DomainError: If a^2 + 4b < 0
    """
    a = to_rational(a)
    b = to_rational(b)
    return fixed_from_surd(a, 1, _real_discriminant(a, b), 2, digits)


def minus_root(a: RationalLike, b: RationalLike, digits: int) -> FixedReal:
    """
    Minus root of x^2 - a x - b.

    :param a: Linear coefficient
    :param b: Constant coefficient
    :param digits: Decimal places
    :return: (a - sqrt(a^2 + 4b)) / 2 truncated toward zero
    :raises DomainError: If a^2 + 4b < 0
    """
    a = to_rational(a)
    b = to_rational(b)
    return fixed_from_surd(a, -1, _real_discriminant(a, b), 2, digits)


def compare_to_phi(r: RationalLike, a: RationalLike, b: RationalLike) -> int:
    """
    Exact sign of r - phi(a, b).

    r - phi = ((2r - a) - sqrt(a^2 + 4b)) / 2, so the sign follows from the
    sign of 2r - a and the comparison of (2r - a)^2 with a^2 + 4b.

    :param r: Rational to compare
    :param a: Linear coefficient
    :param b: Constant coefficient
    :return: -1 if r < phi, 0 if r == phi, 1 if r > phi
    :raises DomainError: If a^2 + 4b < 0
    """
    r = to_rational(r)
    a = to_rational(a)
    disc = _real_discriminant(a, to_rational(b))
    shifted = 2 * r - a
    if shifted < 0:
        return -1
    square = shifted * shifted
    return (square > disc) - (square < disc)


@dataclass(frozen=True)
class QuadraticRoots:
    """
    Both real roots of x^2 - a x - b at a fixed precision.

    - discriminant >= 0
    - plus_root >= minus_root
    - plus_root + minus_root = a within 2 ulp
    - plus_root * minus_root = -b within product_error_bound()
    """

    a: Fraction
    b: Fraction
    discriminant: Fraction
    plus_root: FixedReal
    minus_root: FixedReal
    digits: int

    def __post_init__(self):
        if self.discriminant < 0:
            raise DomainError(f"complex roots out of scope: discriminant {self.discriminant} < 0")
        if self.plus_root < self.minus_root:
            raise ValueError(f"plus_root {self.plus_root} is below minus_root {self.minus_root}")

    def product_error_bound(self) -> Fraction:
        """
        Bound on |plus_root * minus_root + b|.

        With both roots within 1 ulp u of the exact values,
        |p*m - phi*psi| <= (|p| + |m| + 3u) * u.
        """
        ulp = self.plus_root.ulp
        size = abs(self.plus_root.to_rational()) + abs(self.minus_root.to_rational())
        return (size + 3 * ulp) * ulp

    def __str__(self) -> str:
        return (
            f"QuadraticRoots(a={format_rational(self.a)}, b={format_rational(self.b)}, "
            f"plus={self.plus_root}, minus={self.minus_root})"
        )


def quadratic_roots(a: RationalLike, b: RationalLike, digits: int) -> QuadraticRoots:
    """
    Both roots of x^2 - a x - b.

    :param a: Linear coefficient
    :param b: Constant coefficient
    :param digits: Decimal places
    :return: QuadraticRoots instance
    :raises DomainError: If a^2 + 4b < 0
    """
    a = to_rational(a)
    b = to_rational(b)
    disc = _real_discriminant(a, b)
    return QuadraticRoots(
        a=a,
        b=b,
        discriminant=disc,
        plus_root=fixed_from_surd(a, 1, disc, 2, digits),
        minus_root=fixed_from_surd(a, -1, disc, 2, digits),
        digits=digits,
    )
