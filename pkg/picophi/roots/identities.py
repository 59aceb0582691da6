"""
Root Identities

Checks of the defining identities of phi(a, b) at a caller-chosen precision:

- reciprocal:  phi = a + b / phi          (phi != 0)
- square root: phi = sqrt(b + a * phi)    (phi >= 0)
- minus root:  psi = a - phi, psi * phi = -b

Each side is compared at `digits` places within ToleranceUlps.IDENTITY.
Internally the right-hand sides are evaluated with enough guard digits to
absorb the error amplification of the division or square root, so the
fixed tolerance stays valid for small phi.
"""

import logging
from fractions import Fraction
from typing import Callable

from picophi.core.exceptions import PreconditionError
from picophi.core.types import FixedReal, RationalLike
from picophi.core.value import UlpValue
from picophi.core.verification import Verification
from picophi.numerics.fixed_point import fixed_from_rational, sqrt_fixed
from picophi.roots.quadratic import compare_to_phi, minus_root, phi, quadratic_roots
from picophi.utils.conversion import format_rational, to_rational
from picophi.utils.validation import ensure_digits
from picophi.values import Precision, ToleranceUlps

logger = logging.getLogger(__name__)

_ROOTS = {"plus": phi, "minus": minus_root}


def guard_digits(amplification: Fraction) -> int:
    """
    Extra digits needed so an error amplified by `amplification` stays sub-ulp.

    :param amplification: Upper bound on |d(rhs)/d(root)|
    :return: Number of guard digits
    """
    magnitude = max(1, -((-amplification.numerator) // amplification.denominator))
    return Precision.GUARD_DIGITS + len(str(magnitude))


def _root_function(root: str) -> Callable[[RationalLike, RationalLike, int], FixedReal]:
    try:
        return _ROOTS[root]
    except KeyError:
        raise ValueError(f"root must be 'plus' or 'minus', got {root!r}") from None


def check_reciprocal_identity(
    a: RationalLike, b: RationalLike, digits: int, root: str = "plus"
) -> Verification:
    """
    Verify x = a + b / x for a root x of x^2 - a x - b.

    :param a: Linear coefficient
    :param b: Constant coefficient
    :param digits: Decimal places for the comparison
    :param root: "plus" for phi(a, b), "minus" for the minus root
    :return: Verification within 8 ulp
    :raises PreconditionError: If the root is below 1 ulp in magnitude
    :raises DomainError: If a^2 + 4b < 0
    """
    ensure_digits(digits)
    a = to_rational(a)
    b = to_rational(b)
    evaluate = _root_function(root)
    value = evaluate(a, b, digits)
    if value.is_zero():
        raise PreconditionError(
            f"reciprocal identity requires the {root} root to be nonzero in the denominator; "
            f"it is below 1 ulp at {digits} digits for a={format_rational(a)}, "
            f"b={format_rational(b)}"
        )
    approx = value.to_rational()
    working = digits + guard_digits(abs(b) / (approx * approx))
    logger.debug("check_reciprocal_identity: %d working digits", working)
    precise = evaluate(a, b, working).to_rational()
    rhs = fixed_from_rational(a + b / precise, digits)
    return Verification(
        identity="reciprocal" if root == "plus" else "reciprocal-minus",
        holds=UlpValue.is_within_ulps(value, rhs, ToleranceUlps.IDENTITY),
        lhs=str(value),
        rhs=str(rhs),
        tolerance_ulps=ToleranceUlps.IDENTITY,
        digits=digits,
        params={"a": format_rational(a), "b": format_rational(b), "root": root},
    )


def check_sqrt_identity(a: RationalLike, b: RationalLike, digits: int) -> Verification:
    """
    Verify phi(a, b) = sqrt(b + a * phi(a, b)).

    :param a: Linear coefficient
    :param b: Constant coefficient
    :param digits: Decimal places for the comparison
    :return: Verification within 8 ulp
    :raises PreconditionError: If phi(a, b) < 0 or the radicand is negative
    :raises DomainError: If a^2 + 4b < 0
    """
    ensure_digits(digits)
    a = to_rational(a)
    b = to_rational(b)
    if compare_to_phi(0, a, b) > 0:
        raise PreconditionError(
            f"phi({format_rational(a)}, {format_rational(b)}) is negative and cannot "
            "equal a principal square root"
        )
    value = phi(a, b, digits)
    if value.is_zero():
        # sqrt is not Lipschitz at 0: an error e becomes sqrt(|a| e)
        working = 2 * (digits + Precision.GUARD_DIGITS) + len(str(abs(a.numerator)))
    else:
        working = digits + guard_digits(abs(a) / (2 * value.to_rational()))
    logger.debug("check_sqrt_identity: %d working digits", working)
    radicand = b + a * phi(a, b, working).to_rational()
    if radicand < 0:
        raise PreconditionError(
            f"negative radicand b + a*phi = {format_rational(radicand)} "
            f"at {working} digits"
        )
    rhs = sqrt_fixed(radicand, working).rescale(digits)
    return Verification(
        identity="sqrt",
        holds=UlpValue.is_within_ulps(value, rhs, ToleranceUlps.IDENTITY),
        lhs=str(value),
        rhs=str(rhs),
        tolerance_ulps=ToleranceUlps.IDENTITY,
        digits=digits,
        params={"a": format_rational(a), "b": format_rational(b)},
    )


def check_minus_root_relations(a: RationalLike, b: RationalLike, digits: int) -> Verification:
    """
    Verify minus_root = a - phi within 2 ulp and minus_root * phi = -b within
    the product bound of QuadraticRoots.

    :param a: Linear coefficient
    :param b: Constant coefficient
    :param digits: Decimal places
    :return: Verification of both relations
    :raises DomainError: If a^2 + 4b < 0
    """
    ensure_digits(digits)
    roots = quadratic_roots(a, b, digits)
    plus = roots.plus_root.to_rational()
    minus = roots.minus_root.to_rational()
    sum_holds = UlpValue.rational_within_ulps(minus, roots.a - plus, digits, ToleranceUlps.ROOT_SUM)
    product_error = abs(minus * plus + roots.b)
    product_holds = product_error <= roots.product_error_bound()
    return Verification(
        identity="minus-root",
        holds=sum_holds and product_holds,
        lhs=str(roots.minus_root),
        rhs=str(fixed_from_rational(roots.a - plus, digits)),
        tolerance_ulps=ToleranceUlps.ROOT_SUM,
        digits=digits,
        detail=(
            f"minus*phi + b = {fixed_from_rational(minus * plus + roots.b, digits + 2)}, "
            f"bound {fixed_from_rational(roots.product_error_bound(), digits + 2)}, "
            f"product {'within' if product_holds else 'outside'} bound"
        ),
        params={"a": format_rational(roots.a), "b": format_rational(roots.b)},
    )

