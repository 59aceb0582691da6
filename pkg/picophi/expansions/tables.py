"""
Convergence Tables

Builds ConvergenceReport tables for consecutive-term ratios, continued
fraction convergents and nested radical iterates. Errors against a quadratic
root are exact truncations of |value - phi(a, b)|, so the error column is
monotone wherever the true error is.
"""

import logging
from fractions import Fraction
from typing import Callable, List, Optional

from picophi.core.exceptions import PreconditionError
from picophi.core.types import FixedReal, RationalLike
from picophi.expansions.continued_fraction import ContinuedFractionSpec, cf_convergent
from picophi.expansions.radical import iter_radical
from picophi.expansions.report import ConvergenceReport, ConvergenceRow
from picophi.numerics.fixed_point import fixed_from_rational, fixed_from_surd
from picophi.roots.dominant import dominant_root_k
from picophi.roots.quadratic import compare_to_phi, discriminant, phi
from picophi.sequences.recurrence import ratios
from picophi.sequences.spec import RecurrenceSpec
from picophi.utils.conversion import format_rational, format_rational_list, to_rational
from picophi.utils.validation import ensure_digits, ensure_index
from picophi.values import Precision

logger = logging.getLogger(__name__)

ErrorFunction = Callable[[Fraction], FixedReal]


def _phi_error(a: Fraction, b: Fraction, digits: int) -> ErrorFunction:
    # |r - phi| = |(2r - a) - sqrt(D)| / 2, truncated exactly
    disc = discriminant(a, b)

    def error(value: Fraction) -> FixedReal:
        return abs(fixed_from_surd(2 * value - a, -1, disc, 2, digits))

    return error


def _rational_error(target: Fraction, digits: int) -> ErrorFunction:
    def error(value: Fraction) -> FixedReal:
        return fixed_from_rational(abs(value - target), digits)

    return error


def _quadratic_dominates(a: Fraction, b: Fraction) -> bool:
    return a > 0 and discriminant(a, b) > 0


def ratio_convergence_table(spec: RecurrenceSpec, n_max: int, digits: int) -> ConvergenceReport:
    """
    Table of F_n / F_{n-1} for n = 1..n_max against the dominant root.

    The target is phi(a, b) for k = 2, the exact coefficient for k = 1 and
    dominant_root_k for k >= 3. Rows whose predecessor term is zero are
    marked undefined and the table continues.

    For k = 2 any real-rooted pair is tabulated; when a <= 0 or the roots
    coincide the report carries convergence_guaranteed=False. For k >= 3 the
    dominant root needs every coefficient > 0, so no table is built otherwise.

    :param spec: Recurrence to tabulate
    :param n_max: Last ratio index, >= 1
    :param digits: Decimal places of the decimal and error columns
    :return: ConvergenceReport with kind "ratio"
    :raises DomainError: If k = 2 and a^2 + 4b < 0
    :raises PreconditionError: If k >= 3 and a coefficient is <= 0
    """
    ensure_index(n_max, "n_max", minimum=1)
    ensure_digits(digits)
    coefficients = spec.coefficients
    if spec.k == 2:
        a, b = coefficients
        target = phi(a, b, digits)
        error_of = _phi_error(a, b, digits)
        guaranteed = _quadratic_dominates(a, b)
    elif spec.k == 1:
        target = fixed_from_rational(coefficients[0], digits)
        error_of = _rational_error(coefficients[0], digits)
        guaranteed = coefficients[0] != 0
    else:
        precise = dominant_root_k(coefficients, digits + Precision.GUARD_DIGITS)
        target = precise.rescale(digits)
        error_of = _rational_error(precise.to_rational(), digits)
        guaranteed = True

    rows = []
    for n, value in enumerate(ratios(spec, n_max), start=1):
        if value is None:
            rows.append(ConvergenceRow(n, None, None, None))
        else:
            rows.append(ConvergenceRow(n, value, fixed_from_rational(value, digits), error_of(value)))
    logger.debug("ratio_convergence_table: %d rows for %s", len(rows), spec)
    return ConvergenceReport(
        kind="ratio",
        rows=tuple(rows),
        target=target,
        digits=digits,
        start=1,
        convergence_guaranteed=guaranteed,
        params={
            "coeffs": format_rational_list(coefficients),
            "seeds": format_rational_list(spec.seeds),
            "n_max": n_max,
            "digits": digits,
        },
    )


def cf_convergence_table(
    a: RationalLike, b: RationalLike, max_depth: int, digits: int
) -> ConvergenceReport:
    """
    Table of continued fraction convergents for depths 0..max_depth.

    :param a: Partial denominator
    :param b: Partial numerator
    :param max_depth: Deepest convergent, >= 0
    :param digits: Decimal places of the decimal and error columns
    :return: ConvergenceReport with kind "cf"
    :raises DomainError: If a^2 + 4b < 0 or a convergent divides by zero
    """
    ensure_index(max_depth, "max_depth")
    ensure_digits(digits)
    a = to_rational(a)
    b = to_rational(b)
    target = phi(a, b, digits)
    error_of = _phi_error(a, b, digits)
    base = ContinuedFractionSpec(a, b, 0)
    rows = []
    for depth in range(max_depth + 1):
        value = cf_convergent(base.deeper(depth))
        rows.append(
            ConvergenceRow(depth, value, fixed_from_rational(value, digits), error_of(value))
        )
    return ConvergenceReport(
        kind="cf",
        rows=tuple(rows),
        target=target,
        digits=digits,
        start=0,
        convergence_guaranteed=_quadratic_dominates(a, b),
        params={
            "a": format_rational(a),
            "b": format_rational(b),
            "max_depth": max_depth,
            "digits": digits,
        },
    )


def radical_convergence_table(
    a: RationalLike, b: RationalLike, steps: int, digits: int
) -> ConvergenceReport:
    """
    Table of truncated nested radical iterates x_0..x_steps.

    Iterates are computed at `digits` places, the same precision as the
    error column.

    :param a: Coefficient inside the radical, >= 0
    :param b: Constant inside the radical, >= 0
    :param steps: Last iterate index, >= 0
    :param digits: Decimal places
    :return: ConvergenceReport with kind "radical"
    :raises PreconditionError: If a or b is negative, or both are zero
    """
    ensure_index(steps, "steps")
    ensure_digits(digits)
    a = to_rational(a)
    b = to_rational(b)
    states = iter_radical(a, b, digits)
    error_of = _phi_error(a, b, digits)
    rows = []
    for state in states:
        x = state.iterate
        rows.append(ConvergenceRow(state.step, x, x, error_of(x.to_rational())))
        if state.step == steps:
            break
    return ConvergenceReport(
        kind="radical",
        rows=tuple(rows),
        target=phi(a, b, digits),
        digits=digits,
        start=0,
        convergence_guaranteed=b > 0,
        params={"a": format_rational(a), "b": format_rational(b), "steps": steps, "digits": digits},
    )


def oscillation_signs(spec: RecurrenceSpec, n_max: int) -> List[Optional[int]]:
    """
    Exact sign of F_n / F_{n-1} - phi(a, b) for n = 1..n_max.

    :param spec: Two-term recurrence
    :param n_max: Last ratio index, >= 1
    :return: -1, 0 or 1 per row, None where the ratio is undefined
    :raises PreconditionError: If the recurrence is not two-term
    :raises DomainError: If a^2 + 4b < 0
    """
    ensure_index(n_max, "n_max", minimum=1)
    if spec.k != 2:
        raise PreconditionError(f"oscillation_signs needs a two-term recurrence, got k={spec.k}")
    a, b = spec.coefficients
    return [None if r is None else compare_to_phi(r, a, b) for r in ratios(spec, n_max)]
