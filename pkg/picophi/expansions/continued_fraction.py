"""
Periodic Continued Fractions

Finite truncations of a + b/(a + b/(a + ...)), evaluated bottom-up in exact
arithmetic. The depth-d convergent equals F_{d+1}(a, b) / F_d(a, b) for the
default-seeded recurrence, which cf_equals_ratio() checks exactly.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from picophi.core.exceptions import DomainError, PreconditionError
from picophi.core.types import RationalLike
from picophi.core.value import UlpValue
from picophi.core.verification import Verification
from picophi.numerics.fixed_point import fixed_from_rational
from picophi.roots.identities import guard_digits
from picophi.roots.quadratic import phi
from picophi.sequences.recurrence import terms
from picophi.sequences.spec import RecurrenceSpec
from picophi.utils.conversion import format_rational, to_rational
from picophi.utils.validation import ensure_digits, ensure_index
from picophi.values import ToleranceUlps


@dataclass(frozen=True)
class ContinuedFractionSpec:
    """
    a + b/(a + b/(... + b/a)) with `depth` partial fractions.

    depth 0 is the bare leading term a. The golden case is a = b = 1.
    """

    a: Fraction
    b: Fraction
    depth: int

    def __post_init__(self):
        object.__setattr__(self, "a", to_rational(self.a))
        object.__setattr__(self, "b", to_rational(self.b))
        if isinstance(self.depth, bool) or not isinstance(self.depth, int) or self.depth < 0:
            raise ValueError(f"Continued fraction depth must be an int >= 0, got {self.depth!r}")

    def deeper(self, depth: int) -> "ContinuedFractionSpec":
        return ContinuedFractionSpec(self.a, self.b, depth)


def cf_substitution(a: RationalLike, b: RationalLike, layers: int, tail: RationalLike) -> Fraction:
    """
    Evaluate a + b/(a + b/(... + b/tail)) with `layers` layers of "a + b/".

    Layer 1 is the innermost division (by the tail itself).

    :param a: Partial denominator
    :param b: Partial numerator
    :param layers: Number of "a + b/" layers, >= 0 (0 returns the tail)
    :param tail: Innermost value
    :return: Exact value
    :raises DomainError: If a level divides by zero; `level` carries the layer
    """
    ensure_index(layers, "layers")
    a = to_rational(a)
    b = to_rational(b)
    value = to_rational(tail)
    for level in range(1, layers + 1):
        if value == 0:
            raise DomainError(
                f"Continued fraction divides by zero at level {level} "
                f"(a={format_rational(a)}, b={format_rational(b)})",
                level=level,
            )
        value = a + b / value
    return value


def cf_convergent(spec: ContinuedFractionSpec) -> Fraction:
    """
    Exact value of the depth-d finite continued fraction.

    :param spec: Continued fraction to evaluate
    :return: Exact convergent
    :raises DomainError: If an intermediate denominator is zero
    """
    return cf_substitution(spec.a, spec.b, spec.depth, spec.a)


def cf_equals_ratio(
    spec: ContinuedFractionSpec, sequence: Optional[RecurrenceSpec] = None
) -> Verification:
    """
    Verify cf_convergent(depth d) = F_{d+1}(a, b) / F_d(a, b) exactly.

    :param spec: Continued fraction (a, b, d)
    :param sequence: Default-seeded recurrence with the same (a, b); built when omitted
    :return: Exact Verification
    :raises PreconditionError: If the recurrence does not match (a, b) with seeds (1, a)
    """
    if sequence is None:
        sequence = RecurrenceSpec.from_pair(spec.a, spec.b)
    if sequence.coefficients != (spec.a, spec.b) or not sequence.has_default_seeds:
        raise PreconditionError(
            f"{sequence} does not match the continued fraction "
            f"(a={format_rational(spec.a)}, b={format_rational(spec.b)}) with seeds (1, a)"
        )
    params = {"a": format_rational(spec.a), "b": format_rational(spec.b), "depth": spec.depth}
    previous, current = terms(sequence, spec.depth + 1)[-2:]
    try:
        lhs = cf_convergent(spec)
    except DomainError as error:
        lhs_text, lhs = f"undefined (level {error.level})", None
    else:
        lhs_text = format_rational(lhs)
    if previous == 0:
        rhs, rhs_text = None, f"undefined (F_{spec.depth} = 0)"
    else:
        rhs = current / previous
        rhs_text = format_rational(rhs)
    return Verification(
        identity="cf-ratio",
        holds=lhs is not None and lhs == rhs,
        lhs=lhs_text,
        rhs=rhs_text,
        params=params,
    )


def check_substitution_identity(
    a: RationalLike, b: RationalLike, layers: int, digits: int
) -> Verification:
    """
    Verify phi = a + b/(a + b/(... + b/phi)) for a finite number of layers.

    Substituting phi = a + b/phi into itself leaves the value unchanged; this
    check evaluates the chain with the truncated phi as its tail.

    :param a: Partial denominator
    :param b: Partial numerator
    :param layers: Number of substitutions, >= 1
    :param digits: Decimal places for the comparison
    :return: Verification within 8 ulp
    :raises PreconditionError: If phi(a, b) is zero at the working precision
    :raises DomainError: If a^2 + 4b < 0 or a level divides by zero
    """
    ensure_index(layers, "layers", minimum=1)
    ensure_digits(digits)
    a = to_rational(a)
    b = to_rational(b)
    value = phi(a, b, digits)
    if value.is_zero():
        raise PreconditionError(
            "substitution identity requires phi(a, b) to be nonzero in the denominator"
        )
    approx = value.to_rational()
    # each layer multiplies the tail error by at most |b| / x^2 near the fixed point
    amplification = max(Fraction(1), abs(b) / (approx * approx)) ** layers
    working = digits + guard_digits(amplification)
    tail = phi(a, b, working).to_rational()
    rhs = fixed_from_rational(cf_substitution(a, b, layers, tail), digits)
    return Verification(
        identity="substitution",
        holds=UlpValue.is_within_ulps(value, rhs, ToleranceUlps.IDENTITY),
        lhs=str(value),
        rhs=str(rhs),
        tolerance_ulps=ToleranceUlps.IDENTITY,
        digits=digits,
        params={"a": format_rational(a), "b": format_rational(b), "layers": layers},
    )
