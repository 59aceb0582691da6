"""
Nested Radicals

Truncations of sqrt(b + a sqrt(b + a sqrt(b + ...))) by fixed-point
iteration of x -> sqrt(b + a x), started from x_0 = sqrt(b). Each step
evaluates its radicand from the truncated previous iterate, so iterates
are non-decreasing and never exceed phi(a, b) for a, b >= 0.
"""

import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterator, Optional, Tuple

from picophi.core.exceptions import ConvergenceError, PreconditionError
from picophi.core.types import FixedReal, RationalLike
from picophi.core.value import UlpValue
from picophi.numerics.fixed_point import sqrt_fixed
from picophi.roots.quadratic import phi
from picophi.utils.conversion import format_rational, to_rational
from picophi.utils.validation import ensure_digits, ensure_index
from picophi.values import Precision, StepLimits, ToleranceUlps

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RadicalIterationState:
    """
    One iterate of x -> sqrt(b + a x) at a fixed precision.

    step counts applications of the map; step 0 is x_0 = sqrt(b).
    """

    a: Fraction
    b: Fraction
    iterate: FixedReal
    step: int
    digits: int

    def __post_init__(self):
        if self.iterate.mantissa < 0:
            raise ValueError(f"Radical iterate must be >= 0, got {self.iterate}")
        if self.iterate.digits != self.digits:
            raise ValueError(
                f"Iterate has {self.iterate.digits} digits, state expects {self.digits}"
            )

    @classmethod
    def start(cls, a: RationalLike, b: RationalLike, digits: int) -> "RadicalIterationState":
        """
        Initial state x_0 = sqrt(b).

        :raises PreconditionError: If a or b is negative, or both are zero
        """
        ensure_digits(digits)
        a = to_rational(a)
        b = to_rational(b)
        if a < 0 or b < 0:
            raise PreconditionError(
                f"nested radicals need a >= 0 and b >= 0, got a={format_rational(a)}, "
                f"b={format_rational(b)}"
            )
        if a == 0 and b == 0:
            raise PreconditionError("nested radicals need a and b not both 0")
        return cls(a, b, sqrt_fixed(b, digits), 0, digits)

    def advance(self) -> "RadicalIterationState":
        """Apply x -> sqrt(b + a x) once."""
        radicand = self.b + self.a * self.iterate.to_rational()
        return replace(self, iterate=sqrt_fixed(radicand, self.digits), step=self.step + 1)


def iter_radical(a: RationalLike, b: RationalLike, digits: int) -> Iterator[RadicalIterationState]:
    """
    Yield x_0, x_1, x_2, ... without end.

    :param a: Coefficient inside the radical, >= 0
    :param b: Constant inside the radical, >= 0
    :param digits: Decimal places
    :yield: RadicalIterationState per step
    """
    state = RadicalIterationState.start(a, b, digits)
    while True:
        yield state
        state = state.advance()


def radical_iterate(a: RationalLike, b: RationalLike, steps: int, digits: int) -> FixedReal:
    """
    Return x_steps, the depth-`steps` truncated nested radical.

    :param a: Coefficient inside the radical, >= 0
    :param b: Constant inside the radical, >= 0
    :param steps: Number of map applications, >= 0
    :param digits: Decimal places
    :return: FixedReal iterate
    :raises PreconditionError: If a or b is negative, or both are zero
    """
    ensure_index(steps, "steps")
    state = RadicalIterationState.start(a, b, digits)
    for _ in range(steps):
        state = state.advance()
    return state.iterate


def default_step_cap(digits: int) -> int:
    return StepLimits.RADICAL_BASE + StepLimits.RADICAL_PER_DIGIT * digits


def radical_converged(
    a: RationalLike,
    b: RationalLike,
    digits: int,
    max_steps: Optional[int] = None,
) -> Tuple[FixedReal, int]:
    """
    Iterate the nested radical until it stabilizes.

    Iterates run at digits + GUARD_DIGITS places, or more when b is too
    small for sqrt(b) to show at that scale, and stop once two successive
    iterates differ by at most 2 ulp at the working scale. The final
    iterate is truncated to `digits` and cross-checked against phi(a, b).
    a = 0 needs no nesting: sqrt(b) is returned after one step.

    :param a: Coefficient inside the radical, >= 0
    :param b: Constant inside the radical, >= 0
    :param digits: Decimal places of the result
    :param max_steps: Step cap; defaults to 10 + 4 * working digits
    :return: (value, steps_taken)
    :raises PreconditionError: If a or b is negative, or both are zero
    :raises ConvergenceError: If the cap is reached or the cross-check fails
    """
    ensure_digits(digits)
    a = to_rational(a)
    b = to_rational(b)
    if a == 0:
        return RadicalIterationState.start(a, b, digits).advance().iterate, 1

    working = digits + Precision.GUARD_DIGITS
    # x_0 = sqrt(b) must not truncate to 0, or every later iterate does too
    while 0 < b * 10 ** (2 * working) < 1:
        working += 1
    cap = default_step_cap(working) if max_steps is None else ensure_index(max_steps, "max_steps", 1)
    state = RadicalIterationState.start(a, b, working)
    if b == 0:
        raise ConvergenceError(
            f"with b = 0 every truncated radical collapses to 0 and never reaches "
            f"phi({format_rational(a)}, 0) = {format_rational(a)}",
            iterates=(state.iterate, state.iterate),
            steps=0,
        )

    previous = state
    while state.step < cap:
        previous, state = state, state.advance()
        if UlpValue.is_within_ulps(state.iterate, previous.iterate, ToleranceUlps.SUCCESSIVE):
            break
    else:
        raise ConvergenceError(
            f"nested radical did not stabilize within {cap} steps",
            iterates=(previous.iterate, state.iterate),
            steps=state.step,
        )
    logger.debug("radical_converged: %d steps at %d working digits", state.step, working)

    value = state.iterate.rescale(digits)
    target = phi(a, b, digits)
    if not UlpValue.is_within_ulps(value, target, ToleranceUlps.RADICAL):
        raise ConvergenceError(
            f"nested radical {value} disagrees with phi = {target} by more than "
            f"{ToleranceUlps.RADICAL} ulp",
            iterates=(previous.iterate, state.iterate),
            steps=state.step,
        )
    return value, state.step
