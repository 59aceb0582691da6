"""
Exact Rational Arithmetic

Thin, domain-checked wrappers over Fraction. Results are always stored
reduced with a positive denominator.
"""

from fractions import Fraction
from typing import Callable, Dict

from picophi.core.exceptions import DomainError
from picophi.core.types import RationalLike
from picophi.utils.conversion import to_rational


def add(x: RationalLike, y: RationalLike) -> Fraction:
    """Exact x + y."""
    return to_rational(x) + to_rational(y)


def sub(x: RationalLike, y: RationalLike) -> Fraction:
    """Exact x - y."""
    return to_rational(x) - to_rational(y)


def mul(x: RationalLike, y: RationalLike) -> Fraction:
    """Exact x * y."""
    return to_rational(x) * to_rational(y)


def div(x: RationalLike, y: RationalLike) -> Fraction:
    """
    Exact x / y.

    :raises DomainError: If y is zero
    """
    divisor = to_rational(y)
    if divisor == 0:
        raise DomainError(f"Division by zero: {x} / 0")
    return to_rational(x) / divisor


_OPERATIONS: Dict[str, Callable[[RationalLike, RationalLike], Fraction]] = {
    "add": add,
    "sub": sub,
    "mul": mul,
    "div": div,
    "+": add,
    "-": sub,
    "*": mul,
    "/": div,
}


def rational_arith(op: str, x: RationalLike, y: RationalLike) -> Fraction:
    """
    Apply one of add | sub | mul | div exactly.

    :param op: Operation name ("add", "sub", "mul", "div") or symbol
    :param x: Left operand
    :param y: Right operand
    :return: Reduced Fraction
    :raises ValueError: For an unknown operation
    :raises DomainError: For division by zero
    """
    try:
        operation = _OPERATIONS[op]
    except KeyError:
        raise ValueError(f"Unknown rational operation {op!r}") from None
    return operation(x, y)


def sign(x: RationalLike) -> int:
    """Sign of x as -1, 0 or 1."""
    value = to_rational(x)
    return (value > 0) - (value < 0)
