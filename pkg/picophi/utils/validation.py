"""
Parameter Validation

This module provides functions to validate indices, counts and
precisions before they reach the arithmetic.
"""

from picophi.core.exceptions import PreconditionError
from picophi.values import Precision


def validate_digits(digits: int) -> bool:
    """
    Validate a decimal precision.

    :param digits: Number of decimal places
    :return: True if valid (0-Precision.MAX_DIGITS)
    """
    return _is_int(digits) and 0 <= digits <= Precision.MAX_DIGITS


def validate_index(n: int, minimum: int = 0) -> bool:
    """
    Validate a sequence index or a count.

    :param n: Index to validate
    :param minimum: Smallest admissible value
    :return: True if n is an int >= minimum
    """
    return _is_int(n) and n >= minimum


def ensure_digits(digits: int) -> int:
    """
    Validate a decimal precision, raising on failure.

    :param digits: Number of decimal places
    :return: digits, unchanged
    :raises PreconditionError: If digits is out of range
    """
    if not validate_digits(digits):
        raise PreconditionError(
            f"digits must be an int in 0-{Precision.MAX_DIGITS}, got {digits!r}"
        )
    return digits


def ensure_index(n: int, name: str = "n", minimum: int = 0) -> int:
    """
    Validate an index or count, raising on failure.

    :param n: Index to validate
    :param name: Parameter name used in the error message
    :param minimum: Smallest admissible value
    :return: n, unchanged
    :raises PreconditionError: If n is not an int >= minimum
    """
    if not validate_index(n, minimum):
        raise PreconditionError(f"{name} must be an int >= {minimum}, got {n!r}")
    return n


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)
