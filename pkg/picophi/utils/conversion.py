"""
Rational Literal Conversion Utilities

This module converts between the "p/q" | "p" literal format used on the
command line and in reports, and exact Fraction values. Decimal literals
are rejected so no input is ever silently inexact.
"""

import re
from fractions import Fraction
from typing import List, Sequence

from picophi.core.types import RationalLike

_RATIONAL_LITERAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def to_rational(value: RationalLike) -> Fraction:
    """
    Convert an int, Fraction or literal string to a Fraction.

    :param value: int, Fraction, or "p/q" | "p" string
    :return: Reduced Fraction
    :raises TypeError: For floats, bools and other types
    :raises ValueError: For malformed literals or a zero denominator
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a rational value")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(
        f"Expected int, Fraction or 'p/q' string, got {type(value).__name__}"
    )


def parse_rational(text: str) -> Fraction:
    """
    Parse a "p/q" or "p" literal.

    :param text: Literal such as "3", "-7/2" or "+1/3"
    :return: Reduced Fraction
    :raises ValueError: If the literal is malformed or q is zero
    """
    match = _RATIONAL_LITERAL.match(text)
    if match is None:
        raise ValueError(f"Invalid rational literal {text!r}: expected 'p/q' or 'p'")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ValueError(f"Invalid rational literal {text!r}: zero denominator")
    return Fraction(numerator, denominator)


def parse_rational_list(text: str) -> List[Fraction]:
    """
    Parse a comma-separated list of rational literals.

    :param text: List such as "1,1,1" or "1/2, 3"
    :return: List of Fractions
    :raises ValueError: If the list is empty or any literal is malformed
    """
    parts = text.split(",")
    if not text.strip() or any(not part.strip() for part in parts):
        raise ValueError(f"Invalid rational list {text!r}: empty entry")
    return [parse_rational(part) for part in parts]


def format_rational(value: Fraction) -> str:
    """
    Render a rational as "p/q", or "p" when q == 1.

    :param value: Fraction (or int)
    :return: Literal string
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_rational_list(values: Sequence[Fraction], separator: str = ",") -> str:
    """
    Render a list of rationals.

    :param values: Fractions to render
    :param separator: String between entries
    :return: Joined literals
    """
    return separator.join(format_rational(value) for value in values)
