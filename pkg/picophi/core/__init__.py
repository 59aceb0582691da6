"""
Core Value Types and Errors
"""

from picophi.core.exceptions import (
    ConvergenceError,
    DomainError,
    PicoPhiError,
    PreconditionError,
)
from picophi.core.types import FixedReal, Rational, RationalLike
from picophi.core.value import UlpValue
from picophi.core.verification import Verification

__all__ = [
    "FixedReal",
    "Rational",
    "RationalLike",
    "UlpValue",
    "Verification",
    "PicoPhiError",
    "DomainError",
    "PreconditionError",
    "ConvergenceError",
]
