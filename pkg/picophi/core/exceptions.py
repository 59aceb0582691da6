"""
Error types

Every error raised by picophi derives from PicoPhiError. Domain and
precondition errors are also ValueErrors; convergence failures are
ArithmeticErrors.
"""

from typing import Optional, Tuple


class PicoPhiError(Exception):
    """Base class for picophi errors."""


class DomainError(PicoPhiError, ValueError):
    """
    An input lies outside the mathematical domain of an operation.

    Raised for square roots of negative numbers, negative discriminants,
    division by zero and undefined ratios.
    """

    def __init__(self, message: str, level: Optional[int] = None):
        """
        :param message: Human readable description
        :param level: Continued fraction level at which a zero denominator arose, if any
        """
        super().__init__(message)
        self.level = level


class PreconditionError(PicoPhiError, ValueError):
    """An operation was called outside its stated precondition."""


class ConvergenceError(PicoPhiError, ArithmeticError):
    """
    An iteration failed to stabilize or its result failed a cross-check.

    Carries the last two iterates so callers can report the evidence.
    """

    def __init__(self, message: str, iterates: Tuple[object, object], steps: int):
        """
        :param message: Human readable description
        :param iterates: (previous, last) iterates
        :param steps: Number of steps performed
        """
        super().__init__(message)
        self.iterates = iterates
        self.steps = steps
