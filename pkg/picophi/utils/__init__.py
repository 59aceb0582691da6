"""
Utility Functions

Rational literal conversion and argument validation. Report formatting
lives in picophi.utils.formatting and is imported on demand.
"""

from picophi.utils import conversion, validation

__all__ = [
    "conversion",
    "validation",
]
