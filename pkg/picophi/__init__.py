"""
PicoPhi - exact generalized Fibonacci numbers and metallic ratios

PicoPhi provides:
- Generalized Fibonacci sequences F_n(a, b) and k-term recurrences
- The plus and minus roots of x^2 - a x - b to any number of digits
- Continued fraction convergents and truncated nested radicals
- Identity checks and convergence tables
- A command-line interface with text, JSON and CSV output
"""

__version__ = "0.1.0"

# Constants
from picophi.constant import Phi

# Core types and errors
from picophi.core.exceptions import (
    ConvergenceError,
    DomainError,
    PicoPhiError,
    PreconditionError,
)
from picophi.core.types import FixedReal, Rational
from picophi.core.verification import Verification

# Expansions
from picophi.expansions import (
    ContinuedFractionSpec,
    ConvergenceReport,
    ConvergenceRow,
    cf_convergence_table,
    cf_convergent,
    cf_equals_ratio,
    radical_convergence_table,
    radical_converged,
    radical_iterate,
    ratio_convergence_table,
)

# Numerics
from picophi.numerics import fixed_from_rational, isqrt, sqrt_fixed

# Roots
from picophi.roots import (
    QuadraticRoots,
    check_reciprocal_identity,
    check_sqrt_identity,
    dominant_root_k,
    minus_root,
    phi,
    quadratic_roots,
)

# Sequences
from picophi.sequences import (
    RecurrenceSpec,
    check_even_sum_identity,
    check_odd_sum_identity,
    ratio,
    term,
    term_fast,
    terms,
)

# Utilities
from picophi.utils import conversion, validation

__all__ = [
    # Constants
    "Phi",
    # Core
    "FixedReal",
    "Rational",
    "Verification",
    "PicoPhiError",
    "DomainError",
    "PreconditionError",
    "ConvergenceError",
    # Numerics
    "isqrt",
    "sqrt_fixed",
    "fixed_from_rational",
    # Sequences
    "RecurrenceSpec",
    "term",
    "terms",
    "term_fast",
    "ratio",
    "check_odd_sum_identity",
    "check_even_sum_identity",
    # Roots
    "phi",
    "minus_root",
    "quadratic_roots",
    "QuadraticRoots",
    "dominant_root_k",
    "check_reciprocal_identity",
    "check_sqrt_identity",
    # Expansions
    "ContinuedFractionSpec",
    "cf_convergent",
    "cf_equals_ratio",
    "radical_iterate",
    "radical_converged",
    "ConvergenceRow",
    "ConvergenceReport",
    "ratio_convergence_table",
    "cf_convergence_table",
    "radical_convergence_table",
    # Utilities
    "conversion",
    "validation",
]
