"""
Continued Fractions, Nested Radicals and Convergence Tables
"""

from picophi.expansions.continued_fraction import (
    ContinuedFractionSpec,
    cf_convergent,
    cf_equals_ratio,
    cf_substitution,
    check_substitution_identity,
)
from picophi.expansions.radical import (
    RadicalIterationState,
    iter_radical,
    radical_converged,
    radical_iterate,
)
from picophi.expansions.report import ConvergenceReport, ConvergenceRow
from picophi.expansions.tables import (
    cf_convergence_table,
    oscillation_signs,
    radical_convergence_table,
    ratio_convergence_table,
)

__all__ = [
    "ContinuedFractionSpec",
    "cf_convergent",
    "cf_equals_ratio",
    "cf_substitution",
    "check_substitution_identity",
    "RadicalIterationState",
    "iter_radical",
    "radical_iterate",
    "radical_converged",
    "ConvergenceRow",
    "ConvergenceReport",
    "ratio_convergence_table",
    "cf_convergence_table",
    "radical_convergence_table",
    "oscillation_signs",
]
