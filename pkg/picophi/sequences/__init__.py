"""
Generalized Fibonacci Sequences
"""

from picophi.sequences.identities import (
    brute_force_even_sums,
    check_even_sum_identity,
    check_odd_sum_identity,
    check_telescoping_identity,
)
from picophi.sequences.matrix import companion_matrix, mat_pow, term_fast
from picophi.sequences.recurrence import iter_terms, ratio, ratios, term, terms
from picophi.sequences.spec import RecurrenceSpec

__all__ = [
    "RecurrenceSpec",
    "iter_terms",
    "term",
    "terms",
    "ratio",
    "ratios",
    "term_fast",
    "companion_matrix",
    "mat_pow",
    "check_odd_sum_identity",
    "check_even_sum_identity",
    "check_telescoping_identity",
    "brute_force_even_sums",
]
