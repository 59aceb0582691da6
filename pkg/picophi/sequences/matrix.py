"""
Companion Matrix Evaluation

F_n in O(log n) exact k x k matrix products. The state vector
S_n = (F_{n+k-1}, ..., F_{n+1}, F_n) advances by S_{n+1} = C S_n where C is
the companion matrix of the recurrence, so F_n is the last entry of C^n S_0.
"""

import logging
from fractions import Fraction
from typing import List, Sequence

from picophi.sequences.spec import RecurrenceSpec
from picophi.utils.validation import ensure_index

logger = logging.getLogger(__name__)

Matrix = List[List[Fraction]]


def companion_matrix(coefficients: Sequence[Fraction]) -> Matrix:
    """
    Companion matrix of F_n = a_1 F_{n-1} + ... + a_k F_{n-k}.

    First row holds a_1..a_k; the sub-diagonal holds ones.

    :param coefficients: a_1..a_k
    :return: k x k matrix
    """
    k = len(coefficients)
    matrix = [[Fraction(0)] * k for _ in range(k)]
    matrix[0] = [Fraction(c) for c in coefficients]
    for i in range(1, k):
        matrix[i][i - 1] = Fraction(1)
    return matrix


def identity_matrix(k: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(k)] for i in range(k)]


def mat_mul(x: Matrix, y: Matrix) -> Matrix:
    """Exact product of two square matrices."""
    columns = list(zip(*y))
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in columns] for row in x]


def mat_pow(matrix: Matrix, exponent: int) -> Matrix:
    """
    Matrix power by repeated squaring.

    :param matrix: Square matrix
    :param exponent: Non-negative power
    :return: matrix ** exponent
    """
    result = identity_matrix(len(matrix))
    base = matrix
    products = 0
    while exponent:
        if exponent & 1:
            result = mat_mul(result, base)
            products += 1
        exponent >>= 1
        if exponent:
            base = mat_mul(base, base)
            products += 1
    logger.debug("mat_pow: %d products for a %dx%d matrix", products, len(matrix), len(matrix))
    return result


def term_fast(spec: RecurrenceSpec, n: int) -> Fraction:
    """
    Return F_n via companion matrix exponentiation.

    Equal to term(spec, n) for every spec and n.

    :param spec: Recurrence to evaluate
    :param n: Index, >= 0
    :return: Exact term
    """
    ensure_index(n)
    if n < spec.k:
        return spec.seeds[n]
    state = list(reversed(spec.seeds))
    power = mat_pow(companion_matrix(spec.coefficients), n)
    last_row = power[-1]
    return sum((c * s for c, s in zip(last_row, state)), Fraction(0))
