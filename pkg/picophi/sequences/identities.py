"""
Fibonacci Summation Identities

Exact checks of summation identities for the classic sequence
(F_0 = F_1 = 1):

- odd N:  F_N = F_0 + F_2 + F_4 + ... + F_{N-1}
- even N: F_N = F_0 + F_1 + F_3 + ... + F_{N-1}
- N >= 2: F_N - F_{N-1} = F_{N-2}

The even-index closed form is only trusted because
brute_force_even_sums() confirms it; the test suite runs that oracle
before exercising check_even_sum_identity().
"""

from fractions import Fraction
from typing import List, Sequence

from picophi.core.exceptions import PreconditionError
from picophi.core.verification import Verification
from picophi.sequences.matrix import term_fast
from picophi.sequences.recurrence import iter_terms, terms
from picophi.sequences.spec import RecurrenceSpec
from picophi.utils.conversion import format_rational
from picophi.utils.validation import ensure_index

_CLASSIC = RecurrenceSpec.classic()


def _format_sum(values: Sequence[Fraction]) -> str:
    return "+".join(format_rational(v) for v in values)


def check_odd_sum_identity(N: int) -> Verification:
    """
    Verify F_N = F_0 + F_2 + ... + F_{N-1} for odd N.

    F_N comes from the companion matrix path and the sum from a separate
    forward pass, so the two sides are evaluated independently.

    :param N: Odd index >= 1
    :return: Verification carrying both sides
    :raises PreconditionError: If N is even or below 1
    """
    ensure_index(N, "N", minimum=1)
    if N % 2 == 0:
        raise PreconditionError(
            f"N={N} is even; use check_even_sum_identity for even N"
        )
    lhs = term_fast(_CLASSIC, N)
    summands = terms(_CLASSIC, N - 1)[0::2]
    rhs = sum(summands, Fraction(0))
    return Verification(
        identity="odd-sum",
        holds=lhs == rhs,
        lhs=format_rational(lhs),
        rhs=_format_sum(summands),
        params={"N": N},
    )


def check_even_sum_identity(N: int) -> Verification:
    """
    Verify F_N = F_0 + F_1 + F_3 + ... + F_{N-1} for even N.

    :param N: Even index >= 2
    :return: Verification carrying both sides
    :raises PreconditionError: If N is odd or below 2
    """
    ensure_index(N, "N", minimum=2)
    if N % 2 == 1:
        raise PreconditionError(
            f"N={N} is odd; use check_odd_sum_identity for odd N"
        )
    lhs = term_fast(_CLASSIC, N)
    values = terms(_CLASSIC, N - 1)
    summands = [values[0]] + values[1::2]
    rhs = sum(summands, Fraction(0))
    return Verification(
        identity="even-sum",
        holds=lhs == rhs,
        lhs=format_rational(lhs),
        rhs=_format_sum(summands),
        params={"N": N},
    )


def check_telescoping_identity(N: int) -> Verification:
    """
    Verify F_N - F_{N-1} = F_{N-2}.

    :param N: Index >= 2
    :return: Verification carrying both sides
    """
    ensure_index(N, "N", minimum=2)
    two_back, one_back, current = terms(_CLASSIC, N)[-3:]
    lhs = current - one_back
    return Verification(
        identity="telescoping",
        holds=lhs == two_back,
        lhs=f"{format_rational(current)}-{format_rational(one_back)}",
        rhs=format_rational(two_back),
        params={"N": N},
    )


def brute_force_even_sums(n_max: int) -> List[int]:
    """
    Oracle for the even-index identity.

    Keeps running sums of F_0 and the odd-index terms while walking the
    sequence once, and compares against each even-index term.

    :param n_max: Largest N to test
    :return: Even N <= n_max for which the identity fails (empty when confirmed)
    """
    ensure_index(n_max, "n_max")
    failures = []
    running = Fraction(0)
    for n, value in enumerate(iter_terms(_CLASSIC)):
        if n > n_max:
            break
        if n >= 2 and n % 2 == 0 and value != running:
            failures.append(n)
        if n == 0 or n % 2 == 1:
            running += value
    return failures
