"""
Recurrence Evaluation

Exact forward iteration of a RecurrenceSpec.
"""

from collections import deque
from fractions import Fraction
from itertools import islice
from typing import Iterator, List, Optional

from picophi.core.exceptions import DomainError
from picophi.sequences.spec import RecurrenceSpec
from picophi.utils.validation import ensure_index


def iter_terms(spec: RecurrenceSpec) -> Iterator[Fraction]:
    """
    Yield F_0, F_1, F_2, ... without end.

    :param spec: Recurrence to evaluate
    :yield: Exact terms
    """
    yield from spec.seeds
    # window holds F_{n-1}, F_{n-2}, ..., F_{n-k}
    window = deque(reversed(spec.seeds), maxlen=spec.k)
    while True:
        value = sum((a * f for a, f in zip(spec.coefficients, window)), Fraction(0))
        window.appendleft(value)
        yield value


def terms(spec: RecurrenceSpec, n_max: int) -> List[Fraction]:
    """
    Return [F_0, ..., F_{n_max}] in a single pass.

    :param spec: Recurrence to evaluate
    :param n_max: Last index, >= 0
    :return: List of n_max + 1 exact terms
    """
    ensure_index(n_max, "n_max")
    return list(islice(iter_terms(spec), n_max + 1))


def term(spec: RecurrenceSpec, n: int) -> Fraction:
    """
    Return F_n by forward iteration.

    :param spec: Recurrence to evaluate
    :param n: Index, >= 0
    :return: Exact term
    """
    ensure_index(n)
    return next(islice(iter_terms(spec), n, None))


def ratio(spec: RecurrenceSpec, n: int) -> Fraction:
    """
    Return F_n / F_{n-1} exactly.

    :param spec: Recurrence to evaluate
    :param n: Index, >= 1
    :return: Exact ratio
    :raises DomainError: If F_{n-1} is zero
    """
    ensure_index(n, minimum=1)
    previous, current = terms(spec, n)[-2:]
    if previous == 0:
        raise DomainError(f"Ratio F_{n}/F_{n - 1} is undefined: F_{n - 1} = 0")
    return current / previous


def ratios(spec: RecurrenceSpec, n_max: int) -> List[Optional[Fraction]]:
    """
    Return [F_1/F_0, ..., F_{n_max}/F_{n_max-1}], with None where undefined.

    :param spec: Recurrence to evaluate
    :param n_max: Last index, >= 1
    :return: List of n_max entries (Fraction or None)
    """
    ensure_index(n_max, "n_max", minimum=1)
    values = terms(spec, n_max)
    return [
        (current / previous) if previous != 0 else None
        for previous, current in zip(values, values[1:])
    ]
