"""
Recurrence Definitions

A RecurrenceSpec fixes the coefficients a_1..a_k and the seeds
F_0..F_{k-1} of the linear recurrence

    F_n = a_1 F_{n-1} + a_2 F_{n-2} + ... + a_k F_{n-k}    (n >= k)

The classic Fibonacci numbers use coefficients (1, 1) and seeds (1, 1),
so F_0 = F_1 = 1 rather than the 0, 1 convention.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Tuple

from picophi.core.types import RationalLike
from picophi.utils.conversion import format_rational_list, to_rational


@dataclass(frozen=True)
class RecurrenceSpec:
    """
    Coefficients and seeds of a k-term linear recurrence.

    Both are stored as tuples of Fractions of equal length k >= 1.
    """

    coefficients: Tuple[Fraction, ...]
    seeds: Tuple[Fraction, ...]

    def __post_init__(self):
        coefficients = tuple(to_rational(c) for c in self.coefficients)
        seeds = tuple(to_rational(s) for s in self.seeds)
        if not coefficients:
            raise ValueError("A recurrence needs at least one coefficient (k >= 1)")
        if len(seeds) != len(coefficients):
            raise ValueError(
                f"Expected {len(coefficients)} seeds for k={len(coefficients)}, got {len(seeds)}"
            )
        object.__setattr__(self, "coefficients", coefficients)
        object.__setattr__(self, "seeds", seeds)

    @classmethod
    def classic(cls) -> "RecurrenceSpec":
        """Fibonacci numbers with F_0 = F_1 = 1."""
        return cls((1, 1), (1, 1))

    @classmethod
    def from_pair(
        cls,
        a: RationalLike,
        b: RationalLike,
        seeds: Optional[Iterable[RationalLike]] = None,
    ) -> "RecurrenceSpec":
        """
        Two-term recurrence F_n = a F_{n-1} + b F_{n-2}.

        :param a: First coefficient
        :param b: Second coefficient
        :param seeds: (F_0, F_1); defaults to (1, a)
        :return: RecurrenceSpec instance
        """
        a = to_rational(a)
        b = to_rational(b)
        if seeds is None:
            seeds = (1, a)
        return cls((a, b), tuple(seeds))

    @classmethod
    def all_ones(cls, k: int) -> "RecurrenceSpec":
        """
        k-term recurrence with every coefficient and seed equal to 1.

        :param k: Number of terms (k=2 is the classic spec, k=3 tribonacci-like)
        :return: RecurrenceSpec instance
        """
        return cls((1,) * k, (1,) * k)

    @property
    def k(self) -> int:
        """Number of terms in the recurrence."""
        return len(self.coefficients)

    @property
    def has_default_seeds(self) -> bool:
        """True for a two-term spec seeded with (1, a)."""
        return self.k == 2 and self.seeds == (Fraction(1), self.coefficients[0])

    def __str__(self) -> str:
        return (
            f"RecurrenceSpec(coefficients=[{format_rational_list(self.coefficients)}], "
            f"seeds=[{format_rational_list(self.seeds)}])"
        )
