"""
Convergence Report

Rows of (index, exact value, decimal rendering, absolute error) produced by
the convergence tables, plus the verdicts derived from the error column.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple, Union

from picophi.core.types import FixedReal
from picophi.utils.conversion import format_rational

RowValue = Union[Fraction, FixedReal]

UNDEFINED = "undefined"


@dataclass(frozen=True)
class ConvergenceRow:
    """One row of a convergence table; value is None where undefined."""

    index: int
    value: Optional[RowValue]
    decimal: Optional[FixedReal]
    error: Optional[FixedReal]

    @property
    def defined(self) -> bool:
        return self.value is not None

    @property
    def value_exact(self) -> str:
        if self.value is None:
            return UNDEFINED
        if isinstance(self.value, FixedReal):
            return str(self.value)
        return format_rational(self.value)

    @property
    def value_decimal(self) -> str:
        return UNDEFINED if self.decimal is None else str(self.decimal)

    @property
    def abs_error(self) -> str:
        return UNDEFINED if self.error is None else str(self.error)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "index": self.index,
            "value_exact": self.value_exact,
            "value_decimal": self.value_decimal,
            "abs_error": self.abs_error,
        }


@dataclass(frozen=True)
class ConvergenceReport:
    """
    Convergence table against a target value.

    - rows are indexed consecutively from `start`
    - each error is |value - target| truncated to `digits` places
    - convergence_guaranteed is the a-priori verdict (dominant root exists)
    - eventually_decreasing is the empirical verdict from the error column
    """

    kind: str
    rows: Tuple[ConvergenceRow, ...]
    target: FixedReal
    digits: int
    start: int
    convergence_guaranteed: bool
    params: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        for offset, row in enumerate(self.rows):
            if row.index != self.start + offset:
                raise ValueError(
                    f"Rows must be consecutive from {self.start}: "
                    f"expected {self.start + offset}, got {row.index}"
                )

    @property
    def defined_rows(self) -> List[ConvergenceRow]:
        return [row for row in self.rows if row.error is not None]

    @property
    def decreasing_from(self) -> Optional[int]:
        """
        First row index from which the error column is non-increasing to the end.

        Undefined rows are skipped. None when fewer than two rows are defined.
        """
        defined = self.defined_rows
        if len(defined) < 2:
            return None
        position = len(defined) - 1
        while position > 0 and defined[position - 1].error >= defined[position].error:
            position -= 1
        return defined[position].index

    @property
    def eventually_decreasing(self) -> bool:
        """True when the non-increasing tail starts in the first half of the defined rows."""
        start = self.decreasing_from
        if start is None:
            return False
        defined = self.defined_rows
        position = next(i for i, row in enumerate(defined) if row.index == start)
        return position <= (len(defined) - 1) // 2

    @property
    def final_error(self) -> Optional[FixedReal]:
        defined = self.defined_rows
        return defined[-1].error if defined else None

    def first_index_within(self, tolerance: Fraction) -> Optional[int]:
        """
        First row whose error is at most `tolerance`.

        :param tolerance: Absolute tolerance
        :return: Row index or None
        """
        for row in self.defined_rows:
            if row.error.to_rational() <= tolerance:
                return row.index
        return None

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready representation with a stable key order."""
        return {
            "kind": self.kind,
            "params": dict(self.params),
            "target": str(self.target),
            "digits": self.digits,
            "convergence_guaranteed": self.convergence_guaranteed,
            "eventually_decreasing": self.eventually_decreasing,
            "decreasing_from": self.decreasing_from,
            "rows": [row.to_dict() for row in self.rows],
        }
