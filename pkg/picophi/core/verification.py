"""
Verification Result

Identity checks return a Verification instead of a bare boolean so the
CLI and the tests can report both evaluated sides as evidence.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional


@dataclass(frozen=True)
class Verification:
    """
    Outcome of an identity check.

    Example:
        >>> str(check_odd_sum_identity(5))
        'holds: 8 = 1+2+5'
    """

    identity: str
    holds: bool
    lhs: str
    rhs: str
    tolerance_ulps: Optional[int] = None  # None for exact comparisons
    digits: Optional[int] = None
    detail: str = ""
    params: Dict[str, Any] = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "holds" if self.holds else "fails"

    @property
    def exact(self) -> bool:
        return self.tolerance_ulps is None

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready representation with a stable key order."""
        return {
            "identity": self.identity,
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "exact": self.exact,
            "tolerance_ulps": self.tolerance_ulps,
            "digits": self.digits,
            "detail": self.detail,
        }

    def __bool__(self) -> bool:
        return self.holds

    def __str__(self) -> str:
        relation = "=" if self.holds else "!="
        text = f"{self.status}: {self.lhs} {relation} {self.rhs}"
        if self.tolerance_ulps is not None:
            text += f" (tolerance {self.tolerance_ulps} ulp at {self.digits} digits)"
        if self.detail:
            text += f"; {self.detail}"
        return text
