"""
Metallic Ratios and Dominant Roots
"""

from picophi.roots.dominant import characteristic_sign, dominant_root_k
from picophi.roots.identities import (
    check_minus_root_relations,
    check_reciprocal_identity,
    check_sqrt_identity,
    guard_digits,
)
from picophi.roots.quadratic import (
    QuadraticRoots,
    compare_to_phi,
    discriminant,
    minus_root,
    phi,
    quadratic_roots,
)

__all__ = [
    "QuadraticRoots",
    "discriminant",
    "phi",
    "minus_root",
    "quadratic_roots",
    "compare_to_phi",
    "dominant_root_k",
    "characteristic_sign",
    "check_reciprocal_identity",
    "check_sqrt_identity",
    "check_minus_root_relations",
    "guard_digits",
]
