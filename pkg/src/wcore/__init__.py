"""Exact weighted core / weighted dual core inverses over Q with transpose involution."""

from .linalg import Matrix, NotInvertible, DimensionMismatch
from .inverses import (
    EquationTag,
    InverseResult,
    RingContext,
    Weight,
    drazin_inverse,
    group_inverse,
    weighted_core,
    weighted_dual_core,
)

__all__ = [
    "Matrix",
    "NotInvertible",
    "DimensionMismatch",
    "EquationTag",
    "InverseResult",
    "RingContext",
    "Weight",
    "drazin_inverse",
    "group_inverse",
    "weighted_core",
    "weighted_dual_core",
]
