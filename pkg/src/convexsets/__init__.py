"""Convex-set toolkit: polytopes, constrained zonotopes, ellipsoids.

All set values are immutable; operations return new objects and are safe to
call concurrently.
"""

from .errors import (
    BadDimsError,
    DegenerateInputError,
    DimensionCapError,
    DimensionMismatch,
    EmptyInteriorError,
    EmptySetError,
    GeometryError,
    LatentDimCapError,
    NotPositiveDefiniteError,
    NotPsdError,
    RankDeficientError,
    SingularMatrixError,
    SolverError,
    UnboundedSetError,
    UnsupportedOperandError,
    UnsupportedSubtrahendError,
    ZeroDirectionError,
)
from .solvers import Tolerance

__all__ = [
    "Tolerance",
    "GeometryError",
    "BadDimsError",
    "DegenerateInputError",
    "DimensionCapError",
    "DimensionMismatch",
    "EmptyInteriorError",
    "EmptySetError",
    "LatentDimCapError",
    "NotPositiveDefiniteError",
    "NotPsdError",
    "RankDeficientError",
    "SingularMatrixError",
    "SolverError",
    "UnboundedSetError",
    "UnsupportedOperandError",
    "UnsupportedSubtrahendError",
    "ZeroDirectionError",
]
