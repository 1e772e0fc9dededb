"""Exception types shared across the package."""


class GeometryError(Exception):
    """Base class for all set-computation errors."""


class DimensionMismatch(GeometryError):
    """Operand dimensions are inconsistent."""


class EmptySetError(GeometryError):
    """Operation requires a nonempty set."""


class EmptyInteriorError(GeometryError):
    """Operation requires a full-dimensional set."""


class UnboundedSetError(GeometryError):
    """H-rep input describes an unbounded set; only bounded sets are supported."""


class SingularMatrixError(GeometryError):
    """Matrix is singular at the configured rank tolerance."""


class RankDeficientError(GeometryError):
    """Matrix does not have full row rank."""


class NotPositiveDefiniteError(GeometryError):
    """Matrix is not (strictly) positive definite."""


class NotPsdError(GeometryError):
    """Quadratic cost matrix is not positive semidefinite."""


class DegenerateInputError(GeometryError):
    """Input points lie in a lower-dimensional affine set."""


class DimensionCapError(GeometryError):
    """Requested computation exceeds the supported dimension cap."""


class LatentDimCapError(GeometryError):
    """Constrained-zonotope latent dimension exceeds the conversion cap."""


class BadDimsError(GeometryError):
    """Dimension indices are invalid for this set."""


class UnsupportedSubtrahendError(GeometryError):
    """Pontryagin difference is not supported for this subtrahend class."""


class UnsupportedOperandError(GeometryError):
    """Operation is not defined for this operand pair."""


class ZeroDirectionError(GeometryError):
    """Support vector is undefined along the zero direction."""


class SolverError(GeometryError):
    """An internal solver failed to produce a usable answer."""
