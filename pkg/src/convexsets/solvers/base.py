"""Problem/result containers and numeric tolerances for the in-repo solvers."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from ..errors import DimensionMismatch


class Status(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"
    ITERATION_LIMIT = "iteration_limit"


@dataclass(frozen=True)
class Tolerance:
    """Numeric tolerances used throughout the package.

    feas: absolute feasibility slack accepted on constraints.
    rank: singular-value cutoff relative to the largest singular value.
    opt: optimality gap for iterative solvers.
    iter_max: iteration cap for iterative solvers.
    """

    feas: float = 1e-8
    rank: float = 1e-10
    opt: float = 1e-9
    iter_max: int = 10_000

    def __post_init__(self):
        if not (self.feas > 0 and self.rank > 0 and self.opt > 0):
            raise ValueError("tolerances must be strictly positive")
        if self.iter_max < 1:
            raise ValueError("iter_max must be at least 1")


DEFAULT_TOL = Tolerance()


def _as_matrix(a, rows=None, cols=None, name="matrix"):
    if a is None:
        return None
    a = np.atleast_2d(np.asarray(a, dtype=float))
    if rows is not None and a.shape[0] != rows:
        raise DimensionMismatch(f"{name}: expected {rows} rows, got {a.shape[0]}")
    if cols is not None and a.shape[1] != cols:
        raise DimensionMismatch(f"{name}: expected {cols} columns, got {a.shape[1]}")
    return a


def _as_vector(v, size=None, name="vector"):
    if v is None:
        return None
    v = np.atleast_1d(np.asarray(v, dtype=float))
    if v.ndim != 1:
        raise DimensionMismatch(f"{name}: expected a vector, got shape {v.shape}")
    if size is not None and v.size != size:
        raise DimensionMismatch(f"{name}: expected length {size}, got {v.size}")
    return v


@dataclass(frozen=True)
class LpProblem:
    """min c.x subject to a_ub x <= b_ub, a_eq x = b_eq, lb <= x <= ub.

    Missing blocks are None; lb/ub entries may be -inf/+inf.
    """

    c: np.ndarray
    a_ub: np.ndarray | None = None
    b_ub: np.ndarray | None = None
    a_eq: np.ndarray | None = None
    b_eq: np.ndarray | None = None
    lb: np.ndarray | None = None
    ub: np.ndarray | None = None

    def __post_init__(self):
        c = _as_vector(self.c, name="c")
        n = c.size
        object.__setattr__(self, "c", c)
        a_ub = _as_matrix(self.a_ub, cols=n, name="a_ub")
        b_ub = _as_vector(self.b_ub, size=None if a_ub is None else a_ub.shape[0], name="b_ub")
        if (a_ub is None) != (b_ub is None):
            raise DimensionMismatch("a_ub and b_ub must be given together")
        a_eq = _as_matrix(self.a_eq, cols=n, name="a_eq")
        b_eq = _as_vector(self.b_eq, size=None if a_eq is None else a_eq.shape[0], name="b_eq")
        if (a_eq is None) != (b_eq is None):
            raise DimensionMismatch("a_eq and b_eq must be given together")
        lb = _as_vector(self.lb, size=n, name="lb") if self.lb is not None else np.full(n, -np.inf)
        ub = _as_vector(self.ub, size=n, name="ub") if self.ub is not None else np.full(n, np.inf)
        for name, arr in (("c", c), ("a_ub", a_ub), ("b_ub", b_ub), ("a_eq", a_eq), ("b_eq", b_eq)):
            if arr is not None and not np.all(np.isfinite(arr)):
                raise ValueError(f"{name} must be finite")
        object.__setattr__(self, "a_ub", a_ub)
        object.__setattr__(self, "b_ub", b_ub)
        object.__setattr__(self, "a_eq", a_eq)
        object.__setattr__(self, "b_eq", b_eq)
        object.__setattr__(self, "lb", lb)
        object.__setattr__(self, "ub", ub)

    @property
    def n(self) -> int:
        return self.c.size


@dataclass(frozen=True)
class LpResult:
    status: Status
    x: np.ndarray | None = None
    objective: float | None = None
    # Row multipliers, ordered [ub rows, eq rows]; sign convention: c = A^T y + d
    # with reduced costs d >= 0 at lower bounds and d <= 0 at upper bounds.
    dual: np.ndarray | None = None
    reduced_costs: np.ndarray | None = None
    dual_objective: float | None = None
    iterations: int = 0


@dataclass(frozen=True)
class QpProblem:
    """min 0.5 x.Q.x + q.x with the same constraint blocks as LpProblem."""

    quad: np.ndarray
    lin: np.ndarray
    a_ub: np.ndarray | None = None
    b_ub: np.ndarray | None = None
    a_eq: np.ndarray | None = None
    b_eq: np.ndarray | None = None
    lb: np.ndarray | None = None
    ub: np.ndarray | None = None

    def __post_init__(self):
        lin = _as_vector(self.lin, name="lin")
        n = lin.size
        quad = _as_matrix(self.quad, rows=n, cols=n, name="quad")
        object.__setattr__(self, "lin", lin)
        object.__setattr__(self, "quad", quad)
        a_ub = _as_matrix(self.a_ub, cols=n, name="a_ub")
        b_ub = _as_vector(self.b_ub, size=None if a_ub is None else a_ub.shape[0], name="b_ub")
        a_eq = _as_matrix(self.a_eq, cols=n, name="a_eq")
        b_eq = _as_vector(self.b_eq, size=None if a_eq is None else a_eq.shape[0], name="b_eq")
        lb = _as_vector(self.lb, size=n, name="lb") if self.lb is not None else np.full(n, -np.inf)
        ub = _as_vector(self.ub, size=n, name="ub") if self.ub is not None else np.full(n, np.inf)
        object.__setattr__(self, "a_ub", a_ub)
        object.__setattr__(self, "b_ub", b_ub)
        object.__setattr__(self, "a_eq", a_eq)
        object.__setattr__(self, "b_eq", b_eq)
        object.__setattr__(self, "lb", lb)
        object.__setattr__(self, "ub", ub)

    @property
    def n(self) -> int:
        return self.lin.size


@dataclass(frozen=True)
class QpResult:
    status: Status
    x: np.ndarray | None = None
    objective: float | None = None
    stationarity: float | None = None
    iterations: int = 0
