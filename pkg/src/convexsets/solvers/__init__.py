"""In-repo dense solvers: LP, convex QP, extremal ellipsoids, PSD line search."""

from .base import DEFAULT_TOL, LpProblem, LpResult, QpProblem, QpResult, Status, Tolerance
from .ellipsoid_fit import mvee_of_points, mvie_of_halfspaces
from .lp import solve_lp
from .psd import psd_linesearch
from .qp import solve_qp

__all__ = [
    "DEFAULT_TOL",
    "LpProblem",
    "LpResult",
    "QpProblem",
    "QpResult",
    "Status",
    "Tolerance",
    "mvee_of_points",
    "mvie_of_halfspaces",
    "psd_linesearch",
    "solve_lp",
    "solve_qp",
]
