"""Feasibility search over a one-parameter matrix pencil."""

from __future__ import annotations

import numpy as np

from .base import DEFAULT_TOL, Tolerance


def psd_linesearch(m0, m1, lam_range=(0.0, 1e6), tol: Tolerance = DEFAULT_TOL):
    """Find lam in lam_range with lambda_min(m0 + lam*m1) >= -tol.feas.

    The smallest eigenvalue of an affine pencil is concave in lam, so a
    ternary search locates its maximizer; None means no feasible lam exists
    in the range. Both matrices are symmetrized before use.
    """
    m0 = 0.5 * (np.asarray(m0, dtype=float) + np.asarray(m0, dtype=float).T)
    m1 = 0.5 * (np.asarray(m1, dtype=float) + np.asarray(m1, dtype=float).T)
    lo, hi = float(lam_range[0]), float(lam_range[1])
    if hi < lo:
        lo, hi = hi, lo

    def eigmin(lam):
        return float(np.linalg.eigvalsh(m0 + lam * m1)[0])

    best_lam = 0.5 * (lo + hi)
    best_val = eigmin(best_lam)
    if best_val >= -tol.feas:
        return best_lam
    while hi - lo > 1e-10 * (1.0 + abs(hi) + abs(lo)):
        third = (hi - lo) / 3.0
        a, b = lo + third, hi - third
        fa, fb = eigmin(a), eigmin(b)
        if fa >= best_val:
            best_val, best_lam = fa, a
        if fb >= best_val:
            best_val, best_lam = fb, b
        if best_val >= -tol.feas:
            return best_lam
        if fa < fb:
            lo = a
        else:
            hi = b
    for lam in (lo, hi, best_lam):
        if eigmin(lam) >= -tol.feas:
            return lam
    return None
