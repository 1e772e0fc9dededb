"""Extremal-ellipsoid solvers: circumscribing (points) and inscribed (halfspaces).

The circumscribing ellipsoid uses the Khachiyan first-order scheme with
Wolfe-Atwood away steps, which converges linearly and carries the classical
(1+eps)^n volume guarantee. The inscribed ellipsoid maximizes log det B under
norm rows via a log-barrier with damped Newton steps, started from the
Chebyshev ball.
"""

from __future__ import annotations

import numpy as np

from ..errors import DegenerateInputError, EmptyInteriorError, SolverError, UnboundedSetError
from .base import DEFAULT_TOL, LpProblem, Status, Tolerance
from .lp import solve_lp


def mvee_of_points(points, eps: float = 1e-7, iter_max: int = 50_000):
    """Minimum-volume ellipsoid {x: (x-c).Q.(x-c) <= 1} covering the points.

    Requires the points to affinely span the space. Every input point
    satisfies the quadratic form up to 1 + eps.
    """
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    k, n = pts.shape
    if k < n + 1:
        raise DegenerateInputError(f"need at least {n + 1} points in R^{n}, got {k}")
    centered = pts - pts.mean(axis=0)
    svals = np.linalg.svd(centered, compute_uv=False)
    if svals[-1] <= 1e-12 * max(1.0, svals[0]):
        raise DegenerateInputError("points lie in a lower-dimensional affine set")

    q = np.hstack([pts, np.ones((k, 1))])  # lifted points
    d = n + 1
    u = np.full(k, 1.0 / k)
    # Stop with margin so the final quadratic form stays within 1 + eps.
    gap = eps * n / (d * 2.0)
    for _ in range(iter_max):
        xmat = q.T @ (u[:, None] * q)
        try:
            sol = np.linalg.solve(xmat, q.T)
        except np.linalg.LinAlgError:
            raise SolverError("weight matrix became singular") from None
        omega = np.einsum("ij,ji->i", q, sol)
        j_plus = int(np.argmax(omega))
        support = np.flatnonzero(u > 0)
        j_minus = support[int(np.argmin(omega[support]))]
        e_plus = omega[j_plus] / d - 1.0
        e_minus = 1.0 - omega[j_minus] / d
        if max(e_plus, e_minus) <= gap:
            break
        if e_plus >= e_minus:
            w = omega[j_plus]
            beta = (w - d) / (d * (w - 1.0))
            u *= 1.0 - beta
            u[j_plus] += beta
        else:
            w = omega[j_minus]
            beta = (d - w) / (d * (w - 1.0))
            beta = min(beta, u[j_minus] / (1.0 - u[j_minus])) if u[j_minus] < 1.0 else beta
            u *= 1.0 + beta
            u[j_minus] -= beta
            u[j_minus] = max(u[j_minus], 0.0)
        u /= u.sum()
    center = pts.T @ u
    sigma = pts.T @ (u[:, None] * pts) - np.outer(center, center)
    shape = np.linalg.inv(sigma) / n
    shape = 0.5 * (shape + shape.T)
    # Guarantee containment exactly at 1 + eps despite finite iteration count.
    forms = np.einsum("ij,jk,ik->i", pts - center, shape, pts - center)
    worst = float(np.max(forms))
    if worst > 1.0 + eps:
        shape = shape / worst
    return shape, center


def mvie_of_halfspaces(a_mat, b_vec, tol: Tolerance = DEFAULT_TOL):
    """Maximum-volume inscribed ellipsoid {B u + d: |u| <= 1} of {x: Ax <= b}.

    Returns (B, d) with B symmetric positive definite satisfying the
    inscription certificate ||B a_i|| + a_i.d <= b_i for every row.
    """
    a_mat = np.atleast_2d(np.asarray(a_mat, dtype=float))
    b_vec = np.asarray(b_vec, dtype=float).ravel()
    m, n = a_mat.shape
    norms = np.linalg.norm(a_mat, axis=1)
    keep = norms > 0
    a_mat, b_vec, norms = a_mat[keep], b_vec[keep], norms[keep]
    a_mat = a_mat / norms[:, None]
    b_vec = b_vec / norms
    m = a_mat.shape[0]

    center, radius = _chebyshev(a_mat, b_vec, tol)
    if radius <= tol.feas:
        raise EmptyInteriorError("halfspace intersection has empty interior")

    bmat = 0.9 * radius * np.eye(n)
    d = center.copy()
    theta = _pack(bmat, d, n)
    p = theta.size

    t = 1.0
    t_final = m / max(tol.opt, 1e-10)
    while True:
        for _ in range(200):
            g = _barrier_grad(theta, a_mat, b_vec, n, t)
            hess = _fd_hessian(theta, a_mat, b_vec, n, t)
            try:
                step = np.linalg.solve(hess + 1e-12 * np.eye(p), -g)
            except np.linalg.LinAlgError:
                step = -g
            decrement = float(-g @ step)
            if decrement <= 1e-12:
                break
            alpha = 1.0
            f0 = _barrier_value(theta, a_mat, b_vec, n, t)
            while alpha > 1e-14:
                trial = theta + alpha * step
                f1 = _barrier_value(trial, a_mat, b_vec, n, t)
                if np.isfinite(f1) and f1 <= f0 - 0.25 * alpha * decrement:
                    break
                alpha *= 0.5
            if alpha <= 1e-14:
                break
            theta = theta + alpha * step
            if decrement * alpha <= 1e-11:
                break
        if t >= t_final:
            break
        t = min(t * 20.0, t_final)
    bmat, d = _unpack(theta, n)
    # Snap onto the certificate: shrink uniformly if any row overshoots.
    margin = np.linalg.norm(a_mat @ bmat, axis=1) + a_mat @ d - b_vec
    if np.max(margin) > 0:
        slack = b_vec - a_mat @ d
        scale = float(np.min(slack / np.linalg.norm(a_mat @ bmat, axis=1)))
        bmat = bmat * min(1.0, scale)
    return bmat, d


def _chebyshev(a_mat, b_vec, tol):
    m, n = a_mat.shape
    c = np.zeros(n + 1)
    c[-1] = -1.0
    rows = np.hstack([a_mat, np.ones((m, 1))])
    lb = np.full(n + 1, -np.inf)
    lb[-1] = 0.0
    res = solve_lp(LpProblem(c=c, a_ub=rows, b_ub=b_vec, lb=lb), tol)
    if res.status == Status.UNBOUNDED:
        raise UnboundedSetError("halfspace intersection is unbounded")
    if res.status != Status.OPTIMAL:
        raise EmptyInteriorError(f"Chebyshev subproblem returned {res.status.value}")
    return res.x[:n], float(res.x[-1])


def _pack(bmat, d, n):
    iu = np.triu_indices(n)
    return np.concatenate([bmat[iu], d])


def _unpack(theta, n):
    iu = np.triu_indices(n)
    bmat = np.zeros((n, n))
    k = iu[0].size
    bmat[iu] = theta[:k]
    bmat = bmat + bmat.T - np.diag(np.diag(bmat))
    return bmat, theta[k:]


def _slacks(theta, a_mat, b_vec, n):
    bmat, d = _unpack(theta, n)
    return bmat, d, b_vec - a_mat @ d - np.linalg.norm(a_mat @ bmat, axis=1)


def _barrier_value(theta, a_mat, b_vec, n, t):
    bmat, d, s = _slacks(theta, a_mat, b_vec, n)
    if np.any(s <= 0):
        return np.inf
    sign, logdet = np.linalg.slogdet(bmat)
    if sign <= 0:
        return np.inf
    return -t * logdet - float(np.sum(np.log(s)))


def _barrier_grad(theta, a_mat, b_vec, n, t):
    bmat, d, s = _slacks(theta, a_mat, b_vec, n)
    binv = np.linalg.inv(bmat)
    grad_b = -t * 0.5 * (binv + binv.T)
    y = a_mat @ bmat  # rows are B a_i for symmetric B
    ynorm = np.linalg.norm(y, axis=1)
    ynorm = np.where(ynorm > 1e-300, ynorm, 1.0)
    coeff = 1.0 / (s * ynorm)
    grad_b += 0.5 * ((a_mat * coeff[:, None]).T @ y + (y * coeff[:, None]).T @ a_mat)
    grad_d = a_mat.T @ (1.0 / s)
    iu = np.triu_indices(n)
    packed = np.where(iu[0] == iu[1], 1.0, 2.0) * grad_b[iu]
    return np.concatenate([packed, grad_d])


def _fd_hessian(theta, a_mat, b_vec, n, t):
    p = theta.size
    hess = np.zeros((p, p))
    h = 1e-6 * (1.0 + np.abs(theta))
    for i in range(p):
        up = theta.copy()
        dn = theta.copy()
        up[i] += h[i]
        dn[i] -= h[i]
        gu = _barrier_grad(up, a_mat, b_vec, n, t)
        gd = _barrier_grad(dn, a_mat, b_vec, n, t)
        hess[:, i] = (gu - gd) / (2.0 * h[i])
    return 0.5 * (hess + hess.T)
