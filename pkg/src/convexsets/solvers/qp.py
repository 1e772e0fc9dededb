"""Primal active-set method for convex quadratic programs.

Strictly convex costs terminate exactly on nondegenerate problems; a PSD but
singular quadratic term is regularized by +1e-12 I. Feasible starts come from
a phase-1 LP, so infeasibility is detected before any QP iteration runs.
"""

from __future__ import annotations

import numpy as np

from ..errors import NotPsdError
from .base import DEFAULT_TOL, LpProblem, QpProblem, QpResult, Status, Tolerance
from .lp import solve_lp

_RIDGE = 1e-12


def solve_qp(prob: QpProblem, tol: Tolerance = DEFAULT_TOL) -> QpResult:
    """Minimize 0.5 x.Q.x + q.x subject to the problem's constraint blocks."""
    n = prob.n
    quad = 0.5 * (prob.quad + prob.quad.T)
    eigmin = float(np.linalg.eigvalsh(quad)[0]) if n else 0.0
    scale = max(1.0, float(np.max(np.abs(quad))) if n else 1.0)
    if eigmin < -tol.rank * scale:
        raise NotPsdError(f"quadratic term has eigenvalue {eigmin:.3e}")
    quad = quad + _RIDGE * np.eye(n)

    a_rows, b_rows = _inequality_rows(prob)
    a_eq = prob.a_eq if prob.a_eq is not None else np.zeros((0, n))
    b_eq = prob.b_eq if prob.b_eq is not None else np.zeros(0)

    start = solve_lp(
        LpProblem(
            c=np.zeros(n),
            a_ub=prob.a_ub,
            b_ub=prob.b_ub,
            a_eq=prob.a_eq,
            b_eq=prob.b_eq,
            lb=prob.lb,
            ub=prob.ub,
        ),
        tol,
    )
    if start.status == Status.INFEASIBLE:
        return QpResult(status=Status.INFEASIBLE)
    if start.status != Status.OPTIMAL:
        return QpResult(status=start.status)
    x = start.x.copy()

    working = list(np.flatnonzero(a_rows @ x - b_rows >= -tol.feas)) if a_rows.size else []
    working = _independent_subset(a_eq, a_rows, working, tol)

    iterations = 0
    while iterations < tol.iter_max:
        iterations += 1
        act = np.vstack([a_eq, a_rows[working]]) if (a_eq.shape[0] or working) else np.zeros((0, n))
        grad = quad @ x + prob.lin
        p, lam = _kkt_step(quad, grad, act)
        if np.linalg.norm(p) <= 1e-11 * (1.0 + np.linalg.norm(x)):
            mult = lam[a_eq.shape[0] :]
            if mult.size == 0 or np.min(mult) >= -max(tol.opt, 1e-9):
                obj = float(0.5 * x @ prob.quad @ x + prob.lin @ x)
                resid = grad + act.T @ lam if act.size else grad
                return QpResult(
                    status=Status.OPTIMAL,
                    x=x,
                    objective=obj,
                    stationarity=float(np.linalg.norm(resid)),
                    iterations=iterations,
                )
            working.pop(int(np.argmin(mult)))
            continue
        alpha = 1.0
        blocking = -1
        if a_rows.size:
            rates = a_rows @ p
            slacks = b_rows - a_rows @ x
            for i in range(a_rows.shape[0]):
                if i in working or rates[i] <= tol.feas:
                    continue
                a_i = max(slacks[i], 0.0) / rates[i]
                if a_i < alpha:
                    alpha, blocking = a_i, i
        x = x + alpha * p
        if blocking >= 0:
            working.append(blocking)
            working = _independent_subset(a_eq, a_rows, working, tol)
    return QpResult(status=Status.ITERATION_LIMIT, x=x, iterations=iterations)


def _inequality_rows(prob: QpProblem):
    """Stack a_ub rows with finite box bounds as explicit inequality rows."""
    n = prob.n
    blocks, rhs = [], []
    if prob.a_ub is not None:
        blocks.append(prob.a_ub)
        rhs.append(prob.b_ub)
    finite_ub = np.flatnonzero(np.isfinite(prob.ub))
    if finite_ub.size:
        rows = np.zeros((finite_ub.size, n))
        rows[np.arange(finite_ub.size), finite_ub] = 1.0
        blocks.append(rows)
        rhs.append(prob.ub[finite_ub])
    finite_lb = np.flatnonzero(np.isfinite(prob.lb))
    if finite_lb.size:
        rows = np.zeros((finite_lb.size, n))
        rows[np.arange(finite_lb.size), finite_lb] = -1.0
        blocks.append(rows)
        rhs.append(-prob.lb[finite_lb])
    if not blocks:
        return np.zeros((0, n)), np.zeros(0)
    return np.vstack(blocks), np.concatenate(rhs)


def _independent_subset(a_eq, a_rows, working, tol):
    """Drop working-set rows that are linearly dependent on earlier ones."""
    kept = []
    base = a_eq
    for i in working:
        trial = np.vstack([base, a_rows[[r for r in kept] + [i]]])
        if np.linalg.matrix_rank(trial, tol=tol.rank * max(1.0, np.abs(trial).max())) == trial.shape[0]:
            kept.append(i)
    return kept


def _kkt_step(quad, grad, act):
    """Solve the equality-constrained subproblem for a step and multipliers."""
    n = quad.shape[0]
    k = act.shape[0]
    if k == 0:
        p = np.linalg.solve(quad, -grad)
        return p, np.zeros(0)
    kkt = np.zeros((n + k, n + k))
    kkt[:n, :n] = quad
    kkt[:n, n:] = act.T
    kkt[n:, :n] = act
    rhs = np.concatenate([-grad, np.zeros(k)])
    sol, *_ = np.linalg.lstsq(kkt, rhs, rcond=None)
    return sol[:n], sol[n:]
