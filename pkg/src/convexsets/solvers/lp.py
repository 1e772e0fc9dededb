"""Dense revised simplex for linear programs with box bounds.

Two-phase bounded-variable simplex: slack columns turn inequality rows into
equalities, explicit artificial columns start phase 1, and Dantzig pricing
falls back to Bland's rule once a run of degenerate pivots suggests cycling.
The basis inverse is kept explicitly and refreshed periodically; all
reductions run in fixed index order so results are reproducible bit for bit.
"""

from __future__ import annotations

import numpy as np
from scipy.linalg.blas import dger
from threadpoolctl import ThreadpoolController

from .base import DEFAULT_TOL, LpProblem, LpResult, Status, Tolerance

# Single-threaded BLAS inside the pivot loop: faster at these sizes and makes
# results independent of the host's thread count.
_BLAS_POOL = ThreadpoolController()

_AT_LOWER = 0
_AT_UPPER = 1
_FREE = 2
_BASIC = 3

_REFACTOR_EVERY = 150
_DEGENERATE_RUN = 40
_PIVOT_TOL = 1e-11
_DEGEN_STEP = 1e-12


def solve_lp(prob: LpProblem, tol: Tolerance = DEFAULT_TOL) -> LpResult:
    """Minimize prob.c @ x over the problem's constraint blocks.

    Returns an LpResult whose status is never OPTIMAL unless the final basis
    priced out; hitting tol.iter_max is reported as ITERATION_LIMIT.
    """
    if np.any(prob.lb > prob.ub):
        return LpResult(status=Status.INFEASIBLE)
    if prob.n == 0:
        return _empty_variable_result(prob, tol)
    return _Simplex(prob, tol).run()


def _empty_variable_result(prob, tol):
    ok = True
    if prob.b_ub is not None:
        ok &= bool(np.all(prob.b_ub >= -tol.feas))
    if prob.b_eq is not None:
        ok &= bool(np.all(np.abs(prob.b_eq) <= tol.feas))
    if not ok:
        return LpResult(status=Status.INFEASIBLE)
    m = (0 if prob.a_ub is None else prob.a_ub.shape[0]) + (0 if prob.a_eq is None else prob.a_eq.shape[0])
    return LpResult(
        status=Status.OPTIMAL,
        x=np.zeros(0),
        objective=0.0,
        dual=np.zeros(m),
        reduced_costs=np.zeros(0),
        dual_objective=0.0,
    )


class _Simplex:
    def __init__(self, prob: LpProblem, tol: Tolerance):
        self.tol = tol
        n = prob.n
        a_ub = prob.a_ub if prob.a_ub is not None else np.zeros((0, n))
        b_ub = prob.b_ub if prob.b_ub is not None else np.zeros(0)
        a_eq = prob.a_eq if prob.a_eq is not None else np.zeros((0, n))
        b_eq = prob.b_eq if prob.b_eq is not None else np.zeros(0)
        m_ub, m_eq = a_ub.shape[0], a_eq.shape[0]
        m = m_ub + m_eq

        self.n_struct = n
        self.m_ub = m_ub
        self.m = m
        self.b = np.concatenate([b_ub, b_eq])
        core = np.zeros((m, n + m_ub))
        core[:m_ub, :n] = a_ub
        core[m_ub:, :n] = a_eq
        core[:m_ub, n : n + m_ub] = np.eye(m_ub)

        lo = np.concatenate([prob.lb, np.zeros(m_ub)])
        hi = np.concatenate([prob.ub, np.full(m_ub, np.inf)])

        # Nonbasic start: finite bound nearest zero, else free at zero.
        x = np.zeros(n + m_ub)
        status = np.full(n + m_ub, _FREE, dtype=np.int8)
        for j in range(n + m_ub):
            if np.isfinite(lo[j]) and (not np.isfinite(hi[j]) or abs(lo[j]) <= abs(hi[j])):
                x[j], status[j] = lo[j], _AT_LOWER
            elif np.isfinite(hi[j]):
                x[j], status[j] = hi[j], _AT_UPPER

        resid = self.b - core @ x
        basis = np.empty(m, dtype=np.intp)
        art_cols = []
        binv_diag = np.ones(m)
        next_col = n + m_ub
        for i in range(m):
            if i < m_ub and resid[i] >= 0.0:
                # Slack can carry the row without an artificial.
                basis[i] = n + i
                x[n + i] = resid[i]
                status[n + i] = _BASIC
            else:
                sign = 1.0 if resid[i] >= 0.0 else -1.0
                art_cols.append((i, sign))
                basis[i] = next_col
                next_col += 1

        n_art = len(art_cols)
        self.a = np.zeros((m, n + m_ub + n_art))
        self.a[:, : n + m_ub] = core
        self.lo = np.concatenate([lo, np.zeros(n_art)])
        self.hi = np.concatenate([hi, np.full(n_art, np.inf)])
        self.x = np.concatenate([x, np.zeros(n_art)])
        self.status = np.concatenate([status, np.full(n_art, _BASIC, dtype=np.int8)])
        for k, (i, sign) in enumerate(art_cols):
            col = n + m_ub + k
            self.a[i, col] = sign
            self.x[col] = abs(resid[i])
            binv_diag[i] = sign
        self.first_art = n + m_ub
        self.basis = basis
        self.binv = np.asfortranarray(np.diag(binv_diag)) if m else np.zeros((0, 0), order="F")
        self.movable_span = self.hi - self.lo > 0
        self.iterations = 0
        self.since_refactor = 0
        self.degenerate_run = 0
        self.bland = False
        self.cost = np.zeros(self.a.shape[1])
        self.c_orig = prob.c

    # ----- basic linear algebra maintenance -------------------------------

    def _refactor(self):
        basis_mat = self.a[:, self.basis]
        try:
            self.binv = np.asfortranarray(np.linalg.inv(basis_mat))
        except np.linalg.LinAlgError:
            # Perturb to escape an exactly singular basis from accumulated drift.
            self.binv = np.asfortranarray(np.linalg.pinv(basis_mat))
        nb = self.status != _BASIC
        r = self.b - self.a[:, nb] @ self.x[nb]
        self.x[self.basis] = self.binv @ r
        self.since_refactor = 0

    # ----- pricing ---------------------------------------------------------

    def _entering(self, dtol):
        y = self.cost[self.basis] @ self.binv
        d = self.cost - y @ self.a
        movable = (self.status != _BASIC) & self.movable_span
        score = np.zeros(self.a.shape[1])
        low = movable & (self.status == _AT_LOWER)
        up = movable & (self.status == _AT_UPPER)
        free = movable & (self.status == _FREE)
        score[low] = -d[low]
        score[up] = d[up]
        score[free] = np.abs(d[free])
        if self.bland:
            idx = np.flatnonzero(score > dtol)
            j = int(idx[0]) if idx.size else -1
        else:
            j = int(np.argmax(score)) if score.size else -1
            if j >= 0 and score[j] <= dtol:
                j = -1
        return j, d, y

    # ----- core loop -------------------------------------------------------

    def _iterate(self, dtol):
        """Run simplex pivots with the current cost vector.

        Returns OPTIMAL or UNBOUNDED, or ITERATION_LIMIT on the global cap.
        """
        while True:
            if self.iterations >= self.tol.iter_max:
                return Status.ITERATION_LIMIT
            j, d, _ = self._entering(dtol)
            if j < 0:
                return Status.OPTIMAL
            sigma = 1.0
            if self.status[j] == _AT_UPPER or (self.status[j] == _FREE and d[j] > 0):
                sigma = -1.0

            w = self.binv @ self.a[:, j]
            g = -sigma * w  # rate of change of basic values per unit step

            span = self.hi[j] - self.lo[j]
            t_own = span if np.isfinite(span) else np.inf
            xb = self.x[self.basis]
            lob = self.lo[self.basis]
            hib = self.hi[self.basis]
            to_lower = g < -_PIVOT_TOL
            to_upper = g > _PIVOT_TOL
            ratios = np.full(self.m, np.inf)
            with np.errstate(divide="ignore", invalid="ignore"):
                low = to_lower & np.isfinite(lob)
                ratios[low] = np.maximum(xb[low] - lob[low], 0.0) / (-g[low])
                up = to_upper & np.isfinite(hib)
                ratios[up] = np.maximum(hib[up] - xb[up], 0.0) / g[up]
            t_row = float(np.min(ratios)) if self.m else np.inf
            t_best = min(t_own, t_row)
            if not np.isfinite(t_best):
                return Status.UNBOUNDED
            leave_pos = -1
            if t_row <= t_own:
                near = np.flatnonzero(ratios <= t_best + _DEGEN_STEP)
                if self.bland:
                    leave_pos = int(near[np.argmin(self.basis[near])])
                else:
                    leave_pos = int(near[np.argmax(np.abs(g[near]))])
                t_best = float(ratios[leave_pos])
                leave_to = _AT_LOWER if to_lower[leave_pos] else _AT_UPPER

            self.iterations += 1
            self.since_refactor += 1
            if t_best <= _DEGEN_STEP:
                self.degenerate_run += 1
                if self.degenerate_run >= _DEGENERATE_RUN:
                    self.bland = True
            else:
                self.degenerate_run = 0
                if self.bland and t_best > 1e-9:
                    self.bland = False

            if leave_pos < 0:
                # Bound flip: entering variable runs to its opposite bound.
                self.x[self.basis] = xb + t_best * g
                self.x[j] = self.hi[j] if sigma > 0 else self.lo[j]
                self.status[j] = _AT_UPPER if sigma > 0 else _AT_LOWER
            else:
                self.x[self.basis] = xb + t_best * g
                leaving = self.basis[leave_pos]
                self.x[leaving] = self.lo[leaving] if leave_to == _AT_LOWER else self.hi[leaving]
                self.status[leaving] = leave_to
                self.x[j] = self.x[j] + sigma * t_best
                self.status[j] = _BASIC
                self.basis[leave_pos] = j
                piv = w[leave_pos]
                row = self.binv[leave_pos] / piv
                # Rank-1 update in place; adjusted w makes the pivot row land on `row`.
                w[leave_pos] = piv - 1.0
                self.binv = dger(-1.0, w, row, a=self.binv, overwrite_a=1)
                if self.since_refactor >= _REFACTOR_EVERY:
                    self._refactor()

    # ----- phases ----------------------------------------------------------

    def run(self) -> LpResult:
        ncols = self.a.shape[1]
        n_art = ncols - self.first_art
        if n_art:
            self.cost[:] = 0.0
            self.cost[self.first_art :] = 1.0
            status = self._iterate(dtol=max(self.tol.opt, 1e-11))
            if status == Status.ITERATION_LIMIT:
                return LpResult(status=status, iterations=self.iterations)
            art_sum = float(np.sum(self.x[self.first_art :]))
            if art_sum > self.tol.feas:
                return LpResult(status=Status.INFEASIBLE, iterations=self.iterations)
            self._retire_artificials()

        self.cost[:] = 0.0
        self.cost[: self.n_struct] = self.c_orig
        self.bland = False
        self.degenerate_run = 0
        scale = 1.0 + float(np.max(np.abs(self.c_orig))) if self.n_struct else 1.0
        dtol = max(self.tol.opt * scale, 1e-11)
        status = self._iterate(dtol=dtol)
        if status != Status.OPTIMAL:
            return LpResult(status=status, iterations=self.iterations)
        return self._extract()

    def _retire_artificials(self):
        # Pin artificials at zero; pivot basic ones out where a pivot exists.
        self.hi[self.first_art :] = 0.0
        for i in range(self.m):
            col = self.basis[i]
            if col < self.first_art:
                continue
            row = self.binv[i] @ self.a[:, : self.first_art]
            candidates = np.flatnonzero(np.abs(row) > 1e-9)
            entering = -1
            for j in candidates:
                if self.status[j] != _BASIC:
                    entering = int(j)
                    break
            if entering < 0:
                continue  # redundant row; artificial stays basic at zero
            w = self.binv @ self.a[:, entering]
            if abs(w[i]) <= _PIVOT_TOL:
                continue
            self.status[col] = _AT_LOWER
            self.x[col] = 0.0
            self.status[entering] = _BASIC
            self.basis[i] = entering
            self._refactor()

    # ----- result assembly --------------------------------------------------

    def _extract(self) -> LpResult:
        self._refactor()
        y = self.cost[self.basis] @ self.binv
        d = self.cost - y @ self.a
        x = self.x[: self.n_struct].copy()
        obj = float(self.c_orig @ x)
        nb = np.flatnonzero(self.status[: self.first_art] != _BASIC)
        finite_vals = np.where(np.isfinite(self.x[nb]), self.x[nb], 0.0)
        dual_obj = float(y @ self.b + d[nb] @ finite_vals)
        return LpResult(
            status=Status.OPTIMAL,
            x=x,
            objective=obj,
            dual=y.copy(),
            reduced_costs=d[: self.n_struct].copy(),
            dual_objective=dual_obj,
            iterations=self.iterations,
        )
