"""Pure-numpy density-evolution core.

Flooding-schedule per-edge erasure recursion on a protomatrix with
multiplicities, optional per-row clamped prior factors (fixed incoming
erasure values on coupling checks) and inactive rows (checks that send no
messages).  Semantics are identical to the compiled core in ``_de_core``;
the dispatcher in ``kernels`` picks whichever is importable.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def de_fixed_point(mult, eps, row_base, row_active, max_iters, stall_tol, x0=None):
    """Iterate per-edge BEC density evolution to a fixed point.

    Parameters
    ----------
    mult : (a, b) array of non-negative ints
        Edge multiplicities; 0 means no edge.
    eps : float
        Channel erasure probability (the variable-node prior).
    row_base : (a,) array
        Check-node prior factor per row: ``1 - delta`` for a row whose
        incoming inter-block value is clamped at ``delta``, 1.0 for a
        plain check row.  Ignored for inactive rows.
    row_active : (a,) bool array
        False marks a row that sends no messages and is excluded from the
        posterior.
    max_iters, stall_tol :
        Iteration cap and the max per-edge change that declares a fixed
        point.
    x0 : optional (a, b) array
        Seed for the variable-to-check messages (defaults to all-erasure).

    Returns
    -------
    (x, u, sigma, iterations, converged)
        Final variable-to-check and check-to-variable messages (dense,
        zero / one respectively off the edge set), per-variable posterior
        erasure rates, sweep count, and whether a fixed point was reached
        before the cap.
    """
    m = np.asarray(mult, dtype=np.float64)
    a, b = m.shape
    active = np.asarray(row_active, dtype=bool)
    base = np.asarray(row_base, dtype=np.float64)

    act_edge = (m > 0) & active[:, None]
    m_act = np.where(act_edge, m, 0.0)

    if x0 is None:
        x = np.where(act_edge, 1.0, 0.0)
    else:
        x = np.where(act_edge, np.asarray(x0, dtype=np.float64), 0.0)
    u = np.ones((a, b))

    iterations = 0
    converged = False
    for _ in range(max_iters):
        iterations += 1

        # check pass: u_ij = 1 - base_i * prod over the row's other edge
        # powers of (1 - x); zero factors are counted separately so the
        # exclusion of one power never divides by zero.
        f = 1.0 - x
        fzero = act_edge & (f <= 0.0)
        g = np.where(fzero | ~act_edge, 1.0, f)
        row_nz = np.prod(g**m_act, axis=1)
        row_zc = (fzero * m_act).sum(axis=1)
        excl_zc = row_zc[:, None] - fzero
        excl_nz = row_nz[:, None] / g
        excl = np.where(excl_zc > 0, 0.0, excl_nz)
        u = np.where(act_edge, 1.0 - base[:, None] * excl, 1.0)
        np.clip(u, 0.0, 1.0, out=u)

        # variable pass: x_ij = eps * prod over the column's other edge
        # powers of u.
        uzero = act_edge & (u <= 0.0)
        h = np.where(uzero | ~act_edge, 1.0, u)
        col_nz = np.prod(h**m_act, axis=0)
        col_zc = (uzero * m_act).sum(axis=0)
        excl_zc = col_zc[None, :] - uzero
        excl_nz = col_nz[None, :] / h
        excl = np.where(excl_zc > 0, 0.0, excl_nz)
        x_new = np.where(act_edge, eps * excl, 0.0)
        np.clip(x_new, 0.0, 1.0, out=x_new)

        change = np.abs(x_new - x).max() if x.size else 0.0
        x = x_new
        if change < stall_tol or not x.any():
            # an all-zero message state is a fixed point by monotonicity
            converged = True
            break

    sigma = eps * np.prod(np.where(act_edge, u, 1.0) ** m_act, axis=0)
    return x, u, sigma, iterations, converged
