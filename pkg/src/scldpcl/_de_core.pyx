# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled density-evolution core.

Same contract as ``_de_core_py.de_fixed_point``; the flooding recursion is
written as tight C loops over the dense multiplicity matrix.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND = "compiled"


cdef inline double _ipow(double f, int m) nogil:
    cdef double out = f
    cdef int k
    if m == 1:
        return f
    out = 1.0
    for k in range(m):
        out *= f
    return out


def de_fixed_point(mult, double eps, row_base, row_active, int max_iters,
                   double stall_tol, x0=None):
    """Iterate per-edge BEC density evolution to a fixed point.

    See ``_de_core_py.de_fixed_point`` for the parameter contract.
    """
    cdef cnp.ndarray[cnp.int32_t, ndim=2] m = np.ascontiguousarray(mult, dtype=np.int32)
    cdef int a = m.shape[0]
    cdef int b = m.shape[1]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] base = np.ascontiguousarray(row_base, dtype=np.float64)
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] active = np.ascontiguousarray(row_active, dtype=np.uint8)

    act_edge = (np.asarray(m) > 0) & np.asarray(active, dtype=bool)[:, None]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] x
    if x0 is None:
        x = np.where(act_edge, 1.0, 0.0)
    else:
        x = np.where(act_edge, np.asarray(x0, dtype=np.float64), 0.0)
    x = np.ascontiguousarray(x)
    cdef cnp.ndarray[cnp.float64_t, ndim=2] u = np.ones((a, b), dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] sigma = np.empty(b, dtype=np.float64)

    # mask rows with zero active edges out of the active set up front
    cdef int i, j, mij, it, zc, z2
    cdef double f, pnz, p2, excl, unew, xnew, change, maxx, prod
    cdef bint converged = False
    cdef int iterations = 0

    with nogil:
        for it in range(max_iters):
            iterations = it + 1

            # check pass
            for i in range(a):
                if not active[i]:
                    continue
                zc = 0
                pnz = 1.0
                for j in range(b):
                    mij = m[i, j]
                    if mij == 0:
                        continue
                    f = 1.0 - x[i, j]
                    if f <= 0.0:
                        zc += mij
                    else:
                        pnz *= _ipow(f, mij)
                for j in range(b):
                    mij = m[i, j]
                    if mij == 0:
                        continue
                    f = 1.0 - x[i, j]
                    if f <= 0.0:
                        z2 = zc - 1
                        p2 = pnz
                    else:
                        z2 = zc
                        p2 = pnz / f
                    excl = 0.0 if z2 > 0 else p2
                    unew = 1.0 - base[i] * excl
                    if unew < 0.0:
                        unew = 0.0
                    elif unew > 1.0:
                        unew = 1.0
                    u[i, j] = unew

            # variable pass
            change = 0.0
            maxx = 0.0
            for j in range(b):
                zc = 0
                pnz = 1.0
                for i in range(a):
                    mij = m[i, j]
                    if mij == 0 or not active[i]:
                        continue
                    f = u[i, j]
                    if f <= 0.0:
                        zc += mij
                    else:
                        pnz *= _ipow(f, mij)
                for i in range(a):
                    mij = m[i, j]
                    if mij == 0 or not active[i]:
                        continue
                    f = u[i, j]
                    if f <= 0.0:
                        z2 = zc - 1
                        p2 = pnz
                    else:
                        z2 = zc
                        p2 = pnz / f
                    excl = 0.0 if z2 > 0 else p2
                    xnew = eps * excl
                    if xnew < 0.0:
                        xnew = 0.0
                    elif xnew > 1.0:
                        xnew = 1.0
                    f = xnew - x[i, j]
                    if f < 0.0:
                        f = -f
                    if f > change:
                        change = f
                    if xnew > maxx:
                        maxx = xnew
                    x[i, j] = xnew

            if change < stall_tol or maxx == 0.0:
                converged = True
                break

        # posterior
        for j in range(b):
            prod = eps
            for i in range(a):
                mij = m[i, j]
                if mij == 0 or not active[i]:
                    continue
                prod *= _ipow(u[i, j], mij)
            sigma[j] = prod

    return np.asarray(x), np.asarray(u), np.asarray(sigma), iterations, converged
