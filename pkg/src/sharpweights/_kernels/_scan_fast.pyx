# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled pairwise ratio scan.

Same contract as the numpy fallback: given prefix integrals, find the
index pair i < j maximizing the selected closed-form ratio.  Ties
resolve to the lexicographically smallest (i, j) because only a strict
improvement replaces the incumbent.
"""

from libc.math cimport exp, pow, INFINITY, isnan


def max_pair_ratio(double[::1] grid, double[::1] p1, double[::1] p2,
                   double e1, double e2, double[::1] cap, int mode):
    """Maximum of the mode's ratio over all index pairs i < j.

    Returns (best, i, j).  Modes: 0 -> (d1/L)**e1 * (d2/L)**e2,
    1 -> (d1/L) * exp(-(d2/L)), 2 -> cap[j] / (d1/L).
    """
    cdef Py_ssize_t n = grid.shape[0]
    if n < 2:
        raise ValueError("need at least two grid points")
    if p1.shape[0] != n or p2.shape[0] != n or cap.shape[0] != n:
        raise ValueError("prefix arrays must match the grid length")
    cdef double best = -INFINITY
    cdef Py_ssize_t bi = 0, bj = 1
    cdef Py_ssize_t i, j
    cdef double length, a1, a2, v
    # e = +-1 covers one factor of every mode-0 caller; pow(x, +-1.0)
    # is correctly rounded, so the shortcuts return identical bits.
    # True division everywhere: d/d must stay exactly 1 so constant
    # weights keep their exact ties.
    with nogil:
        for i in range(n - 1):
            for j in range(i + 1, n):
                length = grid[j] - grid[i]
                if length <= 0.0:
                    continue
                a1 = (p1[j] - p1[i]) / length
                if mode == 0:
                    a2 = (p2[j] - p2[i]) / length
                    v = a1 if e1 == 1.0 else pow(a1, e1)
                    if e2 == 1.0:
                        v = v * a2
                    elif e2 == -1.0:
                        v = v * (1.0 / a2)
                    else:
                        v = v * pow(a2, e2)
                elif mode == 1:
                    a2 = (p2[j] - p2[i]) / length
                    v = a1 * exp(-a2)
                else:
                    v = cap[j] / a1
                if isnan(v):
                    continue
                if v > best:
                    best = v
                    bi = i
                    bj = j
    return best, bi, bj
