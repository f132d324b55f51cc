"""Numpy fallback for the pairwise ratio scan.

Works block-by-block over the pair matrix so memory stays bounded at a
few megabytes regardless of grid size.
"""

from __future__ import annotations

import numpy as np

_BLOCK = 256

# Modes: 0 -> (d1/L)**e1 * (d2/L)**e2   (moment-power ratios)
#        1 -> (d1/L) * exp(-(d2/L))     (average times exponential)
#        2 -> cap[j] / (d1/L)           (sup over average)
# where d1 = p1[j]-p1[i], d2 = p2[j]-p2[i], L = grid[j]-grid[i], i < j.


def max_pair_ratio(grid, p1, p2, e1, e2, cap, mode):
    """Maximum of the mode's ratio over all index pairs i < j.

    Returns (best, i, j); ties resolve to the lexicographically
    smallest (i, j).  Inputs are equal-length 1-D float arrays; `cap`
    is only read in mode 2 and `p2`/`e1`/`e2` only where the mode uses
    them.
    """
    g = np.asarray(grid, dtype=np.float64)
    q1 = np.asarray(p1, dtype=np.float64)
    q2 = np.asarray(p2, dtype=np.float64)
    cp = np.asarray(cap, dtype=np.float64)
    n = g.size
    if n < 2:
        raise ValueError("need at least two grid points")
    best = -np.inf
    bi, bj = 0, 1
    for lo in range(0, n - 1, _BLOCK):
        hi = min(lo + _BLOCK, n - 1)
        rows = slice(lo, hi)
        length = g[None, :] - g[rows, None]
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            a1 = (q1[None, :] - q1[rows, None]) / length
            if mode == 0:
                vals = a1**e1 * ((q2[None, :] - q2[rows, None]) / length) ** e2
            elif mode == 1:
                vals = a1 * np.exp(-(q2[None, :] - q2[rows, None]) / length)
            else:
                vals = cp[None, :] / a1
        vals[length <= 0.0] = -np.inf
        np.nan_to_num(vals, copy=False, nan=-np.inf, posinf=np.inf)
        flat = int(np.argmax(vals))
        r, c = divmod(flat, n)
        v = float(vals[r, c])
        if v > best:
            best = v
            bi, bj = lo + r, c
    return best, bi, bj
