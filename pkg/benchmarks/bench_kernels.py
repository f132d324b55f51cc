"""Timing comparison of the two pair-scan backends.

Both backends are imported directly (the package itself picks one at
import time), driven on the same prefix arrays the sup search builds,
and cross-checked against each other before timing.
"""

import timeit

import numpy as np

from sharpweights import extremal_weight
from sharpweights._kernels import KERNEL_BACKEND, _scan_slow
from sharpweights.weights import _prefix_log, _prefix_power

try:
    from sharpweights._kernels import _scan_fast
except ImportError:
    _scan_fast = None


def workloads(depth):
    # the verification oracle's grids at delta = 2: moment scan (mode 0),
    # exponential scan (mode 1), sup-over-average scan (mode 2)
    w = extremal_weight(2.0, 2.0, (1.0, 4.0), "plus")
    n = (1 << depth) + 1
    grid = np.arange(n, dtype=np.float64) / float(n - 1)
    pref_avg = _prefix_power(grid, w.a, w.nu, 1.0)
    pref_dual = _prefix_power(grid, w.a, w.nu, -1.0 / 9.0)
    pref_log = _prefix_log(grid, w.a, w.nu)
    cap = (np.minimum(grid, w.a) / w.a) ** w.nu
    return {
        "moment": (grid, pref_avg, pref_dual, 1.0, 9.0, cap, 0),
        "exponential": (grid, pref_avg, pref_log, 0.0, 0.0, cap, 1),
        "sup": (grid, pref_avg, pref_avg, 0.0, 0.0, cap, 2),
    }


def best_time(fn, args, reps):
    return min(timeit.repeat(lambda: fn(*args), number=reps, repeat=3)) / reps


def main():
    print(f"active backend: {KERNEL_BACKEND}")
    header = f"{'scan':>12} {'depth':>5} {'points':>7} {'numpy':>12}"
    if _scan_fast is not None:
        header += f" {'cython':>12} {'speedup':>8}"
    print(header)
    for depth in (8, 10, 12):
        reps = max(1, 4096 // (1 << depth))
        for name, args in workloads(depth).items():
            if _scan_fast is not None:
                slow = _scan_slow.max_pair_ratio(*args)
                fast = _scan_fast.max_pair_ratio(*args)
                assert slow[1:] == fast[1:], "backends disagree on the argmax"
            t_slow = best_time(_scan_slow.max_pair_ratio, args, reps)
            row = f"{name:>12} {depth:>5} {len(args[0]):>7} {t_slow * 1e3:>10.2f}ms"
            if _scan_fast is not None:
                t_fast = best_time(_scan_fast.max_pair_ratio, args, reps)
                row += f" {t_fast * 1e3:>10.2f}ms {t_slow / t_fast:>7.1f}x"
            print(row)


if __name__ == "__main__":
    main()
