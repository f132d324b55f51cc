"""Pairwise interval-scan kernels.

The hot loop of the supremum search evaluates a closed-form ratio on
every pair of grid endpoints; both backends consume precomputed prefix
integrals so each pair costs O(1).  The compiled extension is preferred
when it was built; the numpy implementation is the fallback.  Set
SHARP_WEIGHTS_KERNEL=cython or =numpy to force a backend (forcing
cython raises if the extension is unavailable).
"""

import os

_choice = os.environ.get("SHARP_WEIGHTS_KERNEL", "").lower()
if _choice not in ("", "cython", "numpy"):
    raise ImportError(
        f"SHARP_WEIGHTS_KERNEL must be 'cython' or 'numpy', got {_choice!r}"
    )

if _choice == "numpy":
    from ._scan_slow import max_pair_ratio

    KERNEL_BACKEND = "numpy"
else:
    try:
        from ._scan_fast import max_pair_ratio

        KERNEL_BACKEND = "cython"
    except ImportError:
        if _choice == "cython":
            raise
        from ._scan_slow import max_pair_ratio

        KERNEL_BACKEND = "numpy"

__all__ = ["KERNEL_BACKEND", "max_pair_ratio"]
