"""Sweep kernels with a backend selected at import.

The compiled Cython backend is used when it was built and the inputs
fit machine words; otherwise the pure-Python backend takes over.  Set
APCOVER_PURE=1 to force the pure backend regardless.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("APCOVER_PURE") == "1":
    _ckernels = None
else:
    try:
        from . import _ckernels
    except ImportError:
        _ckernels = None

BACKEND = "c" if _ckernels is not None else "python"

# The compiled sweep does uint64 arithmetic on values up to 2n.
_C_SWEEP_MAX = (1 << 62) - 1
_C_SCAN_MAX_K = 1000


def witness_sweep(lo: int, hi: int) -> list[int]:
    """All n in [lo, hi] whose constructed witness fails validation."""
    if _ckernels is not None and hi <= _C_SWEEP_MAX:
        return _ckernels.witness_sweep(lo, hi)
    return _pykernels.witness_sweep(lo, hi)


def uncovered_scan(table, elements, lo: int, hi: int, k: int) -> list[int]:
    """All n in [lo, hi] with no k-AP witness inside the tabulated set."""
    if _ckernels is not None and 3 <= k <= _C_SCAN_MAX_K:
        return _ckernels.uncovered_scan(table, elements, lo, hi, k)
    return _pykernels.uncovered_scan(table, elements, lo, hi, k)
