"""Kernel backend selection: compiled Cython core with pure-Python fallback.

Set ORBITPOLY_PURE_KERNELS=1 to force the fallback (used by the benchmark
and by tests that compare the two backends).
"""

from __future__ import annotations

import os

if os.environ.get("ORBITPOLY_PURE_KERNELS", "") not in ("", "0"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND
reduce_to_dominant = _impl.reduce_to_dominant
pair_counts_dominant = _impl.pair_counts_dominant
pair_counts_signed = _impl.pair_counts_signed
pair_counts_raw = _impl.pair_counts_raw
