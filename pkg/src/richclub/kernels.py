"""Swap-kernel backend selection.

The compiled Cython kernel is used when available; the pure-Python twin is the
fallback. Set RICHCLUB_PURE_PYTHON=1 to force the fallback (used by the
benchmark and the backend-equality tests). Both backends are bit-identical.
"""

import os

if os.environ.get("RICHCLUB_PURE_PYTHON"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND_NAME = _impl.BACKEND_NAME
randomize_edges = _impl.randomize
