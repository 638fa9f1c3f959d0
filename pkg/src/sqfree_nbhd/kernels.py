"""Kernel selection: compiled extension when available, pure Python otherwise.

Set SQFREE_NBHD_PURE=1 to force the pure-Python kernels (used by the
benchmark and by tests that compare the two backends).
"""
from __future__ import annotations

import os

if os.environ.get("SQFREE_NBHD_PURE") == "1":
    from . import _pykernels as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pykernels as _impl

BACKEND: str = _impl.BACKEND
gf2_rank = _impl.gf2_rank
tree_canon = _impl.tree_canon
prufer_class_reps = _impl.prufer_class_reps
