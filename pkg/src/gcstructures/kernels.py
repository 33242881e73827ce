"""Select the enumeration kernel: compiled if importable, else pure Python.

Set ``GCSTRUCTURES_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if not os.environ.get("GCSTRUCTURES_PURE_PYTHON"):
    try:
        from . import _kernels as _compiled  # type: ignore[attr-defined]
    except ImportError:  # pragma: no cover - depends on the build
        pass
    else:
        _impl = _compiled
        BACKEND = "cython"

closed_masks = _impl.closed_masks
is_closed_mask = _impl.is_closed_mask

__all__ = ["BACKEND", "closed_masks", "is_closed_mask", "_kernels_py"]
