"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; setting the
environment variable ``DICOMP_PURE=1`` forces the pure-Python kernels
(useful for the backend benchmark and for cross-checking).
"""

from __future__ import annotations

import os

from . import _pure

if os.environ.get("DICOMP_PURE") == "1":
    _impl = _pure
    BACKEND = "pure"
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]
        BACKEND = "compiled"
    except ImportError:
        _impl = _pure
        BACKEND = "pure"

class_labels = _impl.class_labels
compose_scan = _impl.compose_scan
