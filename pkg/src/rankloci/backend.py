"""Kernel backend selection.

The compiled extension is preferred when importable; the pure-Python twin is
the fallback.  ``RANKLOCI_BACKEND=py`` forces the fallback, ``=c`` requires
the extension (ImportError if it was not built).  Both backends produce
bit-identical results.
"""

from __future__ import annotations

import os

_forced = os.environ.get("RANKLOCI_BACKEND", "").strip().lower()

if _forced == "py":
    from . import _pykernels as _impl

    BACKEND = "py"
elif _forced == "c":
    from . import _kernels as _impl  # type: ignore[no-redef]

    BACKEND = "c"
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "c"
    except ImportError:
        from . import _pykernels as _impl  # type: ignore[no-redef]

        BACKEND = "py"

modp_rref = _impl.modp_rref
obj_rref = _impl.obj_rref
