"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``MINMULT_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("MINMULT_PURE_PYTHON") == "1":
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:  # extension not built
        _impl = _kernels_py
        BACKEND = "python"

rank_mod_p = _impl.rank_mod_p
orbit_representatives = _impl.orbit_representatives

__all__ = ["BACKEND", "rank_mod_p", "orbit_representatives"]
