"""Backend selection for the solver's hot kernel.

The compiled extension is preferred when it was built; the numpy fallback is
used otherwise. Set TEMPREL_PURE_PYTHON=1 to force the fallback (useful for
benchmarking and debugging). Both backends implement the identical contract
and produce identical assignments.
"""

from __future__ import annotations

import os

from . import _kernels_py

_FORCE_PURE = os.environ.get("TEMPREL_PURE_PYTHON", "") not in ("", "0")

if _FORCE_PURE:
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

lr_iteration = _impl.lr_iteration


def backend_name() -> str:
    """Name of the active kernel backend: "cython" or "python"."""
    return BACKEND


def has_compiled_backend() -> bool:
    """True when the compiled extension is importable (even if not active)."""
    try:
        from . import _kernels  # noqa: F401

        return True
    except ImportError:
        return False
