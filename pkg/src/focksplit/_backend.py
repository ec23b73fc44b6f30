"""Kernel backend selection.

The compiled extension is optional; the NumPy module implements the same
functions.  Selection happens once at import and is deterministic for a
given installation.
"""

from __future__ import annotations

try:
    from . import _kernels as _impl

    _BACKEND = "compiled"
except ImportError:  # extension not built on this installation
    from . import _kernels_py as _impl  # type: ignore[no-redef]

    _BACKEND = "python"


def kernel_backend() -> str:
    """Name of the active kernel backend: 'compiled' or 'python'."""
    return _BACKEND


def kernels():
    """The active kernel module."""
    return _impl
