"""Arithmetic kernel backend selection.

The compiled Cython backend is preferred when importable; setting the
environment variable MOMSOS_PURE to a nonempty value at import time
forces the pure-Python reference backend.  Both implement the same
contract and produce identical values.
"""
from __future__ import annotations

import os

from . import pure

ELIM_COMPLETE = pure.ELIM_COMPLETE
ELIM_NEGATIVE_PIVOT = pure.ELIM_NEGATIVE_PIVOT
ELIM_MIXED_ZERO_PIVOT = pure.ELIM_MIXED_ZERO_PIVOT

if os.environ.get("MOMSOS_PURE"):
    _impl = pure
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = pure

BACKEND = "pure" if _impl is pure else "compiled"

poly_mul = _impl.poly_mul
poly_divmod = _impl.poly_divmod
mat_mul = _impl.mat_mul
mat_inv = _impl.mat_inv
sym_eliminate = _impl.sym_eliminate


def active_backend() -> str:
    """Name of the kernel backend selected at import time."""
    return BACKEND
