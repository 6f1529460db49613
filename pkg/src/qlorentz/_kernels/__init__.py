"""Numeric kernels with a compiled fast path.

The Cython module ``_core`` is built at install time when a compiler is
available.  Set ``QLORENTZ_PURE=1`` to skip it and force the pure-Python
implementation (useful for debugging and for benchmarking the two
against each other).
"""

import os

from ._pure import BRIDGE_STEP, Z_ASYM_MIN, Z_SERIES_MAX

if os.environ.get("QLORENTZ_PURE"):
    from . import _pure as _impl

    BACKEND = "pure"
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _pure as _impl

        BACKEND = "pure"

k0 = _impl.k0
k0_series = _impl.k0_series
k0_bridge = _impl.k0_bridge
k0_asymptotic = _impl.k0_asymptotic

__all__ = [
    "BACKEND",
    "BRIDGE_STEP",
    "Z_ASYM_MIN",
    "Z_SERIES_MAX",
    "k0",
    "k0_series",
    "k0_bridge",
    "k0_asymptotic",
]
