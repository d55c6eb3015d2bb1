"""Backend selection for the hot numeric loops.

The compiled extension ``_ckernels`` is used when it imports; otherwise the
pure-Python ``_pykernels`` is used.  Setting ``FROBESSEL_PURE_PYTHON=1``
forces the fallback (useful for benchmarking and debugging).
"""
import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("FROBESSEL_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels

gk15 = _impl.gk15
theta_series = _impl.theta_series
j_series = _impl.j_series
j_series_derivative = _impl.j_series_derivative
hyp_series = _impl.hyp_series

__all__ = [
    "BACKEND",
    "gk15",
    "theta_series",
    "j_series",
    "j_series_derivative",
    "hyp_series",
]
