"""Backend selection for the hot kernels.

The compiled Cython module is used when it imports; otherwise the
pure-Python twin is used. Setting ``QBRACH_PURE_PYTHON=1`` forces the
fallback (the test-suite runs both).
"""

import os

from . import _kernels_py

BACKEND = "python"

if not os.environ.get("QBRACH_PURE_PYTHON"):
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py
    else:
        BACKEND = "cython"
else:
    _impl = _kernels_py

expm2_entries = _impl.expm2_entries
propagate = _impl.propagate


def available_backends():
    """Map backend name -> module, for tests and benchmarks."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        out["cython"] = _kernels
    return out
