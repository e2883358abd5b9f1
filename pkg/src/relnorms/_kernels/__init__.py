"""Pivoting kernels: the compiled extension when built, else pure Python.

Set ``RELNORMS_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pure

if os.environ.get("RELNORMS_PURE_PYTHON"):
    _impl = _pure
    BACKEND = "python"
else:
    try:
        from . import _fast as _impl
        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pure
        BACKEND = "python"

eliminate = _impl.eliminate
reduce_row = _impl.reduce_row
find_pivot_row = _impl.find_pivot_row


def backends():
    """Return ``{name: module}`` for every importable backend."""
    found = {"python": _pure}
    try:
        from . import _fast
        found["cython"] = _fast
    except ImportError:
        pass
    return found
