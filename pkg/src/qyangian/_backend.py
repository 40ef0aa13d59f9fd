"""Select the straightening kernel at import time.

The compiled extension is used when it was built; setting
``QYANGIAN_PURE_PYTHON=1`` forces the pure-Python kernel.
"""

import os

from . import _kernel_py

if os.environ.get("QYANGIAN_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernel_py
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _kernel_py

Straightener = _impl.Straightener
BACKEND: str = _impl.BACKEND
PyStraightener = _kernel_py.Straightener
