"""Pick the compiled kernels when importable, else the pure-Python twins.

Set ``PLANTEDCLIQUE_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

if os.environ.get("PLANTEDCLIQUE_PURE_PYTHON", "") not in ("", "0"):
    kernels = _pykernels
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]
    except ImportError:
        kernels = _pykernels

BACKEND: str = kernels.BACKEND


def available_backends() -> dict:
    out = {"python": _pykernels}
    try:
        from . import _kernels  # type: ignore[attr-defined]
    except ImportError:
        pass
    else:
        out["cython"] = _kernels
    return out
