"""Step-kernel selection.

The compiled kernel is used when the extension was built; otherwise the
pure-Python one. Set ``EVOC_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _pykernel

try:
    from . import _ckernel
except ImportError:  # extension not built
    _ckernel = None

BACKENDS: dict[str, ModuleType] = {"python": _pykernel}
if _ckernel is not None:
    BACKENDS["cython"] = _ckernel

if os.environ.get("EVOC_PURE_PYTHON", "") not in ("", "0") or _ckernel is None:
    DEFAULT_BACKEND = "python"
else:
    DEFAULT_BACKEND = "cython"


def get_step_kernel(backend: str | None = None):
    name = backend or DEFAULT_BACKEND
    try:
        return BACKENDS[name].step_agents
    except KeyError:
        raise ValueError(f"kernel backend {name!r} unavailable; have {sorted(BACKENDS)}") from None
