"""Kernel backend selection.

Prefers the compiled extension (:mod:`bibliofit._fastkernels`) and falls back
to the pure-Python kernels when the extension was not built. Set
``BIBLIOFIT_PURE_PYTHON=1`` to force the fallback, e.g. for benchmarking or
debugging. Callers go through this module's attributes so the choice is made
once, at import time.
"""

import os

from . import _purekernels

if os.environ.get("BIBLIOFIT_PURE_PYTHON", "") not in ("", "0"):
    _impl = _purekernels
else:
    try:
        from . import _fastkernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _purekernels

FAMILY_HIRSCH = _purekernels.FAMILY_HIRSCH
FAMILY_ER = _purekernels.FAMILY_ER
FAMILY_GS = _purekernels.FAMILY_GS

h_index_core = _impl.h_index_core
hm_core = _impl.hm_core
model_chi2 = _impl.model_chi2


def active_backend() -> str:
    """Name of the kernel implementation in use: 'cython' or 'python'."""
    return _impl.BACKEND_NAME
