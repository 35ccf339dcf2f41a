"""Numba switch shared by the kernel modules.

Set ``BICLIQUEKIT_NO_NUMBA=1`` to force the pure numpy/Python paths, which is
also what happens when numba is not importable.
"""

import os

_DISABLED = os.environ.get("BICLIQUEKIT_NO_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}

try:
    if _DISABLED:
        raise ImportError("numba disabled by BICLIQUEKIT_NO_NUMBA")
    from numba import njit as _njit

    HAVE_NUMBA = True
except ImportError:
    _njit = None
    HAVE_NUMBA = False

numba_default = {
    "nogil": True,
    "cache": True,
    "fastmath": False,
    "boundscheck": False,
}


def njit(func):
    """Compile ``func`` with numba when enabled, otherwise return ``None``.

    Callers keep their fallback and pick via ``HAVE_NUMBA``.
    """
    if not HAVE_NUMBA:
        return None
    return _njit(**numba_default)(func)


def backend_name() -> str:
    return "numba" if HAVE_NUMBA else "python"
