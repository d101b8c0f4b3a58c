"""Numba switch for the hot kernels.

Set ``KNOTQ_DISABLE_NUMBA=1`` (or have numba missing) to run every kernel as
plain Python over numpy arrays. The flag is read once at import time.
"""

import os

_DISABLED = os.environ.get("KNOTQ_DISABLE_NUMBA", "").strip().lower() not in ("", "0", "false", "no")

try:
    if _DISABLED:
        raise ImportError
    import numba

    HAVE_NUMBA = True
except ImportError:
    numba = None
    HAVE_NUMBA = False


def njit(func):
    if HAVE_NUMBA:
        return numba.njit(cache=True)(func)
    return func


def backend() -> str:
    return "numba" if HAVE_NUMBA else "python"
