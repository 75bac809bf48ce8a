"""JIT switch for the bitmask kernels.

Kernels are written once in plain Python over numpy int64 arrays. When numba
is importable and ``ISODOM_DISABLE_JIT`` is unset (or "0"), they are compiled
with ``numba.njit``; otherwise the undecorated functions run as-is.
"""
import os

_flag = os.environ.get("ISODOM_DISABLE_JIT", "").strip().lower()
DISABLE_JIT = _flag not in ("", "0", "false", "no")

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

USING_NUMBA = numba is not None and not DISABLE_JIT


def njit(func):
    if USING_NUMBA:
        return numba.njit(cache=True)(func)
    return func


def backend_name():
    return "numba" if USING_NUMBA else "python"
