"""Optional numba acceleration.

Every hot kernel exists twice: an explicit-loop version compiled with
``numba.njit`` and a vectorized numpy version. ``WOAGWO_DISABLE_JIT=1``
(read once at import) dispatches to the numpy versions; so does a missing
numba install.
"""
import os

try:
    import numba as _nb
except ImportError:  # pragma: no cover
    _nb = None

HAVE_NUMBA = _nb is not None
USE_JIT = HAVE_NUMBA and os.environ.get("WOAGWO_DISABLE_JIT", "").strip().lower() not in (
    "1",
    "true",
    "yes",
    "on",
)


def njit(func):
    """Compile ``func`` with numba when it is installed, else return it as is."""
    if HAVE_NUMBA:
        return _nb.njit(cache=True)(func)
    return func


def pick(jitted, fallback):
    return jitted if USE_JIT else fallback


def backend():
    return "numba" if USE_JIT else "numpy"
