"""Kernel backend selection.

Two interchangeable kernel sets exist: ``_ckern`` (Cython, operates on
contiguous int64 numpy arrays) and ``_pure`` (plain Python, operates on any
indexable sequence).  The compiled set is preferred when it imported cleanly
and the data is already a contiguous int64 array; everything else runs on the
pure kernels.  ``RMQBATCH_BACKEND=py`` (or :func:`use`) forces the fallback,
which is also the instrumentable reference implementation.
"""

import os

import numpy as np

from . import _pure

try:
    from . import _ckern
except ImportError:  # extension not built
    _ckern = None

_FORCED = os.environ.get("RMQBATCH_BACKEND", "").strip().lower()
if _FORCED and _FORCED not in ("c", "py"):
    raise ValueError("RMQBATCH_BACKEND must be 'c' or 'py', got %r" % _FORCED)

_active = "c" if _ckern is not None and _FORCED != "py" else "py"
if _FORCED == "c" and _ckern is None:
    raise ImportError("RMQBATCH_BACKEND=c but the compiled extension is missing")


def compiled_available():
    return _ckern is not None


def active():
    """Name of the preferred backend: 'c' or 'py'."""
    return _active


def use(name):
    """Force a backend ('c' or 'py'). Returns the previous setting."""
    global _active
    if name not in ("c", "py"):
        raise ValueError("backend must be 'c' or 'py'")
    if name == "c" and _ckern is None:
        raise ValueError("compiled backend requested but rmqbatch._ckern is missing")
    prev = _active
    _active = name
    return prev


def is_i64(seq):
    """True when `seq` is a contiguous 1-D int64 array the C kernels accept."""
    return (
        isinstance(seq, np.ndarray)
        and seq.dtype == np.int64
        and seq.ndim == 1
        and seq.flags["C_CONTIGUOUS"]
    )


def pick(seq):
    """Kernel module to run elementwise loops over `seq` (in place)."""
    if _active == "c" and _ckern is not None and is_i64(seq):
        return _ckern
    return _pure


def kernels(name):
    """Kernel module by name, for payloads tagged at build time."""
    if name == "c":
        if _ckern is None:
            raise RuntimeError("payload was built by the compiled backend, which is missing")
        return _ckern
    return _pure
