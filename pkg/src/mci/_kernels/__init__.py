"""Enumeration kernels with import-time backend selection.

The compiled extension (Cython) is preferred; the pure-Python twin is used
when the extension is missing or MCI_FORCE_PURE is set.  Both expose the same
two functions over packed int tables:

  find_counterexample(prog_l, prog_r, domains, bin_flat, bin_off, bin_ncols,
                      un_flat, un_off)
  ideal_closure(n, seeds, add_flat, neg, bin_flat, bin_off, un_flat, un_off)
"""

import os

import numpy as np

from . import pure as _pure

if os.environ.get("MCI_FORCE_PURE"):
    _impl = _pure
    BACKEND = "pure"
else:
    try:
        from . import _fast as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        _impl = _pure
        BACKEND = "pure"

find_counterexample = _impl.find_counterexample
ideal_closure = _impl.ideal_closure


def pack_binary_tables(tables):
    """Concatenate 2D int tables; returns (flat, offsets, ncols)."""
    flats = []
    offs = []
    ncols = []
    pos = 0
    for t in tables:
        arr = np.ascontiguousarray(t, dtype=np.int32)
        flats.append(arr.reshape(-1))
        offs.append(pos)
        ncols.append(arr.shape[1] if arr.ndim == 2 else 0)
        pos += arr.size
    flat = np.concatenate(flats) if flats else np.zeros(0, dtype=np.int32)
    return (
        flat,
        np.asarray(offs, dtype=np.int32),
        np.asarray(ncols, dtype=np.int32),
    )


def pack_unary_tables(tables):
    """Concatenate 1D int tables; returns (flat, offsets)."""
    flats = []
    offs = []
    pos = 0
    for t in tables:
        arr = np.ascontiguousarray(t, dtype=np.int32).reshape(-1)
        flats.append(arr)
        offs.append(pos)
        pos += arr.size
    flat = np.concatenate(flats) if flats else np.zeros(0, dtype=np.int32)
    return flat, np.asarray(offs, dtype=np.int32)
