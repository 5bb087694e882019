"""Backend selection for the hot loops.

The numba backend is used when numba imports cleanly, unless the environment
variable ``INFGON_NUMBA`` is set to ``0``; the numpy backend is the fallback
and the reference the tests compare against.
"""
import os
from types import SimpleNamespace

import numpy as np

from . import _numpy


def _load_numba():
    try:
        from . import _numba
    except ImportError:
        return None
    return _numba


def available_backends() -> list[str]:
    return ["numpy"] + (["numba"] if _load_numba() is not None else [])


def get_backend(name: str):
    if name == "numpy":
        mod = _numpy
    elif name == "numba":
        mod = _load_numba()
        if mod is None:
            raise ImportError("numba backend requested but numba is not importable")
    else:
        raise ValueError(f"unknown backend {name!r}")
    return SimpleNamespace(name=name, nc_filter=mod.nc_filter,
                           subset_flags=mod.subset_flags)


def _default_name() -> str:
    if os.environ.get("INFGON_NUMBA", "1") == "0":
        return "numpy"
    return "numba" if _load_numba() is not None else "numpy"


backend = get_backend(_default_name())


def nc_filter(cand_lo, cand_hi, mem_lo, mem_hi):
    return backend.nc_filter(np.ascontiguousarray(cand_lo, dtype=np.int64),
                             np.ascontiguousarray(cand_hi, dtype=np.int64),
                             np.ascontiguousarray(mem_lo, dtype=np.int64),
                             np.ascontiguousarray(mem_hi, dtype=np.int64))


def subset_flags(masks, cross, conn_pairs, conn_masks, n_diag):
    conn_pairs = np.asarray(conn_pairs, dtype=np.int64).reshape(-1, 2)
    return backend.subset_flags(np.ascontiguousarray(masks, dtype=np.uint64),
                                np.ascontiguousarray(cross, dtype=np.uint64),
                                conn_pairs,
                                np.ascontiguousarray(conn_masks, dtype=np.uint64),
                                n_diag)
