"""numba-compiled versions of the hot loops; same contracts as ``_numpy``."""
import numpy as np
from numba import njit


@njit(cache=True)
def nc_filter(cand_lo, cand_hi, mem_lo, mem_hi):
    n_cand = cand_lo.shape[0]
    n_mem = mem_lo.shape[0]
    keep = np.ones(n_cand, dtype=np.bool_)
    for i in range(n_cand):
        a = cand_lo[i]
        b = cand_hi[i]
        for j in range(n_mem):
            c = mem_lo[j]
            d = mem_hi[j]
            if a == c or a == d or b == c or b == d:
                continue
            if (a < c < b) != (a < d < b):
                keep[i] = False
                break
    return keep


@njit(cache=True)
def _nc(x, cross, n_diag):
    out = np.uint64(0)
    for d in range(n_diag):
        if x & cross[d] == 0:
            out |= np.uint64(1) << np.uint64(d)
    return out


@njit(cache=True)
def subset_flags(masks, cross, conn_pairs, conn_masks, n_diag):
    n = masks.shape[0]
    nc1 = np.empty(n, dtype=np.uint64)
    nc2 = np.empty(n, dtype=np.uint64)
    ptolemy = np.ones(n, dtype=np.bool_)
    one = np.uint64(1)
    for i in range(n):
        x = masks[i]
        y = _nc(x, cross, n_diag)
        nc1[i] = y
        nc2[i] = _nc(y, cross, n_diag)
        for k in range(conn_pairs.shape[0]):
            d = np.uint64(conn_pairs[k, 0])
            e = np.uint64(conn_pairs[k, 1])
            if (x >> d) & one and (x >> e) & one:
                need = conn_masks[k]
                if x & need != need:
                    ptolemy[i] = False
                    break
    return nc1, nc2, ptolemy
