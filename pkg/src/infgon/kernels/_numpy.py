"""Vectorised numpy versions of the hot loops (the reference backend)."""
import numpy as np


def nc_filter(cand_lo, cand_hi, mem_lo, mem_hi):
    """Mask of candidates crossing none of the members.

    Diagonals are given by linear indices with ``lo < hi``; two diagonals
    cross when exactly one endpoint of one lies strictly inside the other.
    """
    keep = np.ones(len(cand_lo), dtype=np.bool_)
    if len(mem_lo) == 0 or len(cand_lo) == 0:
        return keep
    c = mem_lo[None, :]
    d = mem_hi[None, :]
    # chunk the candidates so the pairwise matrices stay around 16M entries
    rows = max(1, (1 << 24) // len(mem_lo))
    for start in range(0, len(cand_lo), rows):
        a = cand_lo[start:start + rows, None]
        b = cand_hi[start:start + rows, None]
        c_in = (a < c) & (c < b)
        d_in = (a < d) & (d < b)
        shared = (a == c) | (a == d) | (b == c) | (b == d)
        hit = (c_in != d_in) & ~shared
        keep[start:start + rows] = ~hit.any(axis=1)
    return keep


def subset_flags(masks, cross, conn_pairs, conn_masks, n_diag):
    """For bitmask subsets compute nc, nc(nc) and the Ptolemy predicate.

    ``cross[d]`` is the bitmask of diagonals crossing ``d``; ``conn_pairs``
    lists crossing pairs ``(d, e)`` and ``conn_masks`` the connecting
    diagonals each pair demands.
    """
    masks = np.asarray(masks, dtype=np.uint64)
    one = np.uint64(1)
    zero = np.uint64(0)

    def nc(x):
        out = np.zeros_like(x)
        for d in range(n_diag):
            free = (x & cross[d]) == zero
            out |= np.where(free, one << np.uint64(d), zero)
        return out

    nc1 = nc(masks)
    nc2 = nc(nc1)
    ptolemy = np.ones(len(masks), dtype=np.bool_)
    for k in range(len(conn_pairs)):
        d, e = conn_pairs[k]
        both = ((masks >> np.uint64(d)) & one).astype(bool) & \
               ((masks >> np.uint64(e)) & one).astype(bool)
        need = conn_masks[k]
        ptolemy &= ~(both & ((masks & need) != need))
    return nc1, nc2, ptolemy
