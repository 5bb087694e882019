"""Finite window views: the diagonals with both endpoint positions in ``[-W, W]``.

Crossing a window diagonal only depends on where the other diagonal's
endpoints sit relative to window vertices, so a member endpoint beyond the
window can be clamped to position ``W+1`` (or ``-W-1``) on its arc without
changing the answer.  A family has finitely many distinct clamped members,
which makes "crosses no member of S" exact for window candidates even though
S is infinite.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Optional

import numpy as np

from . import kernels
from .cyclic import Vertex, ZModel
from .diagonals import (Diagonal, DiagonalFamily, DiagonalSet, crosses,
                        family_member, first_crossing_n)


class WindowIndex:
    """Linear indices for vertices with ``|pos| <= R + 1``, in the cut order."""

    def __init__(self, model: ZModel, R: int):
        self.model = model
        self.R = R
        self.width = 2 * R + 3

    def index(self, v: Vertex) -> int:
        p = max(-self.R - 1, min(self.R + 1, v.pos))
        return v.arc * self.width + p + self.R + 1

    def vertex(self, i: int) -> Vertex:
        arc, off = divmod(int(i), self.width)
        return Vertex(arc, off - self.R - 1)

    def pair(self, d: Diagonal) -> tuple[int, int]:
        a, b = self.index(d.x0), self.index(d.x1)
        return (a, b) if a < b else (b, a)


def window_vertices(model: ZModel, W: int) -> list[Vertex]:
    return [Vertex(a, p) for a in range(model.limit_count) for p in range(-W, W + 1)]


@lru_cache(maxsize=32)
def _window_pairs(N: int, W: int) -> tuple[np.ndarray, np.ndarray]:
    # all window diagonals as index pairs of WindowIndex(model, W), lo < hi
    width = 2 * W + 3
    idx = np.array([a * width + p + W + 1 for a in range(N) for p in range(-W, W + 1)],
                   dtype=np.int64)
    lo, hi = np.triu_indices(len(idx), k=1)
    lo, hi = idx[lo], idx[hi]
    same_arc = (lo // width) == (hi // width)
    ok = ~(same_arc & (hi - lo <= 1))
    lo, hi = lo[ok], hi[ok]
    lo.setflags(write=False)
    hi.setflags(write=False)
    return lo, hi


def window_diagonals(model: ZModel, W: int) -> list[Diagonal]:
    ix = WindowIndex(model, W)
    lo, hi = _window_pairs(model.limit_count, W)
    return [Diagonal(ix.vertex(a), ix.vertex(b)) for a, b in zip(lo.tolist(), hi.tolist())]


def _family_clamp_range(F: DiagonalFamily, W: int) -> int:
    """Last parameter worth enumerating: beyond it the clamped member is constant."""
    stop = F.min_n
    for t in F.terms:
        if t.is_tail:
            # first n with the tail permanently beyond the window
            if t.coef > 0:
                n = (W - t.const) // t.coef + 1
            else:
                n = (t.const + W) // (-t.coef) + 1
            stop = max(stop, n)
    return stop


def clamped_members(S: DiagonalSet, ix: WindowIndex) -> set[tuple[int, int]]:
    out = set()
    for d in S.explicit:
        a, b = ix.pair(d)
        if a != b:
            out.add((a, b))
    for F in S.families:
        for n in range(F.min_n, _family_clamp_range(F, ix.R) + 1):
            a, b = ix.pair(family_member(F, n))
            if a != b:
                out.add((a, b))
    return out


def _as_arrays(pairs: Iterable[tuple[int, int]]):
    arr = np.array(sorted(pairs), dtype=np.int64).reshape(-1, 2)
    return arr[:, 0], arr[:, 1]


def nc_mask(S: DiagonalSet, W: int) -> np.ndarray:
    """Mask over the window-``W`` diagonals of those crossing no member of ``S``."""
    ix = WindowIndex(S.model, W)
    lo, hi = _window_pairs(S.model.limit_count, W)
    m_lo, m_hi = _as_arrays(clamped_members(S, ix))
    return kernels.nc_filter(lo, hi, m_lo, m_hi)


def _to_diagonals(ix, lo, hi, mask) -> list[Diagonal]:
    return [Diagonal(ix.vertex(a), ix.vertex(b))
            for a, b in zip(lo[mask].tolist(), hi[mask].tolist())]


def nc_window(S: DiagonalSet, W: int) -> list[Diagonal]:
    """Window-``W`` diagonals crossing no member of ``S`` (members anywhere)."""
    if W < 2:
        raise ValueError(f"window must be >= 2, got {W}")
    ix = WindowIndex(S.model, W)
    lo, hi = _window_pairs(S.model.limit_count, W)
    return _to_diagonals(ix, lo, hi, nc_mask(S, W))


def nc_of_window_set(model: ZModel, X: Iterable[Diagonal], W: int) -> list[Diagonal]:
    """Window-``W`` diagonals crossing no diagonal of the finite list ``X``."""
    return nc_window(DiagonalSet(model, tuple(X)), W)


def nc2_window(S: DiagonalSet, W: int) -> list[Diagonal]:
    """Window-``W`` part of nc(nc(S)), with nc(S) taken on the window ``2W``."""
    outer = nc_window(S, 2 * W)
    return nc_of_window_set(S.model, outer, W)


def crossing_member(S: DiagonalSet, D: Diagonal) -> Optional[Diagonal]:
    """Some member of ``S`` crossing ``D`` (the first found), exact."""
    for X in S.explicit:
        if crosses(X, D):
            return X
    for F in S.families:
        n = first_crossing_n(D, F)
        if n is not None:
            return family_member(F, n)
    return None
