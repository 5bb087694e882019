"""Brute force on finite polygons, used as ground truth for the symbolic engine.

Subsets of the diagonals of a P-gon are bitmasks (P <= 12 keeps the
P(P-3)/2 diagonals inside one uint64).  The subset loop runs in the selected
kernel backend; everything used to cross-check that loop (triangulation
counts, the embedding of window views) is written independently in plain
Python.
"""
from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import kernels
from .conditions import check_ptolemy
from .cyclic import Vertex
from .diagonals import Diagonal, DiagonalSet, crosses as engine_crosses, truncate_window
from .errors import InvalidInputError
from .window import nc_of_window_set, window_diagonals

MAX_BITMASK_POLYGON = 12
EXHAUSTIVE_LIMIT = 7


@dataclass(frozen=True)
class Polygon:
    vertex_count: int

    def __post_init__(self):
        if self.vertex_count < 4:
            raise InvalidInputError(f"a polygon needs at least 4 vertices, got {self.vertex_count}")


def all_diagonals(P: int) -> list[tuple[int, int]]:
    """Non-neighbour pairs ``(i, j)``, ``i < j``, of the vertices ``0..P-1``."""
    Polygon(P)
    return [(i, j) for i in range(P) for j in range(i + 2, P) if not (i == 0 and j == P - 1)]


def poly_crosses(d, e) -> bool:
    a, b = d
    c, f = e
    return a < c < b < f or c < a < f < b


def _tables(P: int):
    diags = all_diagonals(P)
    index = {d: k for k, d in enumerate(diags)}
    D = len(diags)
    cross = np.zeros(D, dtype=np.uint64)
    pairs, needs = [], []
    for k, d in enumerate(diags):
        for l, e in enumerate(diags):
            if poly_crosses(d, e):
                cross[k] |= np.uint64(1) << np.uint64(l)
                if k < l:
                    need = 0
                    for x in d:
                        for y in e:
                            c = (min(x, y), max(x, y))
                            if c in index:
                                need |= 1 << index[c]
                    pairs.append((k, l))
                    needs.append(need)
    return diags, cross, np.array(pairs, dtype=np.int64).reshape(-1, 2), \
        np.array(needs, dtype=np.uint64)


def count_triangulations(P: int) -> int:
    """Noncrossing (P-3)-subsets, counted by plain enumeration."""
    diags = all_diagonals(P)
    total = 0
    for combo in itertools.combinations(diags, P - 3):
        if all(not poly_crosses(d, e) for d, e in itertools.combinations(combo, 2)):
            total += 1
    return total


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


@dataclass
class FiniteReport:
    polygon: int
    diagonals: int
    subsets: int
    exhaustive: bool
    ptolemy_diagrams: int
    nc2_fixed: int
    triangulations: int
    triangulations_enumerated: Optional[int]
    catalan: int
    equivalence_violations: list = field(default_factory=list)
    galois_violations: list = field(default_factory=list)
    triangulation_size_violations: list = field(default_factory=list)
    backend: str = ""
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        counts_ok = (not self.exhaustive or self.triangulations == self.catalan) and \
            (self.triangulations_enumerated in (None, self.catalan))
        return counts_ok and not (self.equivalence_violations or self.galois_violations
                                  or self.triangulation_size_violations)

    def lines(self) -> list[str]:
        mode = "exhaustive" if self.exhaustive else "sampled"
        out = [f"polygon={self.polygon} diagonals={self.diagonals} subsets={self.subsets} ({mode})",
               f"ptolemy_diagrams={self.ptolemy_diagrams} nc2_fixed={self.nc2_fixed}"]
        tri = f"triangulations={self.triangulations}"
        if self.triangulations_enumerated is not None:
            tri += f" enumerated={self.triangulations_enumerated}"
        out.append(tri + f" catalan={self.catalan}")
        out.append(f"equivalence_violations={len(self.equivalence_violations)} "
                   f"galois_violations={len(self.galois_violations)}")
        out.append(f"backend={self.backend} seconds={self.seconds:.3f}")
        return out


def finite_report(P: int, exhaustive: Optional[bool] = None, samples: int = 20000,
                  seed: int = 0, enumerate_triangulations: Optional[bool] = None) -> FiniteReport:
    Polygon(P)
    if P > MAX_BITMASK_POLYGON:
        raise InvalidInputError(f"bitmask oracle supports P <= {MAX_BITMASK_POLYGON}, got {P}")
    if exhaustive is None:
        exhaustive = P <= EXHAUSTIVE_LIMIT
    if enumerate_triangulations is None:
        enumerate_triangulations = P <= 8
    t0 = time.perf_counter()
    diags, cross, pairs, needs = _tables(P)
    D = len(diags)
    if exhaustive:
        masks = np.arange(1 << D, dtype=np.uint64)
    else:
        rng = np.random.default_rng(seed)
        bits = rng.integers(0, 2, size=(samples, D), dtype=np.uint64)
        weights = np.uint64(1) << np.arange(D, dtype=np.uint64)
        masks = (bits * weights).sum(axis=1, dtype=np.uint64)
    nc1, nc2, ptol = kernels.subset_flags(masks, cross, pairs, needs, D)
    nc3, _, _ = kernels.subset_flags(nc2, cross, pairs, needs, D)

    fixed = nc2 == masks
    eq_bad = np.nonzero(fixed != ptol)[0]
    galois_bad = np.nonzero(((masks & ~nc2) != 0) | (nc3 != nc1))[0]
    tri = nc1 == masks
    sizes = np.array([bin(int(m)).count("1") for m in masks[tri]], dtype=np.int64)
    size_bad = masks[tri][sizes != P - 3]
    n_tri = int(tri.sum())
    # every triangulation must also pass the Ptolemy test (it has no crossings)
    tri_not_ptolemy = masks[tri & ~ptol]
    return FiniteReport(
        polygon=P, diagonals=D, subsets=len(masks), exhaustive=exhaustive,
        ptolemy_diagrams=int(ptol.sum()), nc2_fixed=int(fixed.sum()),
        triangulations=n_tri,
        triangulations_enumerated=count_triangulations(P) if enumerate_triangulations else None,
        catalan=catalan(P - 2),
        equivalence_violations=[int(masks[i]) for i in eq_bad[:10]],
        galois_violations=[int(masks[i]) for i in galois_bad[:10]],
        triangulation_size_violations=[int(m) for m in list(size_bad[:10]) + list(tri_not_ptolemy[:10])],
        backend=kernels.backend.name,
        seconds=time.perf_counter() - t0,
    )


# -- embedding window views into a polygon ------------------------------------------

@dataclass
class CrossValidation:
    polygon: int
    members: int
    checks: int
    disagreements: list = field(default_factory=list)

    @property
    def agree(self) -> bool:
        return not self.disagreements


def _embedding(N: int, W: int) -> dict:
    """Polygon index of each window vertex; one extra vertex stands in for each limit point."""
    pos = {}
    k = 0
    for arc in range(N):
        k += 1  # the stand-in for the limit point at the start of this arc
        for p in range(-W, W + 1):
            pos[Vertex(arc, p)] = k
            k += 1
    return pos


def _bit_nc(diags, X: int) -> int:
    out = 0
    members = [d for k, d in enumerate(diags) if X >> k & 1]
    for k, d in enumerate(diags):
        if not any(poly_crosses(d, e) or poly_crosses(e, d) for e in members):
            out |= 1 << k
    return out


def _bit_ptolemy(diags, index, X: int) -> bool:
    members = [d for k, d in enumerate(diags) if X >> k & 1]
    for d, e in itertools.combinations(members, 2):
        if poly_crosses(d, e) or poly_crosses(e, d):
            for x in d:
                for y in e:
                    c = (min(x, y), max(x, y))
                    if c in index and not X >> index[c] & 1:
                        return False
    return True


def cross_validate(S: DiagonalSet, W: int,
                   crosses: Callable[[Diagonal, Diagonal], bool] = engine_crosses) -> CrossValidation:
    """Compare window predicates of the engine with brute force on the embedding polygon.

    Compared: the crossing table between window members of ``S`` and all
    window diagonals, nc of the window members, and the Ptolemy predicate of
    the window members.  ``crosses`` can be replaced to inject a fault.
    """
    N = S.model.limit_count
    emb = _embedding(N, W)
    P = N * (2 * W + 2)
    members = truncate_window(S, W)
    everything = window_diagonals(S.model, W)

    def poly(d: Diagonal):
        a, b = emb[d.x0], emb[d.x1]
        return (a, b) if a < b else (b, a)

    diags = all_diagonals(P)
    index = {d: k for k, d in enumerate(diags)}
    report = CrossValidation(P, len(members), 0)
    for X in members:
        for Y in everything:
            report.checks += 1
            mine = bool(crosses(X, Y))
            px, py = poly(X), poly(Y)
            theirs = poly_crosses(px, py) or poly_crosses(py, px)
            if mine != theirs:
                report.disagreements.append(f"crossing {X} x {Y}: engine {mine}, polygon {theirs}")

    bits = 0
    for X in members:
        bits |= 1 << index[poly(X)]
    oracle_nc = _bit_nc(diags, bits)
    engine_nc = {poly(d) for d in nc_of_window_set(S.model, members, W)}
    for Y in everything:
        report.checks += 1
        py = poly(Y)
        theirs = bool(oracle_nc >> index[py] & 1)
        if (py in engine_nc) != theirs:
            report.disagreements.append(f"nc membership of {Y}: engine {py in engine_nc}, polygon {theirs}")

    report.checks += 1
    mine = check_ptolemy(DiagonalSet(S.model, tuple(members))).ok
    theirs = _bit_ptolemy(diags, index, bits)
    if mine != theirs:
        report.disagreements.append(f"Ptolemy on window members: engine {mine}, polygon {theirs}")
    return report
