"""Convergence and closure conditions on presented diagonal sets.

Every infinite sequence of distinct members of a presented set has a
subsequence lying in a single family (there are finitely many families and
explicit members), and the endpoints of a family are monotone.  So the limit
behaviour of all sequences from the set is captured by the finitely many
family limit pairs, which makes the fountain, leapfrog and PC checks below
exact without any bound.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Optional

from .certificate import Certificate, conjunction
from .cyclic import (BoundaryPoint, LimitPoint, Vertex, ZModel, cyclic_ordered,
                     in_interval, succ)
from .diagonals import (Diagonal, DiagonalFamily, DiagonalSet, Fixed, TailUp,
                        clip_ranges, crosses, crossing_pairs, family_member,
                        intersect_ranges, is_diagonal, set_contains,
                        term_ranges, truncate_window)
from .errors import InvalidInputError
from .window import nc2_window


class Side(enum.Enum):
    BELOW = "Below"
    ABOVE = "Above"
    BOTH = "Both"


@dataclass(frozen=True)
class LimitDatum:
    target: BoundaryPoint
    side: Side

    def __post_init__(self):
        if (self.side is Side.BOTH) != isinstance(self.target, Vertex):
            raise InvalidInputError("side Both goes with vertex targets only")

    def approaches_from_below(self) -> bool:
        return self.side is not Side.ABOVE

    def approaches_from_above(self) -> bool:
        return self.side is not Side.BELOW

    def __str__(self):
        if self.side is Side.BOTH:
            return f"vertex {self.target}"
        return f"{self.target} {self.side.value}"


def term_limit(model: ZModel, term) -> LimitDatum:
    if isinstance(term, Fixed):
        return LimitDatum(term.vertex, Side.BOTH)
    v = Vertex(term.arc, 0)
    if isinstance(term, TailUp):
        return LimitDatum(model.limit_up(v), Side.BELOW)
    return LimitDatum(model.limit_down(v), Side.ABOVE)


def family_limit_data(model: ZModel, F: DiagonalFamily) -> tuple[LimitDatum, LimitDatum]:
    return term_limit(model, F.left), term_limit(model, F.right)


def _oriented_pairs(S: DiagonalSet):
    """Both orientations of every family limit pair, with the family."""
    for F in S.families:
        a, b = family_limit_data(S.model, F)
        yield a, b, F
        yield b, a, F


# -- fountains and leapfrogs ----------------------------------------------------

@dataclass(frozen=True)
class Features:
    limit: LimitPoint
    right_fountains: frozenset
    left_fountains: frozenset
    leapfrog: bool

    @property
    def fountains(self) -> frozenset:
        return self.right_fountains & self.left_fountains

    @property
    def has_fountain_or_leapfrog(self) -> bool:
        return bool(self.fountains) or self.leapfrog

    def __str__(self):
        parts = []
        for z in sorted(self.fountains, key=lambda v: v.key):
            parts.append(f"fountain at {z}")
        for z in sorted(self.right_fountains - self.fountains, key=lambda v: v.key):
            parts.append(f"right fountain at {z}")
        for z in sorted(self.left_fountains - self.fountains, key=lambda v: v.key):
            parts.append(f"left fountain at {z}")
        if self.leapfrog:
            parts.append("leapfrog")
        return f"{self.limit}: " + (", ".join(parts) if parts else "none")


def detect_features(S: DiagonalSet) -> dict[int, Features]:
    right = {i: set() for i in range(S.model.limit_count)}
    left = {i: set() for i in range(S.model.limit_count)}
    leap = {i: False for i in range(S.model.limit_count)}
    for a, b, _ in _oriented_pairs(S):
        if a.side is Side.BOTH and isinstance(b.target, LimitPoint):
            (right if b.side is Side.BELOW else left)[b.target.index].add(a.target)
        elif (a.side is Side.BELOW and b.side is Side.ABOVE
              and a.target == b.target):
            leap[a.target.index] = True
    return {i: Features(LimitPoint(i), frozenset(right[i]), frozenset(left[i]), leap[i])
            for i in range(S.model.limit_count)}


# -- PC conditions ---------------------------------------------------------------

@dataclass(frozen=True)
class LimitPairWitness:
    first: LimitDatum
    second: LimitDatum
    family: DiagonalFamily

    def __str__(self):
        return f"{self.first}, {self.second} (family {self.family})"


def _has_above_witness(S: DiagonalSet, p: BoundaryPoint, q: BoundaryPoint) -> bool:
    for a, b, _ in _oriented_pairs(S):
        if (a.target == p and a.approaches_from_above()
                and b.target == q and b.approaches_from_above()):
            return True
    return False


def _check_pc(S: DiagonalSet, name: str, hypothesis: Callable) -> Certificate:
    # explicit members give constant sequences, which are their own witnesses
    for a, b, F in _oriented_pairs(S):
        if a.target == b.target or not a.approaches_from_below():
            continue
        if hypothesis(b) and not _has_above_witness(S, a.target, b.target):
            return Certificate.fails(name, LimitPairWitness(a, b, F))
    return Certificate.holds(name)


def check_PC1(S: DiagonalSet) -> Certificate:
    return _check_pc(S, "PC1", lambda b: b.approaches_from_below())


def check_PC2(S: DiagonalSet) -> Certificate:
    return _check_pc(S, "PC2", lambda b: b.approaches_from_above())


def check_PC(S: DiagonalSet) -> Certificate:
    return _check_pc(S, "PC", lambda b: True)


# -- Ptolemy -----------------------------------------------------------------------

@dataclass(frozen=True)
class PtolemyWitness:
    crossing: tuple
    missing: tuple

    def __str__(self):
        X, Y = self.crossing
        head = f"missing {self.missing[0]}"
        if len(self.missing) > 1:
            head += " (also " + ", ".join(str(d) for d in self.missing[1:]) + ")"
        return f"{head} for crossing {X} x {Y}"


def _connecting(X: Diagonal, Y: Diagonal) -> list[Diagonal]:
    out = {Diagonal(x, y) for x in X for y in Y if is_diagonal(x, y)}
    return sorted(out)


def _missing_for(S: DiagonalSet, X: Diagonal, Y: Diagonal) -> Optional[PtolemyWitness]:
    missing = tuple(d for d in _connecting(X, Y) if not set_contains(S, d))
    return PtolemyWitness((X, Y), missing) if missing else None


def size_scale(S: DiagonalSet, extra=()) -> int:
    K = max((abs(v.pos) for d in S.explicit for v in d), default=0)
    for v in extra:
        K = max(K, abs(v.pos))
    for F in S.families:
        for t in F.terms:
            K = max(K, abs(t.const) + abs(t.coef) * F.min_n)
    return K


def _period(S: DiagonalSet, term) -> int:
    steps = [abs(t.coef) for F in S.families for t in F.terms if t.is_tail]
    if term.is_tail:
        steps.append(abs(term.coef))
    return math.lcm(1, *steps)


def _star_horizon(S: DiagonalSet, v: Vertex, term) -> int:
    """Parameter past which coverage of ``{v, term(n)}`` is periodic in ``n``."""
    extra = [v]
    for F in S.families:
        if F.left.is_tail and F.right.is_tail:
            for t, o in ((F.left, F.right), (F.right, F.left)):
                m = t.solve(v)
                if m is not None and m >= F.min_n:
                    extra.append(o.at(m))
    K = size_scale(S, extra)
    return 2 * K + abs(term.const) + 2


def star_uncovered(S: DiagonalSet, v: Vertex, term, lo: int, hi: Optional[int]) -> Optional[Diagonal]:
    """First diagonal ``{v, term(n)}`` with ``lo <= n <= hi`` missing from ``S``.

    ``hi=None`` means unbounded; past a computable horizon membership is
    periodic in ``n``, so scanning one further period decides it exactly.
    """
    if hi is None:
        hi = max(lo, _star_horizon(S, v, term)) + _period(S, term)
    for n in range(lo, hi + 1):
        w = term.at(n)
        if is_diagonal(v, w):
            D = Diagonal(v, w)
            if not set_contains(S, D):
                return D
    return None


def _crossing_n_ranges(model, F: DiagonalFamily, D: Diagonal):
    """Exact parameter ranges of members of ``F`` crossing ``D``."""
    a, b = D.x0, D.x1
    out = []
    for s0, s1 in (((a, b), (b, a)), ((b, a), (a, b))):
        r0 = term_ranges(model, F.left, *s0, False, False)
        r1 = term_ranges(model, F.right, *s1, False, False)
        out.extend(clip_ranges(intersect_ranges(r0, r1), F.min_n))
    return out


def _ptolemy_explicit_family(S, D, F):
    for lo, hi in _crossing_n_ranges(S.model, F, D):
        for v in D:
            for t in F.terms:
                if not t.is_tail:
                    w = t.vertex
                    if is_diagonal(v, w) and not set_contains(S, Diagonal(v, w)):
                        return _missing_for(S, D, family_member(F, lo))
                    continue
                bad = star_uncovered(S, v, t, lo, hi)
                if bad is not None:
                    n = t.solve(bad.other(v))
                    return _missing_for(S, D, family_member(F, n))
    return None


def _ptolemy_family_pair_exact(S, F, G) -> bool:
    """Whether every connecting diagonal of every crossing pair is certainly covered.

    Only the shapes with at most one moving endpoint are settled here; a
    ``False`` means "not settled", not "fails".
    """
    for s in F.terms:
        for t in G.terms:
            if s.is_tail and t.is_tail:
                return False
            if not s.is_tail and not t.is_tail:
                v, w = s.vertex, t.vertex
                if is_diagonal(v, w) and not set_contains(S, Diagonal(v, w)):
                    return False
                continue
            fixed, tail, fam = (s, t, G) if t.is_tail else (t, s, F)
            if star_uncovered(S, fixed.vertex, tail, fam.min_n, None) is not None:
                return False
    return True


def _ptolemy_family_pair_bounded(S, F, G, B):
    for n in range(F.min_n, B + 1):
        X = family_member(F, n)
        for m in range(G.min_n, B + 1):
            Y = family_member(G, m)
            if crosses(X, Y):
                w = _missing_for(S, X, Y)
                if w is not None:
                    return w
    return None


def check_ptolemy(S: DiagonalSet, bound: int = 64) -> Certificate:
    if bound < 1:
        raise InvalidInputError(f"bound must be >= 1, got {bound}")
    name = "Ptolemy"
    E = list(S.explicit)
    for i, X in enumerate(E):
        for Y in E[i + 1:]:
            if crosses(X, Y):
                w = _missing_for(S, X, Y)
                if w is not None:
                    return Certificate.fails(name, w)
    for D in E:
        for F in S.families:
            w = _ptolemy_explicit_family(S, D, F)
            if w is not None:
                return Certificate.fails(name, w)
    bounded = False
    fams = list(S.families)
    for i, F in enumerate(fams):
        for G in fams[i:]:
            if not crossing_pairs(F, G).feasible:
                continue
            if _ptolemy_family_pair_exact(S, F, G):
                continue
            w = _ptolemy_family_pair_bounded(S, F, G, bound)
            if w is not None:
                return Certificate.fails(name, w)
            bounded = True
    if bounded:
        return Certificate.up_to(name, bound,
                                 note="family pairs with two moving endpoints checked for n, m <= bound")
    return Certificate.holds(name)


# -- suprema -----------------------------------------------------------------------

class _Empty:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "EMPTY"

    __str__ = __repr__

    def __bool__(self):
        return False


EMPTY = _Empty()


def _le_from(start: BoundaryPoint, x: BoundaryPoint, y: BoundaryPoint) -> bool:
    """``x <= y`` in the order of the circle read anticlockwise from ``start``."""
    if x == y or x == start:
        return True
    if y == start:
        return False
    return cyclic_ordered([start, x, y])


def _max_from(start, points):
    best = EMPTY
    for p in points:
        if best is EMPTY or _le_from(start, best, p):
            best = p
    return best


def _term_sup(model, term, lo, hi):
    """Largest point of ``term`` over ``n`` in ``[lo, hi]`` within one arc piece."""
    if not term.is_tail:
        return term.vertex
    if isinstance(term, TailUp):
        if hi is None:
            return model.limit_up(Vertex(term.arc, 0))
        return term.at(hi)
    return term.at(lo)


def _in_region(x, a, b) -> bool:
    return x == a if a == b else in_interval(x, a, b)


def _pair_sup(S: DiagonalSet, a0, b0, a1, b1):
    """Sup (from ``a0``) of ends ``x0 in [a0, b0]`` of members whose other end is in ``[a1, b1]``."""
    pts = []
    for d in S.explicit:
        for x0, x1 in ((d.x0, d.x1), (d.x1, d.x0)):
            if _in_region(x0, a0, b0) and _in_region(x1, a1, b1):
                pts.append(x0)
    for F in S.families:
        for s, t in ((F.left, F.right), (F.right, F.left)):
            r1 = term_ranges(S.model, t, a1, b1)
            if not r1:
                continue
            # one range per contiguous arc piece, where the order is by position
            for lo0, hi0 in term_ranges(S.model, s, a0, b0):
                rs = clip_ranges(intersect_ranges([(lo0, hi0)], r1), F.min_n)
                for lo, hi in rs:
                    pts.append(_term_sup(S.model, s, lo, hi))
    return _max_from(a0, pts)


def _partner_sup(S: DiagonalSet, u: Vertex, a, b):
    return _pair_sup(S, a, b, u, u)


def sup_U(S: DiagonalSet, s: Vertex, t: BoundaryPoint):
    """Sup over ``[s, t]`` of the vertices ``z`` with ``{s, z}`` in ``S``."""
    if s == t:
        raise InvalidInputError("sup_U needs s != t")
    return _partner_sup(S, s, s, t)


def sup_W(S: DiagonalSet, Y: Diagonal, t0: Optional[Vertex], t1: Vertex,
          which: str = "W0", u0: Optional[Vertex] = None):
    """Suprema of the sets W0 and W1 driving the precover construction.

    ``Y`` is labelled ``(y0, y1) = (Y.x0, Y.x1)``.  W0 collects the ends in
    ``[y1++, t0]`` of members whose other end lies in ``[t1, y1]``; W1 the
    partners of ``u0`` in ``[t1, y1]``.
    """
    y0, y1 = Y.x0, Y.x1
    if not _in_region(t1, succ(y0, 2), y1):
        raise InvalidInputError(f"t1={t1} is not in [{succ(y0, 2)}, {y1}]")
    if which == "W0":
        if t0 is None or not _in_region(t0, succ(y1, 2), y0):
            raise InvalidInputError(f"t0={t0} is not in [{succ(y1, 2)}, {y0}]")
        return _pair_sup(S, succ(y1, 2), t0, t1, y1)
    if which == "W1":
        if u0 is None:
            raise InvalidInputError("W1 needs u0")
        return _partner_sup(S, u0, t1, y1)
    raise InvalidInputError(f"which must be 'W0' or 'W1', got {which!r}")


# -- nc on windows -----------------------------------------------------------------

def nc2_window_check(S: DiagonalSet, W: int) -> Certificate:
    """Compare the window part of nc(nc(S)) with the window part of ``S``.

    The inner nc is computed on the doubled window, so agreement is a bounded
    statement and a reported extra diagonal is relative to that window.
    """
    if W < 2:
        raise InvalidInputError(f"window must be >= 2, got {W}")
    inner = set(truncate_window(S, W))
    outer = nc2_window(S, W)
    extra = [d for d in outer if d not in inner]
    missing = sorted(inner - set(outer))
    if extra or missing:
        return Certificate.fails("nc2", (extra + missing)[0],
                                 note=f"relative to nc taken on window {2 * W}")
    return Certificate.up_to("nc2", W)


def is_torsion_first_half(S: DiagonalSet, bound: int = 64) -> Certificate:
    return conjunction("torsion", [check_PC1(S), check_PC2(S), check_ptolemy(S, bound)])
