"""Admissible vertex sets with finitely many limit points, and their cyclic order.

A model with ``N`` limit points ``L0 .. L(N-1)`` places one bi-infinite arc of
vertices between each pair of consecutive limit points: arc ``i`` runs from
``Li`` (position -> -inf) to ``L(i+1 mod N)`` (position -> +inf).  Cutting the
circle at ``L0`` gives the linear order used for every comparison here::

    L0 < (0, k) < L1 < (1, k) < ... < L(N-1) < (N-1, k) < [back to L0]

Positions are Python ints, so there is no wrap-around inside an arc.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence, Union

from .errors import InvalidInputError


@dataclass(frozen=True, slots=True)
class Vertex:
    arc: int
    pos: int
    key: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "key", (self.arc, 1, self.pos))

    def __str__(self):
        return f"{self.arc}:{self.pos}"


@dataclass(frozen=True, slots=True)
class LimitPoint:
    index: int
    key: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "key", (self.index, 0, 0))

    def __str__(self):
        return f"L{self.index}"


BoundaryPoint = Union[Vertex, LimitPoint]


@dataclass(frozen=True)
class ZModel:
    """An admissible subset of the circle given by its number of limit points."""

    limit_count: int

    def __post_init__(self):
        if not isinstance(self.limit_count, int) or self.limit_count < 1:
            raise InvalidInputError(
                f"a model needs at least one limit point, got {self.limit_count!r}")

    def vertex(self, arc: int, pos: int) -> Vertex:
        return Vertex(arc % self.limit_count, pos)

    def limit_point(self, index: int) -> LimitPoint:
        return LimitPoint(index % self.limit_count)

    def limit_points(self) -> list[LimitPoint]:
        return [LimitPoint(i) for i in range(self.limit_count)]

    def contains(self, p: BoundaryPoint) -> bool:
        idx = p.arc if isinstance(p, Vertex) else p.index
        return 0 <= idx < self.limit_count

    def limit_up(self, v: Vertex) -> LimitPoint:
        """Limit of ``v, v+, v++, ...``."""
        return LimitPoint((v.arc + 1) % self.limit_count)

    def limit_down(self, v: Vertex) -> LimitPoint:
        """Limit of ``v, v-, v--, ...``."""
        return LimitPoint(v.arc)


def succ(v: Vertex, k: int = 1) -> Vertex:
    return Vertex(v.arc, v.pos + k)


def pred(v: Vertex, k: int = 1) -> Vertex:
    return Vertex(v.arc, v.pos - k)


def _between(a: tuple, x: tuple, b: tuple) -> bool:
    # strict cyclic betweenness of three distinct keys
    return a < x < b or x < b < a or b < a < x


def cyclic_ordered(points: Sequence[BoundaryPoint]) -> bool:
    """True iff going anticlockwise from ``points[0]`` meets the points in list order."""
    keys = [p.key for p in points]
    n = len(keys)
    if n < 3:
        raise InvalidInputError("cyclic_ordered needs at least three points")
    if len(set(keys)) != n:
        raise InvalidInputError("cyclic_ordered needs pairwise distinct points")
    if n == 3:
        return _between(*keys)
    descents = sum(keys[i] > keys[(i + 1) % n] for i in range(n))
    return descents == 1


def in_interval(x: BoundaryPoint, a: BoundaryPoint, b: BoundaryPoint,
                left_closed: bool = True, right_closed: bool = True) -> bool:
    """Membership of ``x`` in the anticlockwise interval from ``a`` to ``b``.

    Closed by default; pass ``left_closed=False`` / ``right_closed=False`` for
    the half-open and open variants.  ``a == b`` is rejected.
    """
    ka, kb = a.key, b.key
    if ka == kb:
        raise InvalidInputError(f"degenerate interval [{a}, {b}]")
    kx = x.key
    if kx == ka:
        return left_closed
    if kx == kb:
        return right_closed
    return _between(ka, kx, kb)


def reachable_by_succ(v: Vertex, w: Vertex) -> bool:
    """Whether ``w = v^{+n}`` for some ``n >= 0``."""
    return v.arc == w.arc and w.pos >= v.pos


# -- arcs cut by intervals ---------------------------------------------------

PosRange = tuple  # (lo, hi) with None meaning unbounded on that side


def _rel(p: BoundaryPoint, arc: int, n: int) -> tuple:
    # key in the linear order obtained by cutting the circle at limit point ``arc``
    if isinstance(p, Vertex):
        return ((p.arc - arc) % n, 1, p.pos)
    return ((p.index - arc) % n, 0, 0)


def _segment(arc_lo, lo_closed, hi, hi_closed):
    """Positions p of the cut arc with lo <= (0, 1, p) <= hi (relative keys)."""
    if arc_lo is None:
        lo = None
    elif arc_lo[0] == 0 and arc_lo[1] == 1:
        lo = arc_lo[2] if lo_closed else arc_lo[2] + 1
    elif arc_lo[0] == 0:  # the cut limit point itself
        lo = None
    else:
        return None
    if hi is None:
        up = None
    elif hi[0] == 0 and hi[1] == 1:
        up = hi[2] if hi_closed else hi[2] - 1
    elif hi[0] == 0:
        return None
    else:
        up = None
    if lo is not None and up is not None and lo > up:
        return None
    return (lo, up)


def arc_ranges(model: ZModel, arc: int, a: BoundaryPoint, b: BoundaryPoint,
               left_closed: bool = True, right_closed: bool = True) -> list[PosRange]:
    """Position ranges of arc ``arc`` lying inside the interval from ``a`` to ``b``.

    At most two ranges come back (an interval can enter an arc, leave it and
    re-enter it after wrapping around).  ``a == b`` denotes the single point.
    """
    n = model.limit_count
    ra, rb = _rel(a, arc, n), _rel(b, arc, n)
    if ra == rb:
        if isinstance(a, Vertex) and a.arc == arc and left_closed and right_closed:
            return [(a.pos, a.pos)]
        return []
    if ra < rb:
        pieces = [_segment(ra, left_closed, rb, right_closed)]
    else:
        pieces = [_segment(ra, left_closed, None, True),
                  _segment(None, True, rb, right_closed)]
    return [p for p in pieces if p is not None]


def range_contains(r: PosRange, pos: int) -> bool:
    lo, hi = r
    return (lo is None or pos >= lo) and (hi is None or pos <= hi)


def open_interval_is_empty(a: Vertex, b: Vertex) -> bool:
    """No vertex strictly between ``a`` and ``b`` (anticlockwise)."""
    return a.arc == b.arc and b.pos == a.pos + 1

