"""Diagonals of an infinity-gon and finite presentations of infinite diagonal sets.

A :class:`DiagonalSet` is a finite list of explicit diagonals plus a finite
list of :class:`DiagonalFamily` objects.  A family has one integer parameter
``n >= min_n`` and two endpoint terms, each either a fixed vertex or an
arithmetic tail running up or down one arc.  Every pairwise question between
two families then only involves two parameters with linear endpoint
positions, which keeps crossing questions decidable (see :mod:`.lattice`).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence, Union

from . import lattice
from .cyclic import (BoundaryPoint, Vertex, ZModel, _between, arc_ranges,
                     in_interval)
from .errors import InvalidInputError, NotADiagonalError, OutOfRangeError


def _is_neighbour_or_equal(a: Vertex, b: Vertex) -> bool:
    return a.arc == b.arc and abs(a.pos - b.pos) <= 1


@dataclass(frozen=True, slots=True, eq=False)
class Diagonal:
    """Unordered pair of non-neighbouring vertices.

    The endpoints keep the order they were given in (``x0``, ``x1``), which
    callers such as :func:`infgon.conditions.sup_W` use as a labelling;
    equality and hashing ignore it.
    """

    x0: Vertex
    x1: Vertex
    _ident: tuple = field(init=False, repr=False)

    def __post_init__(self):
        if _is_neighbour_or_equal(self.x0, self.x1):
            raise NotADiagonalError(f"{{{self.x0}, {self.x1}}} is not a diagonal")
        k0, k1 = self.x0.key, self.x1.key
        object.__setattr__(self, "_ident", (k0, k1) if k0 < k1 else (k1, k0))

    def __eq__(self, other):
        if not isinstance(other, Diagonal):
            return NotImplemented
        return self._ident == other._ident

    def __hash__(self):
        return hash(self._ident)

    def __lt__(self, other):
        return self._ident < other._ident

    def __iter__(self):
        yield self.x0
        yield self.x1

    @property
    def endpoints(self) -> tuple[Vertex, Vertex]:
        return self.x0, self.x1

    def sorted(self) -> "Diagonal":
        """Same diagonal with endpoints in the cut-at-L0 linear order."""
        return self if self.x0.key < self.x1.key else Diagonal(self.x1, self.x0)

    def has_endpoint(self, v: Vertex) -> bool:
        return v == self.x0 or v == self.x1

    def other(self, v: Vertex) -> Vertex:
        if v == self.x0:
            return self.x1
        if v == self.x1:
            return self.x0
        raise InvalidInputError(f"{v} is not an endpoint of {self}")

    def __str__(self):
        return f"{{{self.x0}, {self.x1}}}"


def is_diagonal(a: Vertex, b: Vertex) -> bool:
    return not _is_neighbour_or_equal(a, b)


def validate_diagonal(model: ZModel, a: Vertex, b: Vertex) -> Diagonal:
    for v in (a, b):
        if not model.contains(v):
            raise InvalidInputError(f"vertex {v} is not in a model with "
                                    f"{model.limit_count} limit point(s)")
    return Diagonal(a, b)


def crosses(X: Diagonal, Y: Diagonal) -> bool:
    """Cyclic interleaving of endpoints; shared endpoints never cross."""
    a, b = X._ident
    c, d = Y._ident
    if a == c or a == d or b == c or b == d:
        return False
    # a < b in the linear order, so X splits the circle into (a, b) and (b, a)
    return (a < c < b) != (a < d < b)


# -- endpoint terms ------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Fixed:
    vertex: Vertex

    is_tail = False

    @property
    def arc(self):
        return self.vertex.arc

    @property
    def coef(self):
        return 0

    @property
    def const(self):
        return self.vertex.pos

    def at(self, n: int) -> Vertex:
        return self.vertex

    def solve(self, v: Vertex):
        """Parameters hitting ``v``: ``ANY``, a single int, or ``None``."""
        return ANY if v == self.vertex else None

    def __str__(self):
        return str(self.vertex)


@dataclass(frozen=True, slots=True)
class TailUp:
    """``n -> (arc, base + step*n)``; converges from below to the arc's upper limit."""

    arc: int
    base: int
    step: int = 1

    is_tail = True

    def __post_init__(self):
        if self.step < 1:
            raise InvalidInputError(f"tail step must be >= 1, got {self.step}")

    @property
    def coef(self):
        return self.step

    @property
    def const(self):
        return self.base

    def at(self, n: int) -> Vertex:
        return Vertex(self.arc, self.base + self.step * n)

    def solve(self, v: Vertex):
        if v.arc != self.arc:
            return None
        q, r = divmod(v.pos - self.base, self.step)
        return q if r == 0 and q >= 0 else None

    def __str__(self):
        s = f"{self.step}n" if self.step != 1 else "n"
        return f"{self.arc}:{self.base}+{s}"


@dataclass(frozen=True, slots=True)
class TailDown:
    """``n -> (arc, base - step*n)``; converges from above to the arc's lower limit."""

    arc: int
    base: int
    step: int = 1

    is_tail = True

    def __post_init__(self):
        if self.step < 1:
            raise InvalidInputError(f"tail step must be >= 1, got {self.step}")

    @property
    def coef(self):
        return -self.step

    @property
    def const(self):
        return self.base

    def at(self, n: int) -> Vertex:
        return Vertex(self.arc, self.base - self.step * n)

    def solve(self, v: Vertex):
        if v.arc != self.arc:
            return None
        q, r = divmod(self.base - v.pos, self.step)
        return q if r == 0 and q >= 0 else None

    def __str__(self):
        s = f"{self.step}n" if self.step != 1 else "n"
        return f"{self.arc}:{self.base}-{s}"


VertexTerm = Union[Fixed, TailUp, TailDown]


class _Any:
    def __repr__(self):
        return "ANY"


ANY = _Any()

NRange = tuple  # (lo, hi) inclusive, hi None for unbounded


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def term_ranges(model: ZModel, term: VertexTerm, a: BoundaryPoint, b: BoundaryPoint,
                left_closed=True, right_closed=True) -> list[NRange]:
    """Parameter ranges (``n >= 0``) for which ``term.at(n)`` lies in an interval.

    ``a == b`` means the single point ``a``.
    """
    if not term.is_tail:
        v = term.vertex
        if a.key == b.key:
            inside = v == a
        else:
            inside = in_interval(v, a, b, left_closed, right_closed)
        return [(0, None)] if inside else []
    out = []
    for lo, hi in arc_ranges(model, term.arc, a, b, left_closed, right_closed):
        out.extend(_pos_to_n(term, lo, hi))
    return out


def _pos_to_n(term, lo, hi) -> list[NRange]:
    st = term.step
    if isinstance(term, TailUp):
        n_lo = 0 if lo is None else max(0, _ceil_div(lo - term.base, st))
        n_hi = None if hi is None else (hi - term.base) // st
    else:
        n_lo = 0 if hi is None else max(0, _ceil_div(term.base - hi, st))
        n_hi = None if lo is None else (term.base - lo) // st
    if n_hi is not None and n_hi < n_lo:
        return []
    return [(n_lo, n_hi)]


def intersect_ranges(r1: Sequence[NRange], r2: Sequence[NRange]) -> list[NRange]:
    out = []
    for a_lo, a_hi in r1:
        for b_lo, b_hi in r2:
            lo = max(a_lo, b_lo)
            if a_hi is None:
                hi = b_hi
            elif b_hi is None:
                hi = a_hi
            else:
                hi = min(a_hi, b_hi)
            if hi is None or lo <= hi:
                out.append((lo, hi))
    return out


def clip_ranges(ranges: Sequence[NRange], n_min: int) -> list[NRange]:
    return intersect_ranges(ranges, [(n_min, None)])


# -- families and sets ---------------------------------------------------------

@dataclass(frozen=True)
class DiagonalFamily:
    """The diagonals ``{left.at(n), right.at(n)}`` for ``n >= min_n``."""

    left: VertexTerm
    right: VertexTerm
    min_n: int = 0

    def __post_init__(self):
        if not (self.left.is_tail or self.right.is_tail):
            raise InvalidInputError("a family needs at least one tail term; "
                                    "use an explicit diagonal instead")
        if self.min_n < 0:
            raise InvalidInputError(f"min_n must be >= 0, got {self.min_n}")
        bad = self._first_invalid()
        if bad is not None:
            raise NotADiagonalError(
                f"family {self} is not a diagonal at n={bad}: "
                f"{{{self.left.at(bad)}, {self.right.at(bad)}}}")

    def _first_invalid(self) -> Optional[int]:
        if self.left.arc != self.right.arc:
            return None
        # position difference c + s*n must stay outside [-1, 1]
        c = self.left.const - self.right.const
        s = self.left.coef - self.right.coef
        if s == 0:
            return self.min_n if abs(c) <= 1 else None
        lo, hi = sorted((_ceil_div(-1 - c, s) if s > 0 else _ceil_div(1 - c, s),
                         (1 - c) // s if s > 0 else (-1 - c) // s))
        lo = max(lo, self.min_n)
        return lo if lo <= hi else None

    @property
    def terms(self) -> tuple[VertexTerm, VertexTerm]:
        return self.left, self.right

    def member(self, n: int) -> Diagonal:
        return family_member(self, n)

    def __str__(self):
        tail = f", n>={self.min_n}" if self.min_n else ""
        return f"{{{self.left}, {self.right}}}{tail}"


def family_member(F: DiagonalFamily, n: int) -> Diagonal:
    if n < F.min_n:
        raise OutOfRangeError(f"n={n} is below min_n={F.min_n} of family {F}")
    return Diagonal(F.left.at(n), F.right.at(n))


def _merge_solutions(a, b):
    if a is None or b is None:
        return None
    if a is ANY:
        return b
    if b is ANY or a == b:
        return a
    return None


def family_parameter(F: DiagonalFamily, D: Diagonal) -> Optional[int]:
    """The ``n`` with ``F.member(n) == D``, or ``None``."""
    for u, w in ((D.x0, D.x1), (D.x1, D.x0)):
        n = _merge_solutions(F.left.solve(u), F.right.solve(w))
        if n is not None and n is not ANY and n >= F.min_n:
            return n
    return None


@dataclass(frozen=True)
class DiagonalSet:
    model: ZModel
    explicit: tuple = ()
    families: tuple = ()
    _explicit_set: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "explicit", tuple(self.explicit))
        object.__setattr__(self, "families", tuple(self.families))
        object.__setattr__(self, "_explicit_set", frozenset(self.explicit))
        for d in self.explicit:
            for v in d:
                if not self.model.contains(v):
                    raise InvalidInputError(f"vertex {v} is outside the model")
        for F in self.families:
            for t in F.terms:
                if not 0 <= t.arc < self.model.limit_count:
                    raise InvalidInputError(f"term {t} is outside the model")

    def __contains__(self, D: Diagonal) -> bool:
        return set_contains(self, D)

    def is_finite(self) -> bool:
        return not self.families

    def replace(self, explicit=None, families=None) -> "DiagonalSet":
        return DiagonalSet(self.model,
                           self.explicit if explicit is None else explicit,
                           self.families if families is None else families)

    def __str__(self):
        parts = [str(d) for d in self.explicit] + [str(F) for F in self.families]
        return "{" + ", ".join(parts) + "}"


def set_contains(S: DiagonalSet, D: Diagonal) -> bool:
    if D in S._explicit_set:
        return True
    return any(family_parameter(F, D) is not None for F in S.families)


def _window_ranges(term: VertexTerm, W: int) -> list[NRange]:
    if not term.is_tail:
        return [(0, None)] if abs(term.vertex.pos) <= W else []
    return _pos_to_n(term, -W, W)


def family_window_ns(F: DiagonalFamily, W: int) -> list[int]:
    rs = intersect_ranges(_window_ranges(F.left, W), _window_ranges(F.right, W))
    out = []
    for lo, hi in clip_ranges(rs, F.min_n):
        # at least one term is a tail, so window ranges are bounded
        out.extend(range(lo, hi + 1))
    return sorted(set(out))


def in_window(D: Diagonal, W: int) -> bool:
    return abs(D.x0.pos) <= W and abs(D.x1.pos) <= W


def truncate_window(S: DiagonalSet, W: int) -> list[Diagonal]:
    """Members of ``S`` with both endpoint positions in ``[-W, W]``, sorted."""
    out = {d for d in S.explicit if in_window(d, W)}
    for F in S.families:
        for n in family_window_ns(F, W):
            out.add(family_member(F, n))
    return sorted(out)


def iter_members(S: DiagonalSet, n_max: int) -> Iterator[Diagonal]:
    """Explicit members followed by family members with ``n <= n_max``."""
    yield from S.explicit
    for F in S.families:
        for n in range(F.min_n, n_max + 1):
            yield family_member(F, n)


# -- crossing between parameterised diagonals -----------------------------------

@dataclass(frozen=True)
class CrossingReport:
    feasible: bool
    witness: Optional[tuple[int, int]] = None
    constraints: tuple = ()
    diagonals: Optional[tuple[Diagonal, Diagonal]] = None

    def __bool__(self):
        return self.feasible


def _lt(x, px, y, py):
    """``x < y`` in the cut order, as a bool or a constraint ``a*n + b*m <= c``."""
    (xa, xs, xc), (ya, ys, yc) = x, y
    if xa != ya:
        return xa < ya
    a = b = 0
    for coef, p in ((xs, px), (-ys, py)):
        if p == "n":
            a += coef
        else:
            b += coef
    c = yc - xc - 1
    if a == 0 and b == 0:
        return 0 <= c
    return (a, b, c)


def _forms(terms):
    return [(t.arc, t.coef, t.const) for t in terms]


def _crossing_systems(xf, yf):
    """Conjunctive systems whose union says "X(n) crosses Y(m)"."""
    for xl, xh in ((0, 1), (1, 0)):
        for yi, yo in ((0, 1), (1, 0)):
            for outside_below in (True, False):
                conds = [
                    _lt(xf[xl], "n", xf[xh], "n"),
                    _lt(xf[xl], "n", yf[yi], "m"),
                    _lt(yf[yi], "m", xf[xh], "n"),
                    _lt(yf[yo], "m", xf[xl], "n") if outside_below
                    else _lt(xf[xh], "n", yf[yo], "m"),
                ]
                if any(c is False for c in conds):
                    continue
                yield tuple(c for c in conds if c is not True)


def _lexmin_crossing(x_terms, y_terms, n_min, m_min):
    best, best_sys = None, ()
    for system in _crossing_systems(_forms(x_terms), _forms(y_terms)):
        sol = lattice.lexmin(system, n_min, m_min)
        if sol is not None and (best is None or sol < best):
            best, best_sys = sol, system
    return best, best_sys


def crossing_pairs(F: DiagonalFamily, G: DiagonalFamily) -> CrossingReport:
    """Decide whether some ``F.member(n)`` crosses some ``G.member(m)``.

    Returns the lexicographically least witness ``(n, m)``.  When ``G`` is
    ``F`` no extra ``n != m`` constraint is needed: a diagonal never crosses
    itself, so every crossing witness already has ``n != m``.
    """
    sol, system = _lexmin_crossing(F.terms, G.terms, F.min_n, G.min_n)
    if sol is None:
        return CrossingReport(False)
    n, m = sol
    return CrossingReport(True, sol, system, (family_member(F, n), family_member(G, m)))


def first_crossing_n(D: Diagonal, F: DiagonalFamily) -> Optional[int]:
    """Least ``n`` with ``F.member(n)`` crossing the fixed diagonal ``D``."""
    sol, _ = _lexmin_crossing(F.terms, (Fixed(D.x0), Fixed(D.x1)), F.min_n, 0)
    return None if sol is None else sol[0]
