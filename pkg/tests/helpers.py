"""Independent brute-force references and hypothesis strategies for the tests.

Nothing here reuses the engine's order or crossing code: vertices are placed
on the real circle [0, N) by an exact monotone map, and crossing is read off
those coordinates.
"""
from fractions import Fraction

from hypothesis import strategies as st

from infgon.cyclic import LimitPoint, Vertex, ZModel
from infgon.diagonals import (Diagonal, DiagonalFamily, DiagonalSet, Fixed,
                              TailDown, TailUp)
from infgon.errors import InvalidInputError


def coord(p) -> Fraction:
    """Exact position on the circle [0, N): limit point i at i, arc i inside (i, i+1)."""
    if isinstance(p, LimitPoint):
        return Fraction(p.index)
    k = p.pos
    return p.arc + Fraction(1, 2) + Fraction(k, 2 * (1 + abs(k)))


def bf_crosses(X, Y) -> bool:
    a, b = sorted((coord(X.x0), coord(X.x1)))
    c, d = coord(Y.x0), coord(Y.x1)
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b) != (a < d < b)


def bf_order_from(start):
    """Sort key for the order of the circle read anticlockwise from ``start``."""
    s = coord(start)

    def key(p):
        c = coord(p)
        return (0, c) if c >= s else (1, c)
    return key


def bf_in_closed(x, a, b) -> bool:
    key = bf_order_from(a)
    return key(x) <= key(b)


def bf_members(S, n_max):
    out = set(S.explicit)
    for F in S.families:
        for n in range(F.min_n, n_max + 1):
            out.add(F.member(n))
    return out


def bf_lexmin(constraints, n_min, m_min, limit, m_limit=None):
    for n in range(n_min, limit):
        for m in range(m_min, m_limit or 5 * limit):
            if all(a * n + b * m <= c for a, b, c in constraints):
                return n, m
    return None


def diag(*pair, arc=0):
    """Diagonal in one arc from two positions, or from two ``Vertex`` objects."""
    a, b = pair
    if not isinstance(a, Vertex):
        a = Vertex(arc, a)
    if not isinstance(b, Vertex):
        b = Vertex(arc, b)
    return Diagonal(a, b)


# -- strategies -----------------------------------------------------------------

models = st.sampled_from([ZModel(1), ZModel(2)])


def vertices(model, span=12):
    return st.builds(Vertex, st.integers(0, model.limit_count - 1), st.integers(-span, span))


def diagonals(model, span=12):
    return st.tuples(vertices(model, span), vertices(model, span)).filter(
        lambda p: not (p[0].arc == p[1].arc and abs(p[0].pos - p[1].pos) <= 1)
    ).map(lambda p: Diagonal(*p))


def terms(model, span=6, steps=(1, 2)):
    arcs = st.integers(0, model.limit_count - 1)
    base = st.integers(-span, span)
    step = st.sampled_from(steps)
    return st.one_of(
        st.builds(lambda a, p: Fixed(Vertex(a, p)), arcs, base),
        st.builds(TailUp, arcs, base, step),
        st.builds(TailDown, arcs, base, step),
    )


@st.composite
def families(draw, model, span=6, steps=(1, 2)):
    left = draw(terms(model, span, steps))
    right = draw(terms(model, span, steps))
    min_n = draw(st.integers(0, 3))
    try:
        return DiagonalFamily(left, right, min_n)
    except InvalidInputError:
        # a neighbour pair somewhere or no tail: fall back to a simple valid family
        return DiagonalFamily(Fixed(Vertex(0, 0)), TailUp(0, 2 + min_n))


@st.composite
def diagonal_sets(draw, model=None, max_explicit=4, max_families=3, span=6, steps=(1, 2)):
    if model is None:
        model = draw(models)
    ex = draw(st.lists(diagonals(model, span), max_size=max_explicit))
    fs = draw(st.lists(families(model, span, steps), max_size=max_families))
    return DiagonalSet(model, tuple(ex), tuple(fs))
