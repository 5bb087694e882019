"""Hom, Ext and suspension between indecomposables, read off from diagonals.

Every Hom and Ext space between indecomposables is 0 or 1 dimensional, so
only dimensions are modelled.  ``Hom(X, Y) != 0`` exactly when the endpoints
can be labelled ``x0, x1`` and ``y0, y1`` with

    x0 <= y0 <= x1-- < x1 <= y1 <= x0--

going anticlockwise, and the nonzero morphism then factors through ``S``
exactly when ``S = {s0, s1}`` with ``s0`` in ``[x0, y0]`` and ``s1`` in ``[x1, y1]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .cyclic import BoundaryPoint, Vertex, in_interval, pred, succ
from .diagonals import Diagonal, crosses
from .errors import NoMorphismError


@dataclass(frozen=True, slots=True)
class HomLabeling:
    x0: Vertex
    x1: Vertex
    y0: Vertex
    y1: Vertex

    def __str__(self):
        return f"x0={self.x0} x1={self.x1} y0={self.y0} y1={self.y1}"


def in_closed(x: BoundaryPoint, a: BoundaryPoint, b: BoundaryPoint) -> bool:
    """Closed anticlockwise interval where ``[a, a]`` is the single point ``a``."""
    if a == b:
        return x == a
    return in_interval(x, a, b)


def _chain(x0, x1, y0, y1) -> bool:
    return in_closed(y0, x0, pred(x1, 2)) and in_closed(y1, x1, pred(x0, 2))


def hom_labelings(X: Diagonal, Y: Diagonal) -> list[HomLabeling]:
    """All endpoint labelings satisfying the chain, in a fixed order."""
    out = []
    for x0, x1 in ((X.x0, X.x1), (X.x1, X.x0)):
        for y0, y1 in ((Y.x0, Y.x1), (Y.x1, Y.x0)):
            if _chain(x0, x1, y0, y1):
                out.append(HomLabeling(x0, x1, y0, y1))
    return out


def hom_labeling(X: Diagonal, Y: Diagonal) -> Optional[HomLabeling]:
    ls = hom_labelings(X, Y)
    return ls[0] if ls else None


def hom_dim(X: Diagonal, Y: Diagonal) -> int:
    return 0 if hom_labeling(X, Y) is None else 1


def ext1_dim(X: Diagonal, Y: Diagonal) -> int:
    return int(crosses(X, Y))


def suspend(X: Diagonal) -> Diagonal:
    return Diagonal(pred(X.x0), pred(X.x1))


def suspend_inv(X: Diagonal) -> Diagonal:
    return Diagonal(succ(X.x0), succ(X.x1))


def factors_through(X: Diagonal, Y: Diagonal, S: Diagonal) -> bool:
    """Whether the nonzero morphism ``E(X) -> E(Y)`` factors through ``E(S)``."""
    labelings = hom_labelings(X, Y)
    if not labelings:
        raise NoMorphismError(f"Hom({X}, {Y}) = 0")
    for L in labelings:
        for s0, s1 in ((S.x0, S.x1), (S.x1, S.x0)):
            if in_closed(s0, L.x0, L.y0) and in_closed(s1, L.x1, L.y1):
                return True
    return False
