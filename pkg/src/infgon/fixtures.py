"""Standard diagonal sets used in examples, tests and the CLI demo files.

* ``fan()``: every diagonal at vertex 0 in the one-limit-point model.
* ``leapfrog()``: the zigzag ``{1+n, -1-n}``, ``{1+n, -2-n}`` converging to L0.
* ``double_zigzag()``: a copy of that zigzag on each arc of the
  two-limit-point model; it is noncrossing and satisfies PC1 but not PC2.
"""
from __future__ import annotations

from .cyclic import Vertex, ZModel
from .diagonals import DiagonalFamily, DiagonalSet, Fixed, TailDown, TailUp

M1 = ZModel(1)
M2 = ZModel(2)


def fan(model: ZModel = M1, z: Vertex = Vertex(0, 0)) -> DiagonalSet:
    F_up = DiagonalFamily(Fixed(z), TailUp(z.arc, z.pos + 2))
    F_down = DiagonalFamily(Fixed(z), TailDown(z.arc, z.pos - 2))
    return DiagonalSet(model, (), (F_up, F_down))


def _zigzag(arc: int):
    return (DiagonalFamily(TailUp(arc, 1), TailDown(arc, -1)),
            DiagonalFamily(TailUp(arc, 1), TailDown(arc, -2)))


def leapfrog() -> DiagonalSet:
    return DiagonalSet(M1, (), _zigzag(0))


def double_zigzag() -> DiagonalSet:
    return DiagonalSet(M2, (), _zigzag(0) + _zigzag(1))


def empty(model: ZModel = M1) -> DiagonalSet:
    return DiagonalSet(model)


FIXTURES = {
    "S1": fan,
    "B": leapfrog,
    "Z2": double_zigzag,
}
