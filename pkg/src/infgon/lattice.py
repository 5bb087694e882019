"""Lexicographically least integer point of a two-variable linear system.

Constraints are triples ``(a, b, c)`` meaning ``a*n + b*m <= c`` over integers.
Projecting out ``m`` (Fourier-Motzkin) bounds ``n``; for a fixed ``n`` the
feasible ``m`` form an interval.  When ``n`` is unbounded above the search is
cut at a horizon past which feasibility is periodic in ``n``: beyond every
pairwise breakpoint of the lower and upper ``m``-bounds the dominant bounds
are single lines, ``ceil``/``floor`` of them shift by integers when ``n``
moves by the lcm of the ``m``-coefficients, and a gap that widens reaches
width one at a computable point.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Optional

Constraint = tuple  # (a, b, c): a*n + b*m <= c


def _ceil(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


def _floor(q: Fraction) -> int:
    return q.numerator // q.denominator


def lexmin(constraints: Iterable[Constraint], n_min: int = 0,
           m_min: int = 0) -> Optional[tuple[int, int]]:
    """Least ``(n, m)`` (lexicographically) with ``n >= n_min``, ``m >= m_min``."""
    n_lo: Fraction = Fraction(n_min)
    n_hi: Optional[Fraction] = None
    lowers = [(Fraction(0), Fraction(m_min))]  # m >= s*n + t
    uppers = []  # m <= s*n + t
    m_coeffs = [1]

    for a, b, c in constraints:
        if b == 0:
            if a == 0:
                if c < 0:
                    return None
            elif a > 0:
                bound = Fraction(c, a)
                n_hi = bound if n_hi is None else min(n_hi, bound)
            else:
                n_lo = max(n_lo, Fraction(c, a))
            continue
        m_coeffs.append(abs(b))
        piece = (Fraction(-a, b), Fraction(c, b))
        (uppers if b > 0 else lowers).append(piece)

    # real shadow on n
    for sl, tl in lowers:
        for su, tu in uppers:
            ds, dt = sl - su, tu - tl  # need ds*n <= dt
            if ds == 0:
                if dt < 0:
                    return None
            elif ds > 0:
                bound = dt / ds
                n_hi = bound if n_hi is None else min(n_hi, bound)
            else:
                n_lo = max(n_lo, dt / ds)
    if n_hi is not None and n_hi < n_lo:
        return None

    start = _ceil(n_lo)
    if n_hi is not None:
        stop = _floor(n_hi)
    else:
        marks = [n_lo]
        for group in (lowers, uppers):
            for i, (s1, t1) in enumerate(group):
                for s2, t2 in group[i + 1:]:
                    if s1 != s2:
                        marks.append((t2 - t1) / (s1 - s2))
        for sl, tl in lowers:
            for su, tu in uppers:
                if su > sl:
                    marks.append((1 + tl - tu) / (su - sl))
        period = math.lcm(*m_coeffs)
        stop = max(start, _ceil(max(marks))) + period + 1

    for n in range(start, stop + 1):
        lo = max(s * n + t for s, t in lowers)
        m = _ceil(lo)
        if uppers and m > _floor(min(s * n + t for s, t in uppers)):
            continue
        return n, m
    return None

