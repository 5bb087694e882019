"""Decision procedures built on the conditions: cluster tilting, precovers, flips."""
from __future__ import annotations

import math
from typing import Optional

from .certificate import Certificate, Verdict
from .conditions import (EMPTY, check_PC1, check_PC2, detect_features,
                         is_torsion_first_half, sup_W, size_scale)
from .cyclic import LimitPoint, Vertex, in_interval, pred, succ
from .diagonals import (Diagonal, DiagonalFamily, DiagonalSet, crosses,
                        crossing_pairs, family_member, family_parameter,
                        first_crossing_n, is_diagonal, set_contains,
                        truncate_window)
from .errors import (FlipError, InvalidInputError, NonTerminationError,
                     NotAMemberError, PreconditionError)
from .hom import hom_dim
from .window import WindowIndex, _window_pairs, nc_mask

__all__ = ["is_torsion_first_half", "check_noncrossing", "check_features",
           "check_maximality", "is_cluster_tilting", "precover", "flip",
           "same_set", "quiver_check", "flipped_diagonal"]


def check_noncrossing(S: DiagonalSet) -> Certificate:
    """Exact: no two members of ``S`` cross, families included."""
    name = "noncrossing"
    E = list(S.explicit)
    for i, X in enumerate(E):
        for Y in E[i + 1:]:
            if crosses(X, Y):
                return Certificate.fails(name, (X, Y))
    for D in E:
        for F in S.families:
            n = first_crossing_n(D, F)
            if n is not None:
                return Certificate.fails(name, (D, family_member(F, n)))
    fams = list(S.families)
    for i, F in enumerate(fams):
        for G in fams[i:]:
            rep = crossing_pairs(F, G)
            if rep.feasible:
                return Certificate.fails(name, rep.diagonals)
    return Certificate.holds(name)


def check_features(S: DiagonalSet) -> Certificate:
    """Exact: a fountain or a leapfrog converges to every limit point."""
    feats = detect_features(S)
    for i in sorted(feats):
        if not feats[i].has_fountain_or_leapfrog:
            return Certificate.fails("features", f"{LimitPoint(i)}: no fountain or leapfrog",
                                     note=str(feats[i]))
    return Certificate.holds("features", note="; ".join(str(feats[i]) for i in sorted(feats)))


def check_maximality(S: DiagonalSet, W: int) -> Certificate:
    """Every window diagonal outside ``S`` crosses a member.

    A window diagonal found to cross no member (exact, via clamping) and not
    in ``S`` is a genuine counterexample; passing only covers the window.
    """
    mask = nc_mask(S, W)
    ix = WindowIndex(S.model, W)
    lo, hi = _window_pairs(S.model.limit_count, W)
    for a, b in zip(lo[mask].tolist(), hi[mask].tolist()):
        D = Diagonal(ix.vertex(a), ix.vertex(b))
        if not set_contains(S, D):
            return Certificate.fails("maximality", D, note="crosses no member but is not in the set")
    return Certificate.up_to("maximality", W)


def is_cluster_tilting(S: DiagonalSet, W: int = 32) -> Certificate:
    """Noncrossing and features exactly, maximality on the window.

    The overall verdict is Holds when nothing fails; the maximality part
    keeps its own bounded verdict in the trace.
    """
    if W < 2:
        raise InvalidInputError(f"window must be >= 2, got {W}")
    parts = [check_noncrossing(S), check_features(S)]
    # maximality is meaningless for a crossing set and slow to refute twice
    parts.append(check_maximality(S, W) if parts[0].ok else
                 Certificate.up_to("maximality", W, note="skipped: set has crossings"))
    failing = [p for p in parts if p.verdict is Verdict.FAILS]
    if failing:
        return Certificate.fails("cluster-tilting", failing[0].witness, trace=parts)
    return Certificate.holds("cluster-tilting", trace=parts, note=f"maximality up to W={W}")


# -- precovers -----------------------------------------------------------------------

def precover(S: DiagonalSet, Y: Diagonal, max_iter: int = 10_000,
             check_pc: bool = True) -> list[Diagonal]:
    """Diagonals of ``S`` through which every morphism from ``S`` to ``Y`` factors.

    ``Y`` is labelled ``(y0, y1) = (Y.x0, Y.x1)``.  Starting from
    ``s0 = s1 = y0+`` each round moves ``s0`` clockwise to the supremum of W0
    and ``s1`` anticlockwise to the supremum of W1, stopping when either
    reaches its end of the range or W0 is empty.
    """
    if check_pc:
        for cert in (check_PC1(S), check_PC2(S)):
            if not cert.ok:
                raise PreconditionError(f"precover needs PC1 and PC2: {cert.name} fails "
                                        f"with {cert.witness}")
    y0, y1 = Y.x0, Y.x1
    s0 = s1 = succ(y0)
    out: list[Diagonal] = []
    trace = []
    for _ in range(max_iter):
        if s0 == succ(y1, 2) or s1 == y1:
            return out
        t0, t1 = pred(s0), succ(s1)
        new0 = sup_W(S, Y, t0, t1, "W0")
        trace.append((t0, t1, new0))
        if new0 is EMPTY:
            return out
        if not isinstance(new0, Vertex):
            raise PreconditionError(f"supremum of W0 is the limit point {new0}")
        new1 = sup_W(S, Y, None, t1, "W1", u0=new0)
        if not isinstance(new1, Vertex):
            raise PreconditionError(f"supremum of W1 is {new1}, not a vertex")
        out.append(Diagonal(new0, new1))
        s0, s1 = new0, new1
    raise NonTerminationError(f"precover of {Y} did not terminate in {max_iter} rounds",
                              trace)


# -- set equality --------------------------------------------------------------------

def _steps(S: DiagonalSet):
    return [abs(t.coef) for F in S.families for t in F.terms if t.is_tail]


def _family_covered(F: DiagonalFamily, T: DiagonalSet) -> Optional[Diagonal]:
    """First member of ``F`` missing from ``T``, or ``None``.

    Past the horizon every member's moving endpoints lie beyond all constants
    of ``T``, where coverage by a family of ``T`` is either periodic in ``n``
    or happens at isolated parameters; scanning one period per possible
    isolated hit past the horizon cannot miss a periodic gap.
    """
    K = max(size_scale(T), abs(F.left.const), abs(F.right.const))
    period = math.lcm(1, *_steps(T), *(abs(t.coef) for t in F.terms if t.is_tail))
    start = max(F.min_n, 2 * K + 2)
    stop = start + period * (2 * len(T.families) + 1)
    for n in range(F.min_n, stop + 1):
        D = family_member(F, n)
        if not set_contains(T, D):
            return D
    return None


def same_set(S: DiagonalSet, T: DiagonalSet) -> bool:
    """Exact equality of the denoted (possibly infinite) sets."""
    for A, B in ((S, T), (T, S)):
        if any(not set_contains(B, d) for d in A.explicit):
            return False
        if any(_family_covered(F, B) is not None for F in A.families):
            return False
    return True


# -- flips ----------------------------------------------------------------------------

def _joined(T: DiagonalSet, u: Vertex, v: Vertex) -> bool:
    # an edge of the polygon or a member
    if not is_diagonal(u, v):
        return u != v
    return set_contains(T, Diagonal(u, v))


def _apex(T: DiagonalSet, a: Vertex, b: Vertex, R: int) -> Optional[Vertex]:
    """The third vertex of the triangle on d={a, b} inside the open interval (a, b)."""
    for arc in range(T.model.limit_count):
        for p in range(-R, R + 1):
            c = Vertex(arc, p)
            if c == a or c == b or not in_interval(c, a, b, False, False):
                continue
            if _joined(T, a, c) and _joined(T, b, c):
                return c
    return None


def _remove(T: DiagonalSet, d: Diagonal) -> DiagonalSet:
    explicit = [x for x in T.explicit if x != d]
    families = []
    for F in T.families:
        n0 = family_parameter(F, d)
        if n0 is None:
            families.append(F)
            continue
        explicit.extend(family_member(F, n) for n in range(F.min_n, n0))
        families.append(DiagonalFamily(F.left, F.right, n0 + 1))
    return T.replace(explicit=tuple(explicit), families=tuple(families))


def flip(T: DiagonalSet, d: Diagonal, W: int = 32, check: bool = True) -> DiagonalSet:
    """Replace ``d`` by the other diagonal of the quadrilateral formed by its two triangles."""
    if not set_contains(T, d):
        raise NotAMemberError(f"{d} is not a member of the set")
    if check:
        cert = is_cluster_tilting(T, W)
        if not cert.ok:
            raise PreconditionError(f"flip needs a cluster tilting set: {cert.failing_leaf().name} "
                                    f"fails with {cert.witness}")
    new = flipped_diagonal(T, d, W)
    out = _remove(T, d)
    return out.replace(explicit=out.explicit + (new,))


def flipped_diagonal(T: DiagonalSet, d: Diagonal, W: int = 32) -> Diagonal:
    """The diagonal that replaces ``d`` under :func:`flip` (no precondition check)."""
    R = W + max(abs(d.x0.pos), abs(d.x1.pos))
    c, e = _apex(T, d.x0, d.x1, R), _apex(T, d.x1, d.x0, R)
    if c is None or e is None:
        raise FlipError(f"no triangle next to {d} within positions +-{R}")
    return Diagonal(c, e)


# -- quiver ------------------------------------------------------------------------------

def quiver_check(T: DiagonalSet, W: int = 32) -> Certificate:
    """No 2-cycles between distinct window members (loops are excluded outright).

    Endomorphism spaces are one dimensional, so there are no loops; for
    distinct members at most one direction of Hom may be nonzero.
    """
    cert = is_cluster_tilting(T, W)
    if not cert.ok:
        raise PreconditionError(f"quiver_check needs a cluster tilting set: {cert.witness}")
    members = truncate_window(T, W)
    for i, X in enumerate(members):
        for Y in members[i + 1:]:
            if hom_dim(X, Y) and hom_dim(Y, X):
                return Certificate.fails("quiver", (X, Y), note="2-cycle")
    return Certificate.up_to("quiver", W)
