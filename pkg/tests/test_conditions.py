from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from infgon.certificate import Verdict
from infgon.conditions import (EMPTY, LimitDatum, Side, check_PC, check_PC1,
                               check_PC2, check_ptolemy, detect_features,
                               family_limit_data, is_torsion_first_half,
                               nc2_window_check, sup_U, sup_W)
from infgon.cyclic import LimitPoint, Vertex, in_interval, succ
from infgon.diagonals import (DiagonalFamily, DiagonalSet, Fixed, TailDown,
                              TailUp, crosses, set_contains, truncate_window)
from infgon.errors import InvalidInputError
from infgon.fixtures import M1, M2, double_zigzag, fan, leapfrog
from infgon.window import nc2_window, nc_window, window_diagonals

from helpers import (bf_crosses, bf_members, bf_order_from, coord, diag,
                     diagonal_sets, diagonals, models, vertices)

L0, L1 = LimitPoint(0), LimitPoint(1)
S1, B, Z2 = fan(), leapfrog(), double_zigzag()


def test_family_limit_data_examples():
    assert family_limit_data(M1, S1.families[0]) == (LimitDatum(Vertex(0, 0), Side.BOTH),
                                                      LimitDatum(L0, Side.BELOW))
    assert family_limit_data(M1, B.families[0]) == (LimitDatum(L0, Side.BELOW),
                                                     LimitDatum(L0, Side.ABOVE))
    assert family_limit_data(M2, Z2.families[0]) == (LimitDatum(L1, Side.BELOW),
                                                      LimitDatum(L0, Side.ABOVE))
    with pytest.raises(InvalidInputError):
        LimitDatum(L0, Side.BOTH)


def test_detect_features_examples():
    f = detect_features(S1)[0]
    assert f.fountains == {Vertex(0, 0)} and not f.leapfrog
    f = detect_features(B)[0]
    assert f.leapfrog and not f.fountains
    for f in detect_features(Z2).values():
        assert not f.has_fountain_or_leapfrog


def test_pc_examples():
    assert check_PC1(S1).exact and check_PC2(S1).exact
    assert check_PC1(Z2).exact
    c = check_PC2(Z2)
    assert c.verdict is Verdict.FAILS
    assert (c.witness.first, c.witness.second) == (LimitDatum(L1, Side.BELOW),
                                                   LimitDatum(L0, Side.ABOVE))
    # the witness reproduces: its family really has that limit pair
    assert set(family_limit_data(M2, c.witness.family)) == {c.witness.first, c.witness.second}
    empty = DiagonalSet(M1)
    assert check_PC1(empty).exact and check_PC2(empty).exact


def test_half_fountains():
    # a right fountain alone has nothing approaching from above
    right_only = DiagonalSet(M1, (), (DiagonalFamily(Fixed(Vertex(0, 0)), TailUp(0, 2)),))
    assert not check_PC1(right_only).ok and not check_PC2(right_only).ok
    # a left fountain alone is its own witness
    left_only = DiagonalSet(M1, (), (DiagonalFamily(Fixed(Vertex(0, 0)), TailDown(0, -2)),))
    assert check_PC1(left_only).exact and check_PC2(left_only).exact


def test_ptolemy_examples():
    assert check_ptolemy(S1).exact
    c = check_ptolemy(DiagonalSet(M1, (diag(0, 5), diag(2, 8))))
    assert c.verdict is Verdict.FAILS
    assert c.witness.missing[0] == diag(0, 2)
    assert set(c.witness.missing) == {diag(0, 2), diag(2, 5), diag(5, 8), diag(0, 8)}
    full = DiagonalSet(M1, (diag(0, 5), diag(2, 8), diag(0, 2), diag(2, 5), diag(5, 8), diag(0, 8)))
    assert check_ptolemy(full).exact


def test_ptolemy_explicit_against_family():
    # {1, -1} crosses every {0, k}, k >= 2, and {1, k} is not in the set
    S = DiagonalSet(M1, (diag(1, -1),), S1.families)
    c = check_ptolemy(S)
    assert c.verdict is Verdict.FAILS
    X, Y = c.witness.crossing
    assert crosses(X, Y) and set_contains(S, X) and set_contains(S, Y)


def test_torsion_examples():
    assert is_torsion_first_half(S1).exact
    c = is_torsion_first_half(Z2)
    assert c.verdict is Verdict.FAILS and c.failing_leaf().name == "PC2"
    c = is_torsion_first_half(DiagonalSet(M1, (diag(0, 5), diag(2, 8))))
    assert c.failing_leaf().name == "Ptolemy"
    assert c.witness.missing[0] == diag(0, 2)


@given(diagonal_sets())
def test_pc_equivalence(S):
    assert check_PC(S).ok == (check_PC1(S).ok and check_PC2(S).ok)


@given(diagonal_sets())
def test_right_fountain_upgrade(S):
    if check_PC1(S).ok or check_PC2(S).ok:
        for f in detect_features(S).values():
            assert f.right_fountains <= f.fountains


def _bf_ptolemy_violation(S, n_max):
    members = sorted(bf_members(S, n_max))
    for i, X in enumerate(members):
        for Y in members[i + 1:]:
            if bf_crosses(X, Y):
                for x in X:
                    for y in Y:
                        if not (x.arc == y.arc and abs(x.pos - y.pos) <= 1):
                            if not set_contains(S, diag(x, y)):
                                return X, Y
    return None


@given(diagonal_sets(max_explicit=3, max_families=2, steps=(1,)))
def test_ptolemy_against_brute_force(S):
    c = check_ptolemy(S, bound=12)
    bf = _bf_ptolemy_violation(S, 12)
    if c.verdict is Verdict.FAILS:
        X, Y = c.witness.crossing
        assert set_contains(S, X) and set_contains(S, Y) and bf_crosses(X, Y)
        assert c.witness.missing
        assert all(not set_contains(S, d) for d in c.witness.missing)
    else:
        assert bf is None
        if c.verdict is Verdict.HOLDS_UP_TO_BOUND:
            assert c.bound == 12


# -- suprema ------------------------------------------------------------------------

def test_sup_examples():
    Y = diag(2, 7)
    assert sup_W(S1, Y, Vertex(0, 2), Vertex(0, 4), "W0") == Vertex(0, 0)
    assert sup_W(S1, Y, None, Vertex(0, 4), "W1", u0=Vertex(0, 0)) == Vertex(0, 7)
    # B members {k, -k} and {k, -k-1} with k in [4, 7] qualify; -4 comes last from 9
    assert sup_W(B, Y, Vertex(0, 2), Vertex(0, 4), "W0") == Vertex(0, -4)
    assert sup_W(DiagonalSet(M1), Y, Vertex(0, 2), Vertex(0, 4), "W0") is EMPTY
    assert sup_U(S1, Vertex(0, 0), Vertex(0, 5)) == Vertex(0, 5)
    assert sup_U(S1, Vertex(0, 1), Vertex(0, 5)) is EMPTY
    assert sup_U(S1, Vertex(0, 0), L0) == L0
    with pytest.raises(InvalidInputError):
        sup_W(S1, Y, Vertex(0, 5), Vertex(0, 4), "W0")


def _bf_sup(points, start):
    return max(points, key=bf_order_from(start)) if points else EMPTY


def _agrees(engine, brute, start):
    if engine is EMPTY:
        return brute is EMPTY
    if isinstance(engine, Vertex):
        return brute == engine
    # a limit point: brute-force members creep up to it from below
    if brute is EMPTY or not isinstance(brute, Vertex):
        return False
    key = bf_order_from(start)
    gap = abs(coord(brute) - coord(engine)) % 1
    return key(brute) < key(engine) and min(gap, 1 - gap) < Fraction(1, 50)


N_BIG = 200


@given(diagonal_sets(steps=(1,)).flatmap(
    lambda S: st.tuples(st.just(S), vertices(S.model, 6),
                        st.one_of(vertices(S.model, 8), st.builds(LimitPoint, st.integers(0, S.model.limit_count - 1))))))
def test_sup_U_against_brute_force(args):
    S, s, t = args
    assume(s != t)
    U = [d.other(s) for d in bf_members(S, N_BIG) if d.has_endpoint(s)
         and in_interval(d.other(s), s, t)]
    assert _agrees(sup_U(S, s, t), _bf_sup(U, s), s)


@given(diagonal_sets(steps=(1,)).flatmap(
    lambda S: st.tuples(st.just(S), diagonals(S.model, 6), st.integers(0, 20), st.integers(0, 20))))
def test_sup_W_against_brute_force(args):
    S, Y, i, j = args
    y0, y1 = Y.x0, Y.x1
    # walk from the interval starts to pick t0, t1 inside them
    t0 = succ(y1, 2)
    for _ in range(i):
        if t0 == y0:
            break
        t0 = succ(t0) if not (t0.arc != y0.arc and t0.pos >= 30) else y0
    t1 = succ(y0, 2)
    for _ in range(j):
        if t1 == y1:
            break
        t1 = succ(t1) if not (t1.arc != y1.arc and t1.pos >= 30) else y1
    assume(in_interval(t0, succ(y1, 2), y0) if succ(y1, 2) != y0 else t0 == y0)
    assume(in_interval(t1, succ(y0, 2), y1) if succ(y0, 2) != y1 else t1 == y1)
    members = bf_members(S, N_BIG)

    def inside(x, a, b):
        return x == a if a == b else in_interval(x, a, b)

    W0 = [x0 for d in members for x0, x1 in ((d.x0, d.x1), (d.x1, d.x0))
          if inside(x0, succ(y1, 2), t0) and inside(x1, t1, y1)]
    got0 = sup_W(S, Y, t0, t1, "W0")
    assert _agrees(got0, _bf_sup(W0, succ(y1, 2)), succ(y1, 2))
    if isinstance(got0, Vertex):
        W1 = [d.other(got0) for d in members if d.has_endpoint(got0) and inside(d.other(got0), t1, y1)]
        got1 = sup_W(S, Y, None, t1, "W1", u0=got0)
        assert _agrees(got1, _bf_sup(W1, t1), t1)


# -- nc on windows ------------------------------------------------------------------

def test_nc_examples():
    nc = set(nc_window(S1, 6))
    assert {diag(0, k) for k in range(2, 7)} | {diag(0, -k) for k in range(2, 7)} <= nc
    assert all(d.has_endpoint(Vertex(0, 0)) for d in nc)
    assert diag(0, 5) in nc2_window(DiagonalSet(M1, (diag(0, 5),)), 6)
    assert nc_window(DiagonalSet(M2), 4) == window_diagonals(M2, 4)


@pytest.mark.parametrize("S", [S1, B, Z2], ids=["S1", "B", "Z2"])
def test_nc2_fixtures(S):
    c = nc2_window_check(S, 6)
    assert c.verdict is Verdict.HOLDS_UP_TO_BOUND and c.bound == 6
    # nc2 = X on windows goes with the Ptolemy condition
    assert check_ptolemy(S).ok


@settings(max_examples=60)
@given(diagonal_sets(max_explicit=3, max_families=2), st.integers(2, 5))
def test_nc_window_against_brute_force(S, W):
    members = bf_members(S, 3 * W + 20)
    want = [d for d in window_diagonals(S.model, W) if not any(bf_crosses(d, X) for X in members)]
    assert nc_window(S, W) == want


def test_nc2_flags_a_missing_diagonal():
    c = nc2_window_check(DiagonalSet(M1, (diag(0, 5), diag(2, 8))), 8)
    assert c.verdict is Verdict.FAILS
