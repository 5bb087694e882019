import pytest
from hypothesis import assume, given, settings, strategies as st

from infgon.certificate import Verdict
from infgon.classify import (check_maximality, check_noncrossing, flip,
                             flipped_diagonal, is_cluster_tilting, precover,
                             quiver_check, same_set)
from infgon.conditions import check_PC1, check_PC2, is_torsion_first_half
from infgon.cyclic import Vertex
from infgon.diagonals import (DiagonalFamily, DiagonalSet, Fixed, TailUp,
                              crosses, set_contains, truncate_window)
from infgon.errors import (NonTerminationError, NotAMemberError,
                           PreconditionError)
from infgon.fixtures import M1, M2, double_zigzag, fan, leapfrog
from infgon.hom import factors_through, hom_dim

from helpers import bf_crosses, diag, diagonal_sets, diagonals

S1, B, Z2 = fan(), leapfrog(), double_zigzag()


def test_cluster_tilting_examples():
    for S in (S1, B):
        c = is_cluster_tilting(S, 16)
        assert c.verdict is Verdict.HOLDS
        assert c.find("maximality").verdict is Verdict.HOLDS_UP_TO_BOUND
        assert c.find("maximality").bound == 16
        assert c.find("noncrossing").exact and c.find("features").exact
    c = is_cluster_tilting(Z2, 16)
    assert c.verdict is Verdict.FAILS
    assert c.failing_leaf().name == "features"
    assert c.find("noncrossing").exact


def test_maximality_witness_is_real():
    half = DiagonalSet(M1, (), S1.families[:1])
    c = check_maximality(half, 8)
    assert c.verdict is Verdict.FAILS
    D = c.witness
    assert not set_contains(half, D)
    assert not any(bf_crosses(D, X) for X in truncate_window(half, 200))


def test_noncrossing_witness_is_real():
    S = DiagonalSet(M1, (diag(1, -1),), S1.families)
    c = check_noncrossing(S)
    X, Y = c.witness
    assert c.verdict is Verdict.FAILS and crosses(X, Y)
    assert set_contains(S, X) and set_contains(S, Y)


def test_ct_implies_torsion_on_fixtures():
    for S in (S1, B):
        assert is_cluster_tilting(S, 8).ok and is_torsion_first_half(S).ok


# -- precovers -----------------------------------------------------------------------

def test_precover_examples():
    assert precover(S1, diag(2, 7)) == [diag(0, 7)]
    assert precover(S1, diag(2, -3)) == [diag(0, -3)]
    assert precover(S1, diag(-3, 2)) == [diag(0, -3)]


def test_precover_needs_pc():
    with pytest.raises(PreconditionError):
        precover(Z2, diag(2, 7, arc=0))


def test_precover_iteration_cap():
    with pytest.raises(NonTerminationError) as info:
        precover(B, diag(30, -30), max_iter=1)
    assert info.value.trace


def _sound(S, Y, W):
    out = precover(S, Y)
    assert all(set_contains(S, d) for d in out)
    for X in truncate_window(S, W):
        if hom_dim(X, Y):
            assert any(factors_through(X, Y, P) for P in out), (X, Y, out)
    if set_contains(S, Y):
        assert Y in out
    return out


@given(st.sampled_from([S1, B]).flatmap(lambda S: st.tuples(st.just(S), diagonals(S.model, 14))))
def test_precover_sound_on_fixtures(args):
    S, Y = args
    _sound(S, Y, 20)


@settings(max_examples=200)
@given(diagonal_sets(max_explicit=3, max_families=3, steps=(1,)).flatmap(
    lambda S: st.tuples(st.just(S), diagonals(S.model, 8))))
def test_precover_sound_on_random_pc_sets(args):
    S, Y = args
    assume(check_PC1(S).ok and check_PC2(S).ok)
    _sound(S, Y, 14)


# -- flips ----------------------------------------------------------------------------

def test_flip_examples():
    T = flip(B, diag(1, -1), 8)
    assert set_contains(T, diag(0, -2)) and not set_contains(T, diag(1, -1))
    assert same_set(flip(T, diag(0, -2), 8), B)
    T = flip(S1, diag(0, 5), 8)
    assert set_contains(T, diag(4, 6)) and not set_contains(T, diag(0, 5))
    assert same_set(flip(T, diag(4, 6), 8), S1)
    with pytest.raises(NotAMemberError):
        flip(S1, diag(1, 5), 8)
    with pytest.raises(PreconditionError):
        flip(Z2, Z2.families[0].member(0), 8)


@pytest.mark.parametrize("S", [S1, B], ids=["S1", "B"])
def test_flip_keeps_triangulation(S):
    W = 6
    for d in truncate_window(S, W):
        T = flip(S, d, W)
        assert check_noncrossing(T).exact
        assert check_maximality(T, W).ok
        e = flipped_diagonal(S, d, W)
        assert set(truncate_window(S, W)) ^ set(truncate_window(T, W)) <= {d, e}
        assert same_set(flip(T, e, W), S)


def test_same_set():
    assert same_set(S1, fan())
    assert not same_set(S1, B)
    split = DiagonalSet(M1, (diag(0, 2), diag(0, 3)),
                        (DiagonalFamily(Fixed(Vertex(0, 0)), TailUp(0, 2), 2), S1.families[1]))
    assert same_set(split, S1)
    sparse = DiagonalSet(M1, (), (DiagonalFamily(Fixed(Vertex(0, 0)), TailUp(0, 2, 2)),
                                  S1.families[1]))
    assert not same_set(sparse, S1)


def test_quiver_examples():
    assert hom_dim(diag(0, 5), diag(0, 6)) == 1 and hom_dim(diag(0, 6), diag(0, 5)) == 0
    for S in (S1, B):
        c = quiver_check(S, 8)
        assert c.ok and c.bound == 8
    with pytest.raises(PreconditionError):
        quiver_check(Z2, 8)
