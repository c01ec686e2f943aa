"""The Lie algebra sp(2): models, basis duality, bracket, dagger."""

import pytest

from cubicdisc.scalars import EXACT
from cubicdisc.tensors import zeros, eye, pmat, frob, all_zero
from cubicdisc import sp2

bk = EXACT


def test_pairs_enumeration():
    assert len(sp2.PAIRS) == 10
    assert sp2.PAIRS[0] == (0, 0) and sp2.PAIRS[-1] == (3, 3)


def test_sharp_dual_pairing():
    S = sp2.sharp_basis(bk)
    D = sp2.sharp_dual_basis(bk)
    for a in range(10):
        for b in range(10):
            v = sp2.inner(D[a], S[b], bk)
            assert v == (bk.one if a == b else bk.zero)


def test_dollar_coordinates_roundtrip():
    for X in sp2.real_basis(bk):
        v = sp2.dollar_coords(X, bk)
        Y = sp2.from_dollar_coords(v, bk)
        assert all_zero(X - Y, bk, scale=frob(X, bk))


def test_real_basis_is_real():
    for X in sp2.real_basis(bk):
        sym_ok, real_ok = sp2.is_sp2_element(X, bk)
        assert sym_ok and real_ok


def test_bracket_closure_and_antisymmetry():
    R = sp2.real_basis(bk)
    X, Y = R[2], R[8]
    B = sp2.bracket(X, Y, bk)
    sym_ok, real_ok = sp2.is_sp2_element(B, bk)
    assert sym_ok and real_ok
    assert all_zero(B + sp2.bracket(Y, X, bk), bk, scale=frob(B, bk) + 1.0)


def test_bracket_matches_endomorphism_commutator():
    R = sp2.real_basis(bk)
    X, Y = R[1], R[6]
    A, B = sp2.to_endo(X, bk), sp2.to_endo(Y, bk)
    C = sp2.to_endo(sp2.bracket(X, Y, bk), bk)
    assert all_zero(A @ B - B @ A - C, bk, scale=frob(C, bk) + 1.0)


def test_model_conversion_validates():
    X = sp2.real_basis(bk)[3]
    A = sp2.model_convert(X, bk, "sym_to_endo")
    back = sp2.model_convert(A, bk, "endo_to_sym")
    assert all_zero(X - back, bk, scale=frob(X, bk))
    bad = zeros((4, 4), bk)
    bad[0, 1] = bk.one      # not symmetric
    with pytest.raises(ValueError):
        sp2.model_convert(bad, bk, "sym_to_endo")


def test_endo_on_v_block_structure():
    X = sp2.real_basis(bk)[0]
    M = sp2.endo_on_v(X, bk)
    assert all_zero(M[:4, 4:], bk)
    assert all_zero(M[4:, :4], bk)


def test_invariant_inner_product():
    R = sp2.real_basis(bk)
    X, Y, Z = R[0], R[4], R[9]
    lhs = sp2.inner(sp2.bracket(Z, X, bk), Y, bk)
    rhs = -sp2.inner(X, sp2.bracket(Z, Y, bk), bk)
    assert not (lhs - rhs)


def test_dagger_of_identity():
    dag = sp2.dagger(eye(10, bk), bk)
    assert all_zero(dag + eye(10, bk) * bk.rational(6), bk, scale=10.0)


def test_dagger_accepts_callable():
    dag = sp2.dagger(lambda X: X * bk.rational(2), bk)
    assert all_zero(dag + eye(10, bk) * bk.rational(12), bk, scale=20.0)


def test_endo_is_real():
    assert sp2.endo_is_real(eye(10, bk), bk)
    assert not sp2.endo_is_real(eye(10, bk) * bk.i, bk)
