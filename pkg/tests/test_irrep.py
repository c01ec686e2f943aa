"""The irreducible representation, the quartic, projections, Casimirs."""

import numpy as np

from cubicdisc.scalars import EXACT
from cubicdisc.tensors import zeros, eye, frob, all_zero
from cubicdisc import sp2, irrep, hk

bk = EXACT


def test_rep_delta_commutators():
    E1, E2, E3 = irrep.rep_delta(bk)
    assert all_zero(E1 @ E2 - E2 @ E1 - E3, bk)
    assert all_zero(E2 @ E3 - E3 @ E2 - E1, bk)
    assert all_zero(E3 @ E1 - E1 @ E3 - E2, bk)


def test_rep_w_golden_values():
    E1, E2, E3 = irrep.rep_w(bk)
    half = bk.rational(1, 2)
    assert E1[0, 0] == -(bk.i * bk.rational(3, 2))
    assert E1[1, 1] == -(bk.i * half)
    assert E1[2, 2] == bk.i * bk.rational(3, 2)
    assert E1[3, 3] == bk.i * half
    assert E2[0, 1] == -(bk.sqrt3 * half)
    assert E2[1, 3] == bk.one
    assert E3[0, 1] == bk.i_sqrt3 * half
    assert E3[1, 3] == -bk.i


def test_rep_w_commutators():
    E1, E2, E3 = irrep.rep_w(bk)
    assert all_zero(E1 @ E2 - E2 @ E1 - E3, bk)
    assert all_zero(E2 @ E3 - E3 @ E2 - E1, bk)
    assert all_zero(E3 @ E1 - E1 @ E3 - E2, bk)


def test_upsilon_raises_to_rep():
    from cubicdisc.tensors import pmat
    P = pmat(bk)
    for U, E in zip(irrep.upsilons(bk), irrep.rep_w(bk)):
        assert all_zero(P @ U - E, bk, scale=frob(E, bk))


def test_upsilon_lemma_all_exact():
    res = irrep.upsilon_lemma_residuals(bk)
    assert set(res) == {"symmetric_and_real", "pairing", "bracket",
                        "invariance", "sum_of_squares", "eigen_contraction",
                        "pi_recovery"}
    for name, value in res.items():
        assert value == 0.0, name


def test_quartic_golden_components():
    S = irrep.s_hat(bk).S
    assert S[0, 1, 2, 3] == bk.rational(-3, 4)
    assert S[0, 3, 3, 3] == bk.sqrt3
    assert S[0, 2, 0, 2] == bk.rational(-3, 2)


def test_quartic_values():
    S = irrep.s_hat(bk).S
    e1 = zeros((4,), bk)
    e1[0] = bk.one
    assert not irrep.quartic_form(S, e1, bk)
    e13 = e1.copy()
    e13[2] = bk.one
    assert irrep.quartic_form(S, e13, bk) == bk.rational(-9)


def test_discriminant_values():
    one, zero = bk.one, bk.zero
    assert irrep.classical_discriminant(one, zero, -one, zero, bk) == bk.rational(4)
    assert not irrep.classical_discriminant(one, zero, bk.rational(-3),
                                            bk.rational(2), bk)


def test_substitution_identity():
    assert irrep.substitution_check(bk)


def test_projection_identities():
    Ph = irrep.proj_sp1ir(bk)
    I = eye(10, bk)
    assert all_zero(Ph @ Ph - Ph, bk, scale=10.0)
    T = hk.t_k(hk.kappa(irrep.s_hat(bk)))
    assert all_zero((Ph - I * bk.rational(3, 10)) * bk.rational(5) - T, bk,
                    scale=10.0)
    dagP = sp2.dagger(Ph, bk)
    assert all_zero(dagP - Ph * bk.rational(2) + I * bk.rational(12, 5), bk,
                    scale=10.0)
    assert all_zero(dagP @ dagP * bk.rational(25) + dagP * bk.rational(70)
                    + I * bk.rational(24), bk, scale=100.0)


def test_reducible_case_identities():
    Pr = irrep.projection_from_rep(irrep.reducible_rep(bk), bk)
    d = sp2.dagger(Pr, bk)
    assert all_zero(d @ d + d * bk.rational(2), bk, scale=100.0)


def test_trivial_factor_identities():
    Pt = irrep.projection_from_rep(irrep.trivial_factor_rep(bk), bk)
    d = sp2.dagger(Pt, bk)
    assert all_zero(d @ d + d * bk.rational(3, 2) - Pt * bk.rational(10), bk,
                    scale=100.0)


def test_frame_identities():
    F = irrep.script_e_frames(bk)
    for s in range(3):
        for t in range(3):
            v = irrep.endo_inner(F[s], F[t], bk)
            assert v == (bk.rational(5) if s == t else bk.zero)
    assert all_zero(F[0] @ F[1] - F[1] @ F[0] - F[2], bk, scale=10.0)
    total = zeros((8, 8), bk)
    for Fs in F:
        total = total + Fs @ Fs
    assert all_zero(total + eye(8, bk) * bk.rational(15, 4), bk, scale=10.0)


def test_wedge_normalization():
    w = irrep.eps_wedge_residual(irrep.script_e_frames(bk),
                                 irrep.omega_forms(bk), bk)
    assert all_zero(w, bk, scale=100.0)


def test_casimir_module_v():
    table = irrep.casimir_decompose(irrep.module_v(bk), kmax=4, lmax=2)
    assert table == {(3, 1): 1}


def test_casimir_module_sp2():
    table = irrep.casimir_decompose(irrep.module_sp2(bk), kmax=7, lmax=1)
    assert table == {(2, 0): 1, (6, 0): 1}
    dims = {k: m * (k[0] + 1) * (k[1] + 1) for k, m in table.items()}
    assert dims == {(2, 0): 3, (6, 0): 7}
