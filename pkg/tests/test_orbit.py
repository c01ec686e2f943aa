"""Orbit recognition predicates, stabilizer, transport, frame reconstruction."""

import pytest

from cubicdisc.scalars import EXACT
from cubicdisc.tensors import frob, all_zero
from cubicdisc import sp2, hk, irrep, orbit

bk = EXACT


def reference():
    return hk.kappa(irrep.s_hat(bk))


def test_reference_passes_both_predicates():
    K = reference()
    assert orbit.is_cd_theorem(K).verdict
    assert orbit.is_cd_coordinates(K).verdict


def test_coordinate_residual_names():
    rep = orbit.is_cd_coordinates(reference())
    assert set(rep.residuals) == {"contraction", "symmetrized"}
    assert bool(rep)


def test_averaged_condition_on_reference():
    S = irrep.s_hat(bk)
    res = orbit.cd_averaged_residual(S.S, bk)
    assert all_zero(res, bk, scale=100.0)


def test_random_quartic_fails_predicates():
    for seed in (1, 2, 3):
        K = hk.kappa(orbit.random_quartic(seed, bk))
        assert not orbit.is_cd_coordinates(K).verdict
        assert not orbit.is_cd_theorem(K).verdict


def test_predicates_agree_on_samples():
    for seed in (4, 5):
        K = hk.kappa(orbit.random_quartic(seed, bk))
        assert (orbit.is_cd_theorem(K).verdict
                == orbit.is_cd_coordinates(K).verdict)


def test_stabilizer_is_upsilon_span():
    dim, stab = orbit.stabilizer(irrep.s_hat(bk), bk)
    assert dim == 3
    joint = orbit.span_rank(list(irrep.upsilons(bk)) + stab, bk)
    assert joint == 3


def test_orbit_dimension():
    assert orbit.orbit_dimension(reference()) == 7


def test_cayley_produces_group_elements():
    for seed in (6, 7, 8):
        M = orbit.cayley_sp2(orbit.random_sp2(seed, bk), bk)
        assert orbit.check_group_element(M, bk)


def test_cayley_rejects_nonelements():
    from cubicdisc.tensors import zeros
    bad = zeros((4, 4), bk)
    bad[0, 1] = bk.one
    with pytest.raises(ValueError):
        orbit.cayley_sp2(bad, bk)


def test_transport_preserves_predicates():
    K = reference()
    for seed in (9, 10):
        M = orbit.cayley_sp2(orbit.random_sp2(seed, bk), bk)
        Kt = orbit.transport_hk(K, M)
        assert orbit.is_cd_coordinates(Kt).verdict


def test_transport_composes():
    K = reference()
    M1 = orbit.cayley_sp2(orbit.random_sp2(12, bk), bk)
    M2 = orbit.cayley_sp2(orbit.random_sp2(13, bk), bk)
    K12 = orbit.transport_hk(orbit.transport_hk(K, M1), M2)
    Kboth = orbit.transport_hk(K, M1 @ M2)
    assert K12 == Kboth


def test_frames_reconstruction_standard():
    verdict, K = orbit.k_from_frames(list(irrep.script_e_frames(bk)), bk)
    assert verdict
    assert K == reference()


def test_frames_scaled_rejected():
    scaled = [F * bk.rational(2) for F in irrep.script_e_frames(bk)]
    verdict, K = orbit.k_from_frames(scaled, bk)
    assert not verdict and K is None


def test_frames_conjugated_give_transport():
    K = reference()
    M = orbit.cayley_sp2(orbit.random_sp2(14, bk), bk)
    # Conjugate the frames by the 8x8 action of the group element.
    from cubicdisc.tensors import zeros, conj_arr
    G8 = zeros((8, 8), bk)
    G8[:4, :4] = M
    G8[4:, 4:] = conj_arr(M, bk)
    from cubicdisc import linalg
    G8inv = linalg.inverse(G8, bk)
    conj_frames = [G8inv @ F @ G8 for F in irrep.script_e_frames(bk)]
    verdict, Kc = orbit.k_from_frames(conj_frames, bk)
    assert verdict
    assert Kc == orbit.transport_hk(K, M)


def test_random_quartic_is_valid():
    S = orbit.random_quartic(99, bk)
    S.validate()
    assert orbit.random_quartic(99, bk) == S   # deterministic in the seed
