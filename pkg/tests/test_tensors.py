"""Structure tensors, the antilinear j-map, and indexed tensor bookkeeping."""

import pytest

from cubicdisc.scalars import EXACT
from cubicdisc.tensors import (zeros, pmat, eye, g8mat, jmats, frob, all_zero,
                               FLIP, standard_structure, IndexedTensor,
                               IndexSlot, UP, LOW, PLAIN, BAR, basis_vector,
                               jmap4, sym4, is_totally_symmetric)

bk = EXACT


def test_pi_matrix():
    P = pmat(bk)
    assert all_zero(P @ P + eye(4, bk), bk)
    assert all_zero(P.T + P, bk)
    assert all_zero(P.T @ P - eye(4, bk), bk)


def test_pi_full_contraction_is_four():
    st = standard_structure(bk)
    total = (st.pi_upper * st.pi_lower).sum()
    assert total == bk.rational(4)


def test_mixed_pi_contraction_is_minus_delta():
    P = pmat(bk)
    assert all_zero(P @ P + eye(4, bk), bk)


def test_metric_and_complex_structures():
    g = g8mat(bk)
    J1, J2, J3 = jmats(bk)
    assert all_zero(J1 @ J2 - J3, bk)
    for J in (J1, J2, J3):
        assert all_zero(J @ J + eye(8, bk), bk)
        assert all_zero(J.T @ g @ J - g, bk)


def test_flip_matches_metric():
    g = g8mat(bk)
    for a in range(8):
        assert g[a, FLIP[a]] == bk.one


def _random_tensor(rank, sig, seed=3):
    import random
    rng = random.Random(seed)
    comps = zeros((4,) * rank, bk)
    for idx in __import__("itertools").product(range(4), repeat=rank):
        comps[idx] = bk.scalar(rng.randint(-2, 2), rng.randint(-2, 2))
    return IndexedTensor(sig, comps, bk)


def test_jmap_is_involution_up_to_sign():
    sig = [IndexSlot(UP, PLAIN), IndexSlot(LOW, BAR)]
    T = _random_tensor(2, sig)
    TT = T.jmap().jmap()
    assert all_zero(TT.components - T.components, bk,
                    scale=frob(T.components, bk))
    sig3 = [IndexSlot(UP, PLAIN)] * 3
    T3 = _random_tensor(3, sig3)
    T3T = T3.jmap().jmap()
    assert all_zero(T3T.components + T3.components, bk,
                    scale=frob(T3.components, bk))


def test_contraction_legality():
    sig = [IndexSlot(UP, PLAIN), IndexSlot(LOW, PLAIN)]
    T = _random_tensor(2, sig)
    tr = T.contract(0, 1)
    assert tr.rank == 0
    bad = IndexedTensor([IndexSlot(UP, PLAIN), IndexSlot(LOW, BAR)],
                        T.components, bk)
    with pytest.raises(ValueError):
        bad.contract(0, 1)
    bad2 = IndexedTensor([IndexSlot(UP, PLAIN), IndexSlot(UP, PLAIN)],
                         T.components, bk)
    with pytest.raises(ValueError):
        bad2.contract(0, 1)


def test_raise_lower_toggle_bar():
    v = basis_vector(2, bk)
    low = v.lower_slot(0)
    assert low.signature[0].variance == LOW
    assert low.signature[0].bar == BAR
    # Components are unchanged because the metric is the identity in the
    # adapted mixed components.
    assert all_zero(low.components - v.components, bk)
    up = low.raise_slot(0)
    assert up.signature[0] == v.signature[0]


def test_symmetrize_antisymmetrize():
    sig = [IndexSlot(LOW, PLAIN)] * 3
    T = _random_tensor(3, sig)
    S = T.symmetrize([0, 1, 2])
    import numpy as np
    assert all_zero(S.components - np.transpose(S.components, (1, 0, 2)), bk,
                    scale=frob(S.components, bk))
    A = T.antisymmetrize([0, 1])
    assert all_zero(A.components + np.transpose(A.components, (1, 0, 2)), bk,
                    scale=frob(A.components, bk))


def test_sym4_and_symmetry_predicate():
    import random
    rng = random.Random(0)
    S = zeros((4, 4, 4, 4), bk)
    for idx in __import__("itertools").product(range(4), repeat=4):
        S[idx] = bk.rational(rng.randint(-3, 3))
    Ssym = sym4(S, bk)
    assert is_totally_symmetric(Ssym, bk)
    assert not is_totally_symmetric(S, bk) or all_zero(S - Ssym, bk)


def test_jmap4_involution():
    import random, itertools
    rng = random.Random(1)
    S = zeros((4, 4, 4, 4), bk)
    for idx in itertools.product(range(4), repeat=4):
        S[idx] = bk.scalar(rng.randint(-2, 2), rng.randint(-2, 2))
    assert all_zero(jmap4(jmap4(S, bk), bk) - S, bk, scale=frob(S, bk))
