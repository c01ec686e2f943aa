"""Recognition and geometry of the cubic discriminant orbit.

Two equivalent predicates decide whether a hyper-Kahler curvature type tensor
K lies on the orbit of the reference quartic: an operator-level one built
from T_K (characteristic identity plus a bracket compatibility condition),
and a coordinate-level one phrased directly on the quartic S = kappa_inv(K).
The module also computes stabilizer and orbit dimensions, Cayley-type group
elements for moving along the orbit, and reconstruction of K from a frame
triple of endomorphisms.
"""

import itertools
import random

import numpy as np

from .scalars import EXACT
from .tensors import (zeros, conj_arr, pmat, eye, g8mat, jmats, frob, all_zero,
                      slot_contract, sym4, jmap4, FLIP)
from . import sp2
from . import linalg
from .hk import HKTensor, SymQuartic, kappa, kappa_inv, t_k, t_k_apply


class CdReport:
    """Outcome of a cubic discriminant test: overall verdict plus residual norms."""

    def __init__(self, verdict, residuals):
        self.verdict = verdict
        self.residuals = dict(residuals)

    def __bool__(self):
        return self.verdict

    def __repr__(self):
        return "CdReport(verdict=%r, residuals=%r)" % (self.verdict, self.residuals)


def is_cd_theorem(K):
    """Operator-level test: (2T - 7)(2T + 3) = 0 and the bracket condition

    [T A, T B] - T[T A, B] = (3/2)(T[A, B] - [A, T B])  for all A, B in sp(2).
    """
    bk = K.bk
    T = t_k(K)
    n = T.shape[0]
    I = eye(n, bk)
    two = bk.rational(2)
    char = (T * two - I * bk.rational(7)) @ (T * two + I * bk.rational(3))
    scale = max(frob(T, bk) ** 2, 1.0)
    char_ok = all_zero(char, bk, scale=scale)
    char_res = frob(char, bk)

    D = sp2.dollar_basis(bk)
    half3 = bk.rational(3, 2)
    worst = 0.0
    cond_ok = True
    for i, j in itertools.combinations(range(len(D)), 2):
        A, B = D[i], D[j]
        TA = t_k_apply(K, A)
        TB = t_k_apply(K, B)
        lhs = sp2.bracket(TA, TB, bk) - t_k_apply(K, sp2.bracket(TA, B, bk))
        rhs = (t_k_apply(K, sp2.bracket(A, B, bk)) - sp2.bracket(A, TB, bk)) * half3
        res = lhs - rhs
        worst = max(worst, frob(res, bk))
        if not all_zero(res, bk, scale=scale):
            cond_ok = False
    return CdReport(char_ok and cond_ok,
                    {"characteristic": char_res, "bracket_condition": worst})


def _sym_first4(T, bk):
    """Average a rank-6 array over the 24 permutations of its first 4 slots."""
    total = zeros(T.shape, bk)
    for perm in itertools.permutations(range(4)):
        total = total + np.transpose(T, perm + (4, 5))
    return total * bk.rational(1, 24)


def cd_condition_one_residual(S, bk):
    """sum_{tau nu} U[tau,nu,a,b] S[tau,nu,c,d] - 2 S_{abcd}
       - (21/8)(P[a,c]P[b,d] + P[a,d]P[b,c]),
    where U[t,n,a,b] = P[s,t] P[m,n] S[s,m,a,b]."""
    P = pmat(bk)
    U = slot_contract(slot_contract(S, 0, P), 1, P)
    lhs = np.tensordot(U, S, axes=([0, 1], [0, 1]))
    PP = np.tensordot(P, P, axes=0)
    rhs = S * bk.rational(2)
    rhs = rhs + np.transpose(PP, (0, 2, 1, 3)) * bk.rational(21, 8)
    rhs = rhs + np.transpose(PP, (0, 2, 3, 1)) * bk.rational(21, 8)
    return lhs - rhs


def cd_condition_two_residual(S, bk):
    """Sym_{abcd}( pi^{st} S_{sabc} S_{tdmn} + (3/4) S_{abcm} pi_{nd}
                  + (3/4) S_{abcn} pi_{md} )."""
    P = pmat(bk)
    A = np.tensordot(S, P, axes=([0], [0]))          # [a,b,c,t]
    t1 = np.tensordot(A, S, axes=([3], [0]))         # [a,b,c,d,m,n]
    q34 = bk.rational(3, 4)
    SP = np.tensordot(S, P, axes=0)                  # S[a,b,c,x] P[y,z]
    t2 = np.transpose(SP, (0, 1, 2, 5, 3, 4)) * q34  # S[abcm] P[n,d]
    t3 = np.transpose(SP, (0, 1, 2, 5, 4, 3)) * q34  # S[abcn] P[m,d]
    return _sym_first4(t1 + t2 + t3, bk)


def cd_averaged_residual(S, bk):
    """Sym_{abcd}( pi^{st} S_{smab} S_{tncd} - (1/4) S_{abcd} pi_{mn}
                  + (1/2) pi_{am} S_{nbcd} - (1/2) pi_{an} S_{mbcd} )."""
    P = pmat(bk)
    A = np.tensordot(S, P, axes=([0], [0]))          # S[s,m,a,b]P[s,t] -> [m,a,b,t]
    B = np.tensordot(A, S, axes=([3], [0]))          # [m,a,b,n,c,d]
    t1 = np.transpose(B, (1, 2, 4, 5, 0, 3))         # -> [a,b,c,d,m,n]
    t2 = np.tensordot(S, P, axes=0) * bk.rational(-1, 4)
    PS = np.tensordot(P, S, axes=0)                  # P[x,y] S[p,q,r,s]
    half = bk.rational(1, 2)
    t3 = np.transpose(PS, (0, 3, 4, 5, 1, 2)) * half      # P[a,m] S[n,b,c,d]
    t4 = np.transpose(PS, (0, 3, 4, 5, 2, 1)) * (-half)   # P[a,n] S[m,b,c,d]
    return _sym_first4(t1 + t2 + t3 + t4, bk)


def is_cd_coordinates(K_or_S, bk=None):
    """Coordinate-level test on the quartic S = kappa_inv(K)."""
    if isinstance(K_or_S, HKTensor):
        S = kappa_inv(K_or_S)
    else:
        S = K_or_S
    bk = S.bk
    arr = S.S
    scale = max(frob(arr, bk) ** 2, 1.0)
    r1 = cd_condition_one_residual(arr, bk)
    r2 = cd_condition_two_residual(arr, bk)
    ok = all_zero(r1, bk, scale=scale) and all_zero(r2, bk, scale=scale)
    return CdReport(ok, {"contraction": frob(r1, bk),
                         "symmetrized": frob(r2, bk)})


# -- stabilizer and orbit dimension ---------------------------------------


def quartic_action(S, X, bk):
    """Lie derivative of a lower-index quartic along the sp(2) element X."""
    A = sp2.to_endo(X, bk)
    out = zeros(S.shape, bk)
    for axis in range(4):
        out = out + slot_contract(S, axis, A)
    return out


def _real_flat(A, bk):
    out = []
    for x in np.asarray(A, dtype=object).flat:
        out.append(bk.re(x))
        out.append(bk.im(x))
    return out


def stabilizer(S, bk=EXACT):
    """Stabilizer of a quartic inside the real form of sp(2).

    Returns (dimension, basis) where the basis elements are symmetric-model
    matrices spanning the annihilator of the action.
    """
    if isinstance(S, SymQuartic):
        S = S.S
    basis = sp2.real_basis(bk)
    rows = [_real_flat(quartic_action(S, X, bk), bk) for X in basis]
    # The action matrix has the ten generators as columns; stabilizer
    # coefficients are its nullspace.
    cols = [[rows[k][m] for k in range(10)] for m in range(len(rows[0]))]
    null = linalg.nullspace(cols, bk)
    stab = []
    for v in null:
        X = zeros((4, 4), bk)
        for c, B in zip(v, basis):
            X = X + B * bk.re(c)
        stab.append(X)
    return len(null), stab


def span_rank(elements, bk):
    """Rank over the reals of a list of sp(2) elements (dollar coordinates)."""
    rows = [_real_flat(sp2.dollar_coords(X, bk), bk) for X in elements]
    return linalg.rank(rows, bk)


def orbit_dimension(K):
    """Dimension of the sp(2) (+) sp(1) orbit through K, via the rank of the
    infinitesimal action on the full tensor."""
    bk = K.bk
    f = K.full8()
    from .hk import lie_derivative_full8
    gens = [sp2.endo_on_v(X, bk) for X in sp2.real_basis(bk)]
    gens += list(jmats(bk))
    rows = [_real_flat(lie_derivative_full8(f, U8, bk), bk) for U8 in gens]
    return linalg.rank(rows, bk)


# -- moving along the orbit ----------------------------------------------


def cayley_sp2(X, bk=EXACT):
    """Cayley transform of an sp(2) element: M = (I - PX)(I + PX)^{-1}.

    The result is a group element of Sp(2) acting on W; raises ValueError
    when I + PX is singular.
    """
    sp2.check_sp2(X, bk)
    A = pmat(bk) @ X
    I = eye(4, bk)
    M = (I - A) @ linalg.inverse(I + A, bk)
    return M


def check_group_element(M, bk):
    """M preserves pi (M^T P M = P) and the quaternionic structure
    (conj(M) = -P M P)."""
    P = pmat(bk)
    s = max(frob(M, bk) ** 2, 1.0)
    sympl = all_zero(M.T @ P @ M - P, bk, scale=s)
    quat = all_zero(conj_arr(M, bk) + P @ M @ P, bk, scale=s)
    return sympl and quat


def transport_quartic(S, M, bk=None):
    """Pullback of a lower-index quartic along a group element M (right action)."""
    if isinstance(S, SymQuartic):
        bk = S.bk
        S = S.S
    out = S
    for axis in range(4):
        out = slot_contract(out, axis, M)
    return SymQuartic(out, bk)


def transport_hk(K, M):
    """Transport of a hyper-Kahler curvature type tensor along M in Sp(2)."""
    return kappa(transport_quartic(kappa_inv(K), M))


# -- reconstruction from frames -------------------------------------------


def _check_frames(frames, bk):
    g = g8mat(bk)
    J = jmats(bk)
    scale = max(max(frob(E, bk) for E in frames) ** 2, 1.0)
    for E in frames:
        low = E.T @ g
        if not all_zero(low + low.T, bk, scale=scale):
            raise ValueError("frame endomorphism is not skew with respect to g")
        for Js in J:
            if not all_zero(E @ Js - Js @ E, bk, scale=scale):
                raise ValueError("frame endomorphism does not commute with the "
                                 "hypercomplex structure")


def _frames_close(frames, bk):
    scale = max(max(frob(E, bk) for E in frames) ** 2, 1.0)
    res = []
    res.append(frames[0] @ frames[1] - frames[1] @ frames[0] - frames[2])
    res.append(frames[1] @ frames[2] - frames[2] @ frames[1] - frames[0])
    res.append(frames[2] @ frames[0] - frames[0] @ frames[2] - frames[1])
    return all(all_zero(r, bk, scale=scale) for r in res)


def k_from_frames(frames, bk=EXACT):
    """Build the curvature type tensor determined by a frame triple.

    K(x,y,z,w) = sum_s eps_s(x,y) eps_s(z,w)
                 + (3/8)(g(x,w)g(y,z) - g(x,z)g(y,w))
                 + (3/8) sum_s (omega_s(x,z) omega_s(w,y) + omega_s(x,w) omega_s(y,z))

    with eps_s(x,y) = g(E_s x, y).  Returns (verdict, K): the verdict is the
    sp(1) closure of the triple together with the frame normalization test
    sum_s eps_s ^ eps_s = -(3/4) Omega, and K is None when it fails.
    """
    _check_frames(frames, bk)
    if not _frames_close(frames, bk):
        return False, None
    g = g8mat(bk)
    J = jmats(bk)
    eps = [E.T @ g for E in frames]
    om = [Js.T @ g for Js in J]

    from .irrep import wedge2
    total = zeros((8, 8, 8, 8), bk)
    for e in eps:
        total = total + wedge2(e, e, bk)
    Om = zeros((8, 8, 8, 8), bk)
    for o in om:
        Om = Om + wedge2(o, o, bk)
    scale = max(frob(total, bk), 1.0)
    verdict = all_zero(total + Om * bk.rational(3, 4), bk, scale=scale)
    if not verdict:
        return False, None

    f = zeros((8, 8, 8, 8), bk)
    for e in eps:
        f = f + np.tensordot(e, e, axes=0)
    gg = np.tensordot(g, g, axes=0)   # g[x,w] g[y,z] at [x,w,y,z]
    q38 = bk.rational(3, 8)
    f = f + np.transpose(gg, (0, 2, 3, 1)) * q38
    f = f - np.transpose(gg, (0, 2, 1, 3)) * q38
    for o in om:
        t = np.tensordot(o, o, axes=0)
        # omega[x,z] omega[w,y] and omega[x,w] omega[y,z]
        f = f + np.transpose(t, (0, 3, 1, 2)) * q38
        f = f + np.transpose(t, (0, 2, 3, 1)) * q38
    Kmix = f[np.ix_(range(4), range(4, 8), range(4), range(4, 8))]
    K = HKTensor(Kmix, bk)
    K.validate()
    return True, K


# -- random elements -------------------------------------------------------


def random_quartic(seed, bk=EXACT, lo=-3, hi=3):
    """A random integer-component symmetric j-real quartic (seeded)."""
    rng = random.Random(seed)
    S = zeros((4, 4, 4, 4), bk)
    it = np.nditer(np.zeros((4, 4, 4, 4)), flags=["multi_index"])
    for _ in it:
        idx = it.multi_index
        S[idx] = bk.scalar(rng.randint(lo, hi), rng.randint(lo, hi),
                           rng.randint(lo, hi), rng.randint(lo, hi))
    S = sym4(S, bk)
    S = (S + jmap4(S, bk)) * bk.rational(1, 2)
    return SymQuartic(S, bk)


def random_sp2(seed, bk=EXACT, lo=-3, hi=3):
    """A random element of the real form of sp(2) with small integer coordinates."""
    rng = random.Random(seed)
    X = zeros((4, 4), bk)
    for B in sp2.real_basis(bk):
        X = X + B * bk.rational(rng.randint(lo, hi))
    return X
