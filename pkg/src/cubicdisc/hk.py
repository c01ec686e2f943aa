"""Hyper-Kahler curvature type tensors: the maps kappa and kappa_inv, the
operator T_K, reconstruction of K from an endomorphism with dagger L = 2L,
the tangent-space operator H, and the two double-contraction identities.

A SymQuartic is a totally symmetric j-real rank-4 array S_{alpha beta gamma
delta}.  An HKTensor stores only the mixed components K_{alpha betabar gamma
deltabar}; the full tensor on the 8-dimensional space is reconstructed from
the pair antisymmetries and reality.
"""

import numpy as np

from .scalars import EXACT
from .tensors import (zeros, conj_arr, pmat, frob, all_zero, slot_contract,
                      jmap4, is_totally_symmetric, sym4, FLIP, g8mat, jmats)
from . import sp2
from . import linalg


class SymQuartic:
    """Totally symmetric, j-real rank-4 tensor S_{alpha beta gamma delta}."""

    def __init__(self, S, bk=EXACT, check=True):
        self.S = np.asarray(S, dtype=object)
        self.bk = bk
        if check:
            self.validate()

    def validate(self):
        if not is_totally_symmetric(self.S, self.bk):
            raise ValueError("quartic is not totally symmetric")
        if not all_zero(self.S - jmap4(self.S, self.bk), self.bk,
                        scale=frob(self.S, self.bk)):
            raise ValueError("quartic violates the j-reality condition")

    def __eq__(self, other):
        return all_zero(self.S - other.S, self.bk,
                        scale=frob(self.S, self.bk) + frob(other.S, other.bk))


def _kappa_core(S, bk):
    """T[a,b,c,d] = sum_{s,t} S[a,s,c,t] P[s,b] P[t,d]; self-inverse coordinate form."""
    P = pmat(bk)
    out = np.tensordot(S, P, axes=([1], [0]))        # axes: a, c, t, b
    out = np.tensordot(out, P, axes=([2], [0]))      # axes: a, c, b, d
    return np.transpose(out, (0, 2, 1, 3))


def kappa(S, bk=None):
    """The isomorphism from symmetric quartics to HK curvature type tensors."""
    if isinstance(S, SymQuartic):
        bk = S.bk
        S = S.S
    return HKTensor(_kappa_core(S, bk), bk)


def kappa_inv(K, bk=None):
    """Inverse of kappa; output is validated totally symmetric and j-real."""
    if isinstance(K, HKTensor):
        bk = K.bk
        K = K.Kmix
    return SymQuartic(_kappa_core(K, bk), bk)


class HKTensor:
    """Hyper-Kahler curvature type tensor, stored via mixed components."""

    def __init__(self, Kmix, bk=EXACT):
        self.Kmix = np.asarray(Kmix, dtype=object)
        self.bk = bk
        self._full8 = None

    def quartic(self):
        return kappa_inv(self)

    def validate(self):
        """K is of HK curvature type iff kappa_inv(K) is symmetric and j-real."""
        self.quartic()

    def __eq__(self, other):
        return all_zero(self.Kmix - other.Kmix, self.bk,
                        scale=frob(self.Kmix, self.bk) + frob(other.Kmix, other.bk))

    def full8(self):
        """Dense components on V^C: indices 0..3 unbarred, 4..7 barred."""
        if self._full8 is not None:
            return self._full8
        bk = self.bk
        f = zeros((8, 8, 8, 8), bk)
        for a in range(4):
            for b in range(4):
                for c in range(4):
                    for d in range(4):
                        v = self.Kmix[a, b, c, d]
                        if bk.name == "exact" and not v:
                            continue
                        w = bk.conj(v)
                        for (i1, i2, s1) in ((a, b + 4, 1), (b + 4, a, -1)):
                            for (i3, i4, s2) in ((c, d + 4, 1), (d + 4, c, -1)):
                                s = s1 * s2
                                f[i1, i2, i3, i4] = v if s > 0 else -v
                                j1, j2, j3, j4 = FLIP[i1], FLIP[i2], FLIP[i3], FLIP[i4]
                                f[j1, j2, j3, j4] = w if s > 0 else -w
        f.flags.writeable = False
        self._full8 = f
        return f

    # -- structural checks on the full tensor -----------------------------

    def bianchi_residual(self):
        f = self.full8()
        return f + np.transpose(f, (1, 2, 0, 3)) + np.transpose(f, (2, 0, 1, 3))

    def j_invariance_residual(self, s):
        """K(x, y, J_s z, J_s w) - K(x, y, z, w)."""
        J = jmats(self.bk)[s]
        f = self.full8()
        out = slot_contract(f, 2, J)
        out = slot_contract(out, 3, J)
        return out - f

    def pair_symmetry_residual(self):
        f = self.full8()
        return f - np.transpose(f, (2, 3, 0, 1))


def t_k_apply(K, X):
    """T_K in the symmetric model: X'_{ab} = K_{a sbar b tbar} X^{sbar tbar}."""
    bk = K.bk
    out = np.tensordot(K.Kmix, X, axes=([1, 3], [0, 1]))
    return out


def t_k(K):
    """The 10x10 matrix of T_K in the dollar basis of sp(2)."""
    bk = K.bk
    return sp2.endo_matrix(lambda X: t_k_apply(K, X), bk)


def t_k_matrix_from_quartic(S, bk):
    """Alternative coordinate form: the value matrix of T_K($_{ab}) is S[a,b,:,:]."""
    def fun_pairs():
        M = zeros((10, 10), bk)
        for k, (a, b) in enumerate(sp2.PAIRS):
            M[:, k] = sp2.dollar_coords(S[a, b], bk)
        return M
    return fun_pairs()


def t_k_from_orthonormal_sum(K, X):
    """T_K via the orthonormal-basis definition, for cross-checking.

    g(T_K(A)x, y) = (1/2) sum_a K(x, y, h_a, A h_a), implemented as a
    g-contraction (no literal real basis is chosen).  Returns the lowered
    matrix g(T_K(A) x, y) on V^C.
    """
    bk = K.bk
    A8 = sp2.endo_on_v(X, bk)
    f = K.full8()
    # sum_a sum_c f[x, y, a, c] * A8[c, flip(a)]
    Af = A8[:, FLIP]                    # Af[c, a] = A8[c, flip(a)]
    M = np.tensordot(f, Af, axes=([2, 3], [1, 0]))
    return M * bk.rational(1, 2)


def lowered_endo(X, bk):
    """g(B x, y) for the endomorphism B of V determined by the sp(2) element X."""
    B = sp2.endo_on_v(X, bk)
    return B.T @ g8mat(bk)


def eigen_multiplicity(T, lam, bk):
    """Multiplicity of the eigenvalue lam of a 10x10 matrix, via nullspace rank."""
    n = T.shape[0]
    M = T.copy()
    for k in range(n):
        M[k, k] = M[k, k] - lam
    # Split into real and imaginary parts so rank is taken over the reals.
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(bk.re(M[i, j]))
            row.append(bk.im(M[i, j]))
        rows.append(row)
    return n - linalg.rank(rows, bk)


def dagger_residual(L, bk):
    """Residual of the characterization dagger(L) = 2 L."""
    return sp2.dagger(L, bk) - L * bk.rational(2)


def hk_from_endo(L, bk=EXACT):
    """Reconstruct K with T_K = L from an endomorphism satisfying dagger L = 2L."""
    res = dagger_residual(L, bk)
    if not all_zero(res, bk, scale=frob(L, bk) + 1.0):
        raise ValueError(
            "dagger L != 2L (residual norm %.3e); no HK tensor corresponds to L"
            % frob(res, bk))
    if not sp2.endo_is_real(L, bk):
        raise ValueError("endomorphism does not preserve the real form of sp(2)")
    S = zeros((4, 4, 4, 4), bk)
    for (a, b) in sp2.PAIRS:
        M = sp2.apply_endo(L, sp2.dollar_matrix(a, b, bk), bk)
        S[:, :, a, b] = M
        S[:, :, b, a] = M
    quart = SymQuartic(S, bk)  # validates symmetry and j-reality
    K = kappa(quart)
    return K


# -- tangent space of the orbit ------------------------------------------


def lie_derivative_full8(f, U8, bk):
    """(L_U K)(x,y,z,w) = K(Ux,y,z,w) + K(x,Uy,z,w) + K(x,y,Uz,w) + K(x,y,z,Uw)."""
    out = zeros(f.shape, bk)
    for axis in range(4):
        out = out + slot_contract(f, axis, U8)
    return out


def solve_generator(K, L, bk):
    """Find U in sp(2) with L = (Lie derivative of K along U); error if none."""
    f = K.full8()
    Lf = L.full8()
    basis = sp2.real_basis(bk)
    cols = []
    for X in basis:
        U8 = sp2.endo_on_v(X, bk)
        cols.append(lie_derivative_full8(f, U8, bk).reshape(-1))
    rows = []
    rhs = []
    flatL = Lf.reshape(-1)
    for k in range(flatL.shape[0]):
        if bk.name == "exact" and not any(col[k] for col in cols) and not flatL[k]:
            continue
        rows.append([bk.re(col[k]) for col in cols])
        rhs.append(bk.re(flatL[k]))
        rows.append([bk.im(col[k]) for col in cols])
        rhs.append(bk.im(flatL[k]))
    try:
        coeffs = linalg.solve(rows, rhs, bk)
    except ValueError:
        raise ValueError("L is not tangent to the orbit at K (no generator U exists)")
    U = zeros((4, 4), bk)
    for c, X in zip(coeffs, basis):
        U = U + X * c
    return U


def tangent_H(K, L, U=None, check_orbit=True):
    """The sp(2)-valued operator H attached to a tangent vector L at K.

    H = (1/5)((7/2) U - T_K(U)) where U generates L; the caller may supply U
    (as a symmetric-model matrix), otherwise it is solved for.
    """
    bk = K.bk
    if check_orbit:
        from .orbit import is_cd_theorem
        if not is_cd_theorem(K).verdict:
            raise ValueError("K is not a cubic discriminant; tangent_H undefined")
    if U is None:
        U = solve_generator(K, L, bk)
    TU = t_k_apply(K, U)
    H = (U * bk.rational(7, 2) - TU) * bk.rational(1, 5)
    return H


def tangent_H_from_contraction(K, L, bk):
    """g(Hx, y) via the 1/120 double-contraction formula, as an 8x8 matrix."""
    f = K.full8()
    Lf = L.full8()
    fl = FLIP
    Kf = f[np.ix_(range(8), fl, fl, fl)]
    M = np.tensordot(Lf, Kf, axes=([1, 2, 3], [1, 2, 3]))
    return (M - M.T) * bk.rational(1, 120)


# -- double contraction identities ---------------------------------------


def _lowered_j(s, bk):
    """omega_s(x, y) = g(J_s x, y) as an 8x8 matrix."""
    J = jmats(bk)[s]
    return J.T @ g8mat(bk)


def contr_kxk_1_residual(K):
    """sum_{ab} K(x,y,h_a,h_b) K(z,w,h_a,h_b)
       - 4K(x,y,z,w) - (21/8)(g terms) - (21/8)(J_s terms)."""
    bk = K.bk
    f = K.full8()
    g = g8mat(bk)
    ff = f[:, :, FLIP][:, :, :, FLIP]
    lhs = np.tensordot(f, ff, axes=([2, 3], [2, 3]))  # [x,y,z,w]
    rhs = f * bk.rational(4)
    gterm = np.tensordot(g, g, axes=0)  # g[x,z] g[y,w] -> axes (x,z,y,w)
    rhs = rhs + np.transpose(gterm, (0, 2, 1, 3)) * bk.rational(21, 8)
    rhs = rhs - np.transpose(gterm, (0, 2, 3, 1)) * bk.rational(21, 8)
    for s in range(3):
        G = _lowered_j(s, bk)
        t = np.tensordot(G, G, axes=0)  # G[x,z] G[y,w]
        rhs = rhs + np.transpose(t, (0, 2, 1, 3)) * bk.rational(21, 8)
        rhs = rhs - np.transpose(t, (0, 2, 3, 1)) * bk.rational(21, 8)
    return lhs - rhs


def contr_kxk_2_residual(K):
    """sum_{ab} K(x,h_a,h_b,y) K(z,h_a,h_b,w)
       - 2K(x,z,y,w) - (21/8) g(x,z)g(y,w) - (21/16) g(x,w)g(y,z)
       + (21/16) sum_s g(I_s x, w) g(I_s y, z)."""
    bk = K.bk
    f = K.full8()
    g = g8mat(bk)
    ff = f[:, FLIP][:, :, FLIP]
    lhs = np.tensordot(f, ff, axes=([1, 2], [1, 2]))  # [x,y,z,w]
    fK = np.transpose(f, (0, 2, 1, 3))  # K(x,z,y,w) at [x,y,z,w]
    rhs = fK * bk.rational(2)
    gterm = np.tensordot(g, g, axes=0)
    rhs = rhs + np.transpose(gterm, (0, 2, 1, 3)) * bk.rational(21, 8)
    rhs = rhs + np.transpose(gterm, (0, 2, 3, 1)) * bk.rational(21, 16)
    for s in range(3):
        G = _lowered_j(s, bk)
        t = np.tensordot(G, G, axes=0)  # G[x,w] G[y,z]
        rhs = rhs - np.transpose(t, (0, 2, 3, 1)) * bk.rational(21, 16)
    return lhs - rhs
