"""The Lie algebra sp(2) in its two models, bracket, inner product, and dagger.

Elements are stored in the symmetric model: a 4x4 symmetric matrix X with
(jX) = X (the reality condition).  The endomorphism model is A = P X acting
on W, where P is the matrix of pi.  The canonical ordered basis is the ten
elementary symmetric matrices (alpha <= beta), called the sharp basis; its
dual with respect to the invariant inner product is built from the dollar
matrices, which are the pi-lowered sharps.
"""

from functools import lru_cache

import numpy as np

from .scalars import EXACT
from .tensors import zeros, conj_arr, pmat, eye, frob, all_zero
from . import linalg

PAIRS = [(a, b) for a in range(4) for b in range(a, 4)]  # 10 index pairs


def jmap2(X, bk):
    """The j-map on a rank-2 lower-index symmetric matrix: P^T conj(X) P."""
    P = pmat(bk)
    return P.T @ conj_arr(X, bk) @ P


def is_sp2_element(X, bk, scale=None):
    if scale is None:
        scale = frob(X, bk)
    sym_ok = all_zero(X - X.T, bk, scale=scale)
    real_ok = all_zero(X - jmap2(X, bk), bk, scale=scale)
    return sym_ok, real_ok


def check_sp2(X, bk):
    sym_ok, real_ok = is_sp2_element(X, bk)
    if not sym_ok:
        raise ValueError("sp(2) element must be symmetric: X != X^T")
    if not real_ok:
        raise ValueError("sp(2) element must satisfy the reality condition jX = X")


def to_endo(X, bk):
    """The endomorphism A of W with A^alpha_beta = pi^{alpha sigma} X_{sigma beta}."""
    return pmat(bk) @ X


def from_endo(A, bk):
    """Inverse of to_endo; also validates the endomorphism-model invariants."""
    X = -(pmat(bk) @ A)
    return X


def check_endo_model(A, bk):
    """A must be conj-anti-Hermitian: A^T = -conj(A)."""
    if not all_zero(A.T + conj_arr(A, bk), bk, scale=frob(A, bk)):
        raise ValueError("endomorphism model violates A_{alpha betabar} = -A_{betabar alpha}")


def model_convert(value, bk=EXACT, direction="sym_to_endo"):
    if direction == "sym_to_endo":
        check_sp2(value, bk)
        return to_endo(value, bk)
    if direction == "endo_to_sym":
        check_endo_model(value, bk)
        X = from_endo(value, bk)
        check_sp2(X, bk)
        return X
    raise ValueError("unknown direction %r" % (direction,))


def bracket(X, Y, bk=EXACT):
    """[X, Y]_{alpha beta} = pi^{sigma tau}(X_{alpha sigma}Y_{tau beta} + X_{beta sigma}Y_{tau alpha})."""
    M = X @ pmat(bk) @ Y
    return M + M.T


def inner(X, Y, bk=EXACT):
    """<X, Y> = pi^{alpha gamma} pi^{beta delta} X_{alpha beta} Y_{gamma delta}."""
    P = pmat(bk)
    return ((P.T @ X @ P) * Y).sum()


def endo_on_v(X, bk=EXACT):
    """The 8x8 matrix of an sp(2) element acting on V^C = W (+) Wbar."""
    A = to_endo(X, bk)
    Ab = conj_arr(A, bk)
    M = zeros((8, 8), bk)
    M[:4, :4] = A
    M[4:, 4:] = Ab
    return M


@lru_cache(maxsize=None)
def sharp_basis(bk=EXACT):
    """The ten elementary symmetric matrices, ordered by PAIRS."""
    out = []
    for (a, b) in PAIRS:
        M = zeros((4, 4), bk)
        if a == b:
            M[a, a] = bk.one
        else:
            h = bk.rational(1, 2)
            M[a, b] = h
            M[b, a] = h
        M.flags.writeable = False
        out.append(M)
    return tuple(out)


def dollar_matrix(a, b, bk=EXACT):
    """$_{ab}: the pi-lowered sharp, ($_{ab})_{mu nu} = (P[a,mu]P[b,nu] + P[a,nu]P[b,mu])/2."""
    P = pmat(bk)
    M = np.tensordot(P[a], P[b], axes=0)
    M = (M + M.T) * bk.rational(1, 2)
    return M


@lru_cache(maxsize=None)
def dollar_basis(bk=EXACT):
    out = []
    for (a, b) in PAIRS:
        M = dollar_matrix(a, b, bk)
        M.flags.writeable = False
        out.append(M)
    return tuple(out)


@lru_cache(maxsize=None)
def sharp_dual_basis(bk=EXACT):
    """Duals of the sharp basis w.r.t. the inner product: $_{aa}, or 2 $_{ab} off the diagonal."""
    out = []
    for (a, b) in PAIRS:
        M = dollar_matrix(a, b, bk)
        if a != b:
            M = M * bk.rational(2)
        M.flags.writeable = False
        out.append(M)
    return tuple(out)


def dual_basis(bk=EXACT):
    return sharp_basis(bk), sharp_dual_basis(bk)


def dollar_coords(X, bk=EXACT):
    """Coordinates of X in the dollar basis (length 10)."""
    P = pmat(bk)
    c = P.T @ X @ P
    v = []
    for (a, b) in PAIRS:
        v.append(c[a, b] if a == b else c[a, b] * bk.rational(2))
    return np.array(v, dtype=object)


def from_dollar_coords(v, bk=EXACT):
    D = dollar_basis(bk)
    X = zeros((4, 4), bk)
    for k in range(10):
        X = X + D[k] * v[k]
    return X


def endo_matrix(fun, bk=EXACT):
    """The 10x10 matrix, in the dollar basis, of a linear map on sp(2)(x)C."""
    M = zeros((10, 10), bk)
    for k, D in enumerate(dollar_basis(bk)):
        M[:, k] = dollar_coords(fun(D), bk)
    return M


def apply_endo(M, X, bk=EXACT):
    return from_dollar_coords(M @ dollar_coords(X, bk), bk)


def dagger(L, bk=EXACT):
    """(dagger L) X = sum_s [E*_s, L([E_s, X])] over the sharp/dual pairs.

    L may be a 10x10 matrix in the dollar basis or a callable; the result is
    a 10x10 matrix in the dollar basis.
    """
    if callable(L):
        lfun = L
    else:
        lfun = lambda X: apply_endo(L, X, bk)
    E, Estar = dual_basis(bk)

    def dag(X):
        total = zeros((4, 4), bk)
        for Es, Eds in zip(E, Estar):
            total = total + bracket(Eds, lfun(bracket(Es, X, bk)), bk)
        return total

    return endo_matrix(dag, bk)


@lru_cache(maxsize=None)
def real_basis(bk=EXACT):
    """Ten j-real symmetric matrices spanning the real form of sp(2)."""
    cands = []
    i = bk.i
    for B in sharp_basis(bk):
        jB = jmap2(B, bk)
        cands.append(B + jB)
        cands.append((B - jB) * i)
    # Select an independent subset by rank over the reals.
    chosen = []
    rows = []
    for C in cands:
        row = []
        for x in C.flat:
            row.append(bk.re(x))
            row.append(bk.im(x))
        if linalg.rank(rows + [row], bk) > len(chosen):
            chosen.append(C)
            rows.append(row)
        if len(chosen) == 10:
            break
    if len(chosen) != 10:
        raise RuntimeError("failed to build a 10-dimensional real form basis")
    return tuple(chosen)


def endo_is_real(M, bk=EXACT):
    """Check that a 10x10 endomorphism maps the real form into itself."""
    for B in real_basis(bk):
        Y = apply_endo(M, B, bk)
        if not all_zero(Y - jmap2(Y, bk), bk, scale=frob(Y, bk) + 1.0):
            return False
    return True
