"""The linear constraint system forcing the one-parameter coframe family.

Closure of the coframe differentials is equivalent to four families of
equations (split by barred-index type) in the unknown curvature coefficient
matrices: C^s, F^s antisymmetric and D^s, G^s anti-Hermitian, s = 1..3.
The system splits into two independent stages; the first admits only the
zero solution, the second a single line, parameterized by h, with

    F2 = h P,  F3 = -i h P,  D^s = -(2h/3) Upsilon_s P,  G1 = i h Id.
"""

import itertools

import numpy as np

from .scalars import EXACT
from .tensors import zeros, conj_arr, pmat, eye, frob, all_zero
from .irrep import upsilons
from .linalg import SparseEliminator


def _threeterm(U, M):
    """T[a,b,c,d] = U[a,b]M[c,d] + U[a,c]M[d,b] + U[a,d]M[b,c]."""
    t = np.tensordot(U, M, axes=0)
    return t + np.transpose(t, (0, 2, 3, 1)) + np.transpose(t, (0, 3, 1, 2))


def cf_type_1(C, F1, bk):
    """Residual of the all-unbarred equation family."""
    P = pmat(bk)
    out = zeros((4, 4, 4, 4), bk)
    for s in range(3):
        out = out + _threeterm(upsilons(bk)[s], C[s])
    return out - _threeterm(P, F1) * (bk.i * bk.rational(1, 2))


def cf_type_3(C, F1, G2, G3, bk):
    """Residual of the two-bars equation family."""
    P = pmat(bk)
    I = eye(4, bk)
    half = bk.rational(1, 2)
    out = zeros((4, 4, 4, 4), bk)
    for s in range(3):
        out = out + np.tensordot(upsilons(bk)[s], conj_arr(C[s], bk), axes=0)
    out = out - np.tensordot(P, conj_arr(F1, bk), axes=0) * (bk.i * half)
    G23 = G2 + G3 * bk.i
    t = np.tensordot(I, G23, axes=0)
    out = out - np.transpose(t, (0, 2, 3, 1)) * half   # delta[a,d] G23[b,c]
    out = out + np.transpose(t, (0, 2, 1, 3)) * half   # delta[a,c] G23[b,d]
    return out


def cf_type_2(D, F2, F3, G1, bk):
    """Residual of the one-bar equation family."""
    P = pmat(bk)
    I = eye(4, bk)
    half = bk.rational(1, 2)
    out = zeros((4, 4, 4, 4), bk)
    for s in range(3):
        t = np.tensordot(upsilons(bk)[s], D[s], axes=0)
        out = out + t - np.transpose(t, (0, 2, 1, 3))
    F23 = F2 + F3 * bk.i
    tf = np.tensordot(I, F23, axes=0)
    out = out - np.transpose(tf, (0, 2, 3, 1)) * half
    tg = np.tensordot(P, G1, axes=0)
    out = out - (tg - np.transpose(tg, (0, 2, 1, 3))) * (bk.i * half)
    return out


def cf_type_4(F2, F3, bk):
    """Residual of the three-bars equation family."""
    I = eye(4, bk)
    F23c = conj_arr(F2, bk) + conj_arr(F3, bk) * bk.i
    return _threeterm(I, F23c)


# -- unknown parameterization ----------------------------------------------


def antisym_basis(bk):
    """Real basis (12 matrices) of complex antisymmetric 4x4 matrices."""
    out = []
    for a in range(4):
        for b in range(a + 1, 4):
            M = zeros((4, 4), bk)
            M[a, b] = bk.one
            M[b, a] = -bk.one
            out.append(M)
            N = zeros((4, 4), bk)
            N[a, b] = bk.i
            N[b, a] = -bk.i
            out.append(N)
    return out


def antiherm_basis(bk):
    """Real basis (16 matrices) of anti-Hermitian 4x4 matrices."""
    out = []
    for a in range(4):
        M = zeros((4, 4), bk)
        M[a, a] = bk.i
        out.append(M)
    for a in range(4):
        for b in range(a + 1, 4):
            M = zeros((4, 4), bk)
            M[a, b] = bk.one
            M[b, a] = -bk.one
            out.append(M)
            N = zeros((4, 4), bk)
            N[a, b] = bk.i
            N[b, a] = bk.i
            out.append(N)
    return out


def _zero4(bk):
    return zeros((4, 4), bk)


def _nullspace_of_columns(column_tensors, bk):
    """Real nullspace of the linear system whose k-th column is the list of
    residual tensors produced by unit value of unknown k."""
    nunk = len(column_tensors)
    elim = SparseEliminator(nunk, bk)
    ntens = len(column_tensors[0])
    for t in range(ntens):
        flats = [np.asarray(column_tensors[k][t], dtype=object).reshape(-1)
                 for k in range(nunk)]
        for m in range(flats[0].shape[0]):
            row_re = {}
            row_im = {}
            for k in range(nunk):
                v = flats[k][m]
                if bk.name == "exact" and not v:
                    continue
                re, im = bk.re(v), bk.im(v)
                if not (bk.name == "exact" and not re):
                    row_re[k] = re
                if not (bk.name == "exact" and not im):
                    row_im[k] = im
            if row_re:
                elim.add_row(row_re)
            if row_im:
                elim.add_row(row_im)
    return elim.nullspace()


def stage_one_nullspace(bk=EXACT):
    """Solutions of the {all-unbarred, two-bars} equations; expected empty."""
    asym = antisym_basis(bk)
    aherm = antiherm_basis(bk)
    Z = _zero4(bk)
    cols = []
    for s in range(3):
        for M in asym:
            C = [Z, Z, Z]
            C[s] = M
            cols.append([cf_type_1(C, Z, bk), cf_type_3(C, Z, Z, Z, bk)])
    for M in asym:     # F1
        cols.append([cf_type_1([Z, Z, Z], M, bk),
                     cf_type_3([Z, Z, Z], M, Z, Z, bk)])
    for M in aherm:    # G2
        cols.append([zeros((4, 4, 4, 4), bk),
                     cf_type_3([Z, Z, Z], Z, M, Z, bk)])
    for M in aherm:    # G3
        cols.append([zeros((4, 4, 4, 4), bk),
                     cf_type_3([Z, Z, Z], Z, Z, M, bk)])
    return _nullspace_of_columns(cols, bk)


def stage_two_nullspace(bk=EXACT):
    """Solutions of the {one-bar, three-bars} equations; expected 1-dimensional."""
    asym = antisym_basis(bk)
    aherm = antiherm_basis(bk)
    Z = _zero4(bk)
    Z4 = zeros((4, 4, 4, 4), bk)
    cols = []
    for s in range(3):
        for M in aherm:
            D = [Z, Z, Z]
            D[s] = M
            cols.append([cf_type_2(D, Z, Z, Z, bk), Z4])
    for M in asym:     # F2
        cols.append([cf_type_2([Z, Z, Z], M, Z, Z, bk), cf_type_4(M, Z, bk)])
    for M in asym:     # F3
        cols.append([cf_type_2([Z, Z, Z], Z, M, Z, bk), cf_type_4(Z, M, bk)])
    for M in aherm:    # G1
        cols.append([cf_type_2([Z, Z, Z], Z, Z, M, bk), Z4])
    return cols, _nullspace_of_columns(cols, bk)


class FirstBianchiSolution:
    """The solved constraint system, normalized so that F2[1,3] = 1 (h = 1)."""

    def __init__(self, bk=EXACT):
        self.bk = bk
        self.stage_one = stage_one_nullspace(bk)
        cols, null = stage_two_nullspace(bk)
        self.stage_two = null
        self.D = self.F2 = self.F3 = self.G1 = None
        if len(null) == 1:
            self._extract(null[0])

    def _extract(self, vec):
        bk = self.bk
        asym = antisym_basis(bk)
        aherm = antiherm_basis(bk)
        pos = 0
        D = []
        for s in range(3):
            M = _zero4(bk)
            for B in aherm:
                M = M + B * vec[pos]
                pos += 1
            D.append(M)
        F2 = _zero4(bk)
        for B in asym:
            F2 = F2 + B * vec[pos]
            pos += 1
        F3 = _zero4(bk)
        for B in asym:
            F3 = F3 + B * vec[pos]
            pos += 1
        G1 = _zero4(bk)
        for B in aherm:
            G1 = G1 + B * vec[pos]
            pos += 1
        scale = F2[0, 2]
        if bk.name == "exact" and not scale:
            raise ValueError("cannot normalize: F2[1,3] vanishes on the solution line")
        inv = bk.one / scale
        self.D = [M * inv for M in D]
        self.F2 = F2 * inv
        self.F3 = F3 * inv
        self.G1 = G1 * inv

    def structure_residuals(self):
        """Distance of the normalized solution from the closed form
        F2 = P, F3 = -iP, D^s = -(2/3) Upsilon_s P, G1 = i Id."""
        bk = self.bk
        P = pmat(bk)
        out = {}
        out["F2"] = frob(self.F2 - P, bk)
        out["F3"] = frob(self.F3 + P * bk.i, bk)
        out["G1"] = frob(self.G1 - eye(4, bk) * bk.i, bk)
        for s in range(3):
            expect = (upsilons(bk)[s] @ P) * bk.rational(-2, 3)
            out["D%d" % (s + 1)] = frob(self.D[s] - expect, bk)
        return out

    def matches_structure(self):
        bk = self.bk
        res = self.structure_residuals()
        if bk.name == "exact":
            return all(v == 0.0 for v in res.values())
        return all(v <= bk.tol * 10.0 for v in res.values())
