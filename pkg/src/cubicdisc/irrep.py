"""The irreducible sp(1) action on W = S^3(Delta) and everything built on it:
the representation matrices E_s, the symmetric Upsilon matrices, the quartic
S_hat, the classical cubic discriminant, the projection onto the sp(1)
span inside sp(2), the frame endomorphisms, and Casimir-based decomposition
of so(4) modules.
"""

import itertools
from functools import lru_cache

import numpy as np

from .scalars import EXACT
from .tensors import zeros, conj_arr, pmat, eye, g8mat, jmats, frob, all_zero, sym4
from . import sp2
from . import linalg
from .hk import SymQuartic


@lru_cache(maxsize=None)
def rep_delta(bk=EXACT):
    """The standard sp(1) generators on Delta = C^2: [E1,E2] = E3 and cyclic."""
    h = bk.rational(1, 2)
    i = bk.i
    E1 = np.array([[-i * h, bk.zero], [bk.zero, i * h]], dtype=object)
    E2 = np.array([[bk.zero, -h], [h, bk.zero]], dtype=object)
    E3 = np.array([[bk.zero, i * h], [i * h, bk.zero]], dtype=object)
    return (E1, E2, E3)


def sym_cube_rep(M, bk=EXACT):
    """Induced Lie-algebra action of a 2x2 matrix on S^3(Delta).

    Computed functorially: the derivation action on cubic monomials in
    (d1, d2), converted to the orthonormal basis
    e1 = d1^3, e2 = sym(d1 d1 d2)/sqrt3, e3 = d2^3, e4 = -sym(d1 d2 d2)/sqrt3.
    """
    # Derivation on monomials m_k = d1^(3-k) d2^k:
    # X m_k = (3-k)(M00 m_k + M10 m_{k+1}) + k(M01 m_{k-1} + M11 m_k)
    A = zeros((4, 4), bk)
    for k in range(4):
        A[k, k] = A[k, k] + M[0, 0] * bk.rational(3 - k) + M[1, 1] * bk.rational(k)
        if k + 1 <= 3:
            A[k + 1, k] = A[k + 1, k] + M[1, 0] * bk.rational(3 - k)
        if k - 1 >= 0:
            A[k - 1, k] = A[k - 1, k] + M[0, 1] * bk.rational(k)
    # Basis change: columns of B are the hat-basis vectors in monomial coords.
    r3 = bk.sqrt3
    B = zeros((4, 4), bk)
    B[0, 0] = bk.one          # e1 = m0
    B[1, 1] = r3              # e2 = sym(d1 d1 d2)/sqrt3 = 3 m1 / sqrt3
    B[3, 2] = bk.one          # e3 = m3
    B[2, 3] = -r3             # e4 = -sym(d1 d2 d2)/sqrt3 = -3 m2 / sqrt3
    Binv = linalg.inverse(B, bk)
    return Binv @ A @ B


@lru_cache(maxsize=None)
def rep_w(bk=EXACT):
    """The three 4x4 generators E_s of the irreducible action on W."""
    return tuple(sym_cube_rep(M, bk) for M in rep_delta(bk))


def upsilon_matrices(bk=EXACT, E=None):
    """The symmetric matrices Upsilon_s with pi^{alpha sigma}(Upsilon_s)_{sigma beta} = (E_s)^alpha_beta."""
    if E is None:
        E = rep_w(bk)
    P = pmat(bk)
    Q = -P  # P Q = Id
    return tuple(Q @ Es for Es in E)


@lru_cache(maxsize=None)
def upsilons(bk=EXACT):
    return upsilon_matrices(bk)


@lru_cache(maxsize=None)
def s_hat(bk=EXACT):
    """The invariant quartic: S_{abcd} = sum_s U_s[a,b] U_s[c,d] - (3/4)(P[a,c]P[b,d] + P[a,d]P[b,c])."""
    P = pmat(bk)
    S = zeros((4, 4, 4, 4), bk)
    for U in upsilons(bk):
        S = S + np.tensordot(U, U, axes=0)
    q34 = bk.rational(3, 4)
    PP = np.tensordot(P, P, axes=0)  # P[a,c] P[b,d] at [a,c,b,d]
    S = S - np.transpose(PP, (0, 2, 1, 3)) * q34
    S = S - np.transpose(PP, (0, 2, 3, 1)) * q34
    return SymQuartic(S, bk)


def quartic_form(S, x, bk):
    """S(x, x, x, x) for a coordinate vector x of length 4."""
    v = np.tensordot(S, x, axes=([3], [0]))
    v = np.tensordot(v, x, axes=([2], [0]))
    v = np.tensordot(v, x, axes=([1], [0]))
    v = np.tensordot(v, x, axes=([0], [0]))
    return v[()] if isinstance(v, np.ndarray) else v


def classical_discriminant(a, b, c, d, bk=EXACT):
    """Dis(a,b,c,d) = 18abcd - 27 a^2 d^2 - 4 a c^3 - 4 b^3 d + b^2 c^2."""
    n = bk.rational
    return (n(18) * a * b * c * d - n(27) * a * a * d * d
            - n(4) * a * c * c * c - n(4) * b * b * b * d + b * b * c * c)


def substitution_check(bk=EXACT):
    """3 * S_hat-form equals the classical discriminant under
    x1 = a, x2 = b/sqrt3, x3 = d, x4 = -c/sqrt3, as a polynomial identity."""
    S = s_hat(bk).S
    third = bk.rational(1, 3)
    scale_of = {
        0: ("a", bk.one),
        1: ("b", bk.sqrt3 * third),      # 1/sqrt3
        2: ("d", bk.one),
        3: ("c", -(bk.sqrt3 * third)),
    }
    lhs = {}
    for idx in itertools.product(range(4), repeat=4):
        v = S[idx]
        if bk.name == "exact" and not v:
            continue
        coef = v * bk.rational(3)
        key = [0, 0, 0, 0]  # exponents of a, b, c, d
        for i in idx:
            var, sc = scale_of[i]
            coef = coef * sc
            key["abcd".index(var)] += 1
        key = tuple(key)
        lhs[key] = lhs.get(key, bk.zero) + coef
    rhs = {
        (1, 1, 1, 1): bk.rational(18),
        (2, 0, 0, 2): bk.rational(-27),
        (1, 0, 3, 0): bk.rational(-4),
        (0, 3, 0, 1): bk.rational(-4),
        (0, 2, 2, 0): bk.one,
    }
    keys = set(lhs) | set(rhs)
    diffs = [lhs.get(k, bk.zero) - rhs.get(k, bk.zero) for k in sorted(keys)]
    return all_zero(np.array(diffs, dtype=object), bk, scale=27.0)


def upsilon_lemma_residuals(bk=EXACT):
    """Residual norms of the seven structural identities of the Upsilon triple.

    1. each Upsilon_s is symmetric and j-real;
    2. <Upsilon_s, Upsilon_t> = 5 delta_st;
    3. the bracket closes: [Upsilon_i, Upsilon_j] = Upsilon_k (cyclic);
    4. the quartic is invariant under each Upsilon_s;
    5. sum_s Upsilon_s (x) Upsilon_s = S_hat + (3/4)(pi pi + pi pi);
    6. contracting S_hat twice with pi against Upsilon_s gives (7/2) Upsilon_s;
    7. sum_s Upsilon_s pi Upsilon_s = (15/4) pi.
    """
    from .orbit import quartic_action
    P = pmat(bk)
    U = upsilons(bk)
    S = s_hat(bk).S
    out = {}

    r = 0.0
    for Us in U:
        r = max(r, frob(Us - Us.T, bk), frob(Us - sp2.jmap2(Us, bk), bk))
    out["symmetric_and_real"] = r

    r = 0.0
    for s in range(3):
        for t in range(3):
            v = sp2.inner(U[s], U[t], bk)
            if s == t:
                v = v - bk.rational(5)
            r = max(r, abs(bk.to_complex(v)))
    out["pairing"] = r

    r = 0.0
    for (i, j, k) in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        r = max(r, frob(sp2.bracket(U[i], U[j], bk) - U[k], bk))
    out["bracket"] = r

    r = 0.0
    for Us in U:
        r = max(r, frob(quartic_action(S, Us, bk), bk))
    out["invariance"] = r

    total = zeros((4, 4, 4, 4), bk)
    for Us in U:
        total = total + np.tensordot(Us, Us, axes=0)
    PP = np.tensordot(P, P, axes=0)
    q34 = bk.rational(3, 4)
    expect = S + np.transpose(PP, (0, 2, 1, 3)) * q34 \
               + np.transpose(PP, (0, 2, 3, 1)) * q34
    out["sum_of_squares"] = frob(total - expect, bk)

    r = 0.0
    for Us in U:
        M = np.tensordot(S, P.T @ Us @ P, axes=([2, 3], [0, 1]))
        r = max(r, frob(M - Us * bk.rational(7, 2), bk))
    out["eigen_contraction"] = r

    M = zeros((4, 4), bk)
    for Us in U:
        M = M + Us @ P @ Us
    out["pi_recovery"] = frob(M - P * bk.rational(15, 4), bk)
    return out


# -- projections inside sp(2) --------------------------------------------


def orth_projection(span, bk):
    """10x10 matrix (dollar basis) of the orthogonal projection onto a span
    of sp(2) elements, with respect to the invariant inner product."""
    n = len(span)
    G = zeros((n, n), bk)
    for i in range(n):
        for j in range(n):
            G[i, j] = sp2.inner(span[i], span[j], bk)
    Ginv = linalg.inverse(G, bk)

    def proj(X):
        v = np.array([sp2.inner(B, X, bk) for B in span], dtype=object)
        w = Ginv @ v
        out = zeros((4, 4), bk)
        for k in range(n):
            out = out + span[k] * w[k]
        return out

    return sp2.endo_matrix(proj, bk)


def proj_sp1ir(bk=EXACT):
    """P_hat = (1/5) sum_s Upsilon_s <Upsilon_s, .>, the projection onto the
    irreducible sp(1) inside sp(2)."""
    return orth_projection(list(upsilons(bk)), bk)


def reducible_rep(bk=EXACT):
    """The printed reducible (non-trivial on both factors) sp(1) action on W."""
    h = bk.rational(1, 2)
    i = bk.i
    z = bk.zero
    R1 = np.array([[z, z, h, z], [z, z, z, h], [-h, z, z, z], [z, -h, z, z]],
                  dtype=object)
    R2 = np.array([[z, z, i * h, z], [z, z, z, i * h], [i * h, z, z, z],
                   [z, i * h, z, z]], dtype=object)
    R3 = np.array([[i * h, z, z, z], [z, i * h, z, z], [z, z, -i * h, z],
                   [z, z, z, -i * h]], dtype=object)
    return (R1, R2, R3)


def trivial_factor_rep(bk=EXACT):
    """sp(1) acting by the standard representation on span(e1, e3), trivially
    on span(e2, e4)."""
    out = []
    for M in rep_delta(bk):
        R = zeros((4, 4), bk)
        for a, ia in enumerate((0, 2)):
            for b, ib in enumerate((0, 2)):
                R[ia, ib] = M[a, b]
        out.append(R)
    return tuple(out)


def projection_from_rep(rep, bk):
    """Orthogonal projection of sp(2) onto the span of a 3-generator subalgebra
    given by endomorphisms of W."""
    span = [sp2.from_endo(R, bk) for R in rep]
    return orth_projection(span, bk)


# -- frame endomorphisms --------------------------------------------------


@lru_cache(maxsize=None)
def script_e_frames(bk=EXACT):
    """The three 8x8 endomorphisms: E_s on W, its conjugate on Wbar."""
    out = []
    for Es in rep_w(bk):
        M = zeros((8, 8), bk)
        M[:4, :4] = Es
        M[4:, 4:] = conj_arr(Es, bk)
        M.flags.writeable = False
        out.append(M)
    return tuple(out)


def endo_inner(A, B, bk):
    """<A, B> = (1/2) A^a_b B^c_d g_{ac} g^{bd} on endomorphisms of V."""
    g = g8mat(bk)
    return ((A * (g @ B @ g)).sum()) * bk.rational(1, 2)


def lowered_2form(A, bk):
    """eps(x, y) = g(A x, y) as an 8x8 matrix."""
    return A.T @ g8mat(bk)


def wedge2(a, b, bk):
    """Wedge of two 2-forms as a rank-4 alternating array."""
    t = np.tensordot(a, b, axes=0)  # t[i,j,k,l] = a[i,j] b[k,l]

    def pick(p):
        return np.transpose(t, p)

    w = (pick((0, 1, 2, 3)) - pick((0, 2, 1, 3)) + pick((0, 2, 3, 1))
         + pick((2, 3, 0, 1)) - pick((2, 0, 3, 1)) + pick((2, 0, 1, 3)))
    return w


def omega_forms(bk=EXACT):
    return tuple(lowered_2form(J, bk) for J in jmats(bk))


def eps_wedge_residual(frames, omegas, bk):
    """sum_s eps_s ^ eps_s + (3/4) * Omega, with Omega = sum_s omega_s ^ omega_s."""
    total = zeros((8, 8, 8, 8), bk)
    for E in frames:
        e = lowered_2form(E, bk)
        total = total + wedge2(e, e, bk)
    Om = zeros((8, 8, 8, 8), bk)
    for om in omegas:
        Om = Om + wedge2(om, om, bk)
    return total + Om * bk.rational(3, 4)


# -- Casimir decomposition ------------------------------------------------


def _kron(A, B, bk):
    n1, m1 = A.shape
    n2, m2 = B.shape
    out = zeros((n1 * n2, m1 * m2), bk)
    for i in range(n1):
        for j in range(m1):
            a = A[i, j]
            if bk.name == "exact" and not a:
                continue
            out[i * n2:(i + 1) * n2, j * m2:(j + 1) * m2] = B * a
    return out


def _bracket_closure_check(gens, bk, scale):
    res = []
    res.append(gens[0] @ gens[1] - gens[1] @ gens[0] - gens[2])
    res.append(gens[1] @ gens[2] - gens[2] @ gens[1] - gens[0])
    res.append(gens[2] @ gens[0] - gens[0] @ gens[2] - gens[1])
    return all(all_zero(r, bk, scale=scale) for r in res)


class So4Module:
    """Carrier with commuting sp(1) x sp(1) actions given by two generator triples."""

    def __init__(self, e_gens, h_gens, bk=EXACT):
        self.e_gens = tuple(e_gens)
        self.h_gens = tuple(h_gens)
        self.bk = bk
        self.dim = e_gens[0].shape[0]

    def check_closure(self):
        bk = self.bk
        scale = max(frob(self.e_gens[0], bk), 1.0)
        if not _bracket_closure_check(self.e_gens, bk, scale):
            raise ValueError("first factor generators do not close as sp(1)")
        hscale = max(frob(self.h_gens[0], bk), 1.0)
        if any(frob(H, bk) > 0 for H in self.h_gens):
            if not _bracket_closure_check(self.h_gens, bk, hscale):
                raise ValueError("second factor generators do not close as sp(1)")
        for E in self.e_gens:
            for H in self.h_gens:
                if not all_zero(E @ H - H @ E, bk, scale=scale + hscale):
                    raise ValueError("the two sp(1) factors do not commute")

    def casimirs(self):
        bk = self.bk
        CE = zeros((self.dim, self.dim), bk)
        for E in self.e_gens:
            CE = CE + E @ E
        CH = zeros((self.dim, self.dim), bk)
        for H in self.h_gens:
            CH = CH + H @ H
        return CE, CH


def casimir_eigenvalue(k, bk):
    """Casimir value on S^k of the defining sp(1) normalization: -k(k+2)/4.

    Calibrated on the known carrier V = S^3 E (x) H, where
    sum_s script_E_s^2 = -(15/4) Id and sum_s (J_s/2)^2 = -(3/4) Id.
    """
    return bk.rational(-k * (k + 2), 4)


def casimir_decompose(module, kmax=12, lmax=3):
    """Multiplicity table {(k, l): multiplicity} of S^k E (x) S^l H summands."""
    module.check_closure()
    bk = module.bk
    CE, CH = module.casimirs()
    n = module.dim
    table = {}
    covered = 0
    for k in range(kmax + 1):
        for l in range(lmax + 1):
            ce = casimir_eigenvalue(k, bk)
            ch = casimir_eigenvalue(l, bk)
            M = [[CE[i, j] - (ce if i == j else bk.zero) for j in range(n)]
                 for i in range(n)]
            M += [[CH[i, j] - (ch if i == j else bk.zero) for j in range(n)]
                  for i in range(n)]
            d = n - linalg.rank(M, bk)
            if d:
                mult, rem = divmod(d, (k + 1) * (l + 1))
                if rem:
                    raise ValueError("eigenspace dimension %d is not a multiple "
                                     "of (k+1)(l+1) for (k,l)=(%d,%d)" % (d, k, l))
                table[(k, l)] = mult
                covered += d
    if covered != n:
        raise ValueError("Casimir decomposition covers %d of %d dimensions"
                         % (covered, n))
    return table


def module_v(bk=EXACT):
    """V^C with the irreducible so(4) action: S^3 E (x) H."""
    E = script_e_frames(bk)
    J = jmats(bk)
    H = tuple(Js * bk.rational(1, 2) for Js in J)
    return So4Module(E, H, bk)


def ad_upsilon_matrices(bk=EXACT):
    """ad(Upsilon_s) acting on sp(2) in the dollar basis (10x10)."""
    out = []
    for U in upsilons(bk):
        out.append(sp2.endo_matrix(lambda X, U=U: sp2.bracket(U, X, bk), bk))
    return tuple(out)


def module_sp2(bk=EXACT):
    """sp(2) as a module over sp(1)_ir (x) trivial."""
    E = ad_upsilon_matrices(bk)
    Z = zeros((10, 10), bk)
    return So4Module(E, (Z.copy(), Z.copy(), Z.copy()), bk)


def upsilon_perp_basis(bk=EXACT):
    """Basis (dollar coordinates) of the orthogonal complement of the
    Upsilon span inside sp(2) (x) C; 7-dimensional."""
    rows = []
    D = sp2.dollar_basis(bk)
    for U in upsilons(bk):
        rows.append([sp2.inner(U, Dk, bk) for Dk in D])
    return linalg.nullspace(rows, bk)


def module_56(bk=EXACT):
    """V^C tensor (sp(1)_ir-complement in S^2 W*): the 56-dimensional torsion carrier."""
    perp = upsilon_perp_basis(bk)  # 7 vectors of length 10
    ad_ups = ad_upsilon_matrices(bk)
    B = np.empty((10, 7), dtype=object)
    for j, v in enumerate(perp):
        for i in range(10):
            B[i, j] = v[i]
    # Restrict ad(Upsilon_s) to the complement: solve B * M_s = ad_s * B.
    restricted = []
    for A in ad_ups:
        AB = A @ B
        M = zeros((7, 7), bk)
        for j in range(7):
            col = linalg.solve([list(B[i]) for i in range(10)],
                               list(AB[:, j]), bk)
            for i in range(7):
                M[i, j] = col[i]
        restricted.append(M)
    Ev = script_e_frames(bk)
    J = jmats(bk)
    I8 = eye(8, bk)
    I7 = eye(7, bk)
    e_gens = [_kron(Ev[s], I7, bk) + _kron(I8, restricted[s], bk) for s in range(3)]
    h_gens = [_kron(J[s] * bk.rational(1, 2), I7, bk) for s in range(3)]
    return So4Module(e_gens, h_gens, bk)
