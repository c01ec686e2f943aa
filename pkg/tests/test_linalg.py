"""Gaussian elimination over both scalar backends."""

import pytest

from cubicdisc.scalars import EXACT, FLOAT
from cubicdisc import linalg


def M(rows, bk=EXACT):
    return [[bk.rational(x) for x in row] for row in rows]


def test_rank_and_rref():
    A = M([[1, 2], [2, 4], [0, 1]])
    assert linalg.rank(A, EXACT) == 2
    A = M([[1, 2], [2, 4]])
    assert linalg.rank(A, EXACT) == 1


def test_nullspace():
    A = M([[1, 2, 3], [2, 4, 6]])
    null = linalg.nullspace(A, EXACT)
    assert len(null) == 2
    for v in null:
        for row in A:
            s = EXACT.zero
            for a, x in zip(row, v):
                s = s + a * x
            assert not s


def test_solve_and_inconsistent():
    A = M([[1, 1], [1, -1]])
    x = linalg.solve(A, [EXACT.rational(3), EXACT.rational(1)], EXACT)
    assert x[0] == EXACT.rational(2) and x[1] == EXACT.one
    B = M([[1, 1], [1, 1]])
    with pytest.raises(ValueError):
        linalg.solve(B, [EXACT.rational(1), EXACT.rational(2)], EXACT)


def test_inverse():
    A = M([[2, 1], [1, 1]])
    Ainv = linalg.inverse(A, EXACT)
    assert Ainv[0, 0] == EXACT.one
    assert Ainv[0, 1] == -EXACT.one
    with pytest.raises(ValueError):
        linalg.inverse(M([[1, 1], [1, 1]]), EXACT)


def test_float_rank_threshold():
    A = [[1.0, 2.0], [2.0, 4.0 + 1e-12]]
    assert linalg.rank(A, FLOAT) == 1
    A = [[1.0, 2.0], [2.0, 4.1]]
    assert linalg.rank(A, FLOAT) == 2


def test_sparse_eliminator_nullspace():
    elim = linalg.SparseEliminator(4, EXACT)
    one = EXACT.one
    elim.add_row({0: one, 1: one})
    elim.add_row({1: one, 2: one})
    elim.add_row({0: one, 2: -one})   # dependent
    assert elim.rank() == 2
    null = elim.nullspace()
    assert len(null) == 2
    for v in null:
        assert not (v[0] + v[1])
        assert not (v[1] + v[2])


def test_sparse_matches_dense():
    rows = [[1, 0, 2, -1], [0, 3, 1, 1], [1, 3, 3, 0]]
    dense = linalg.nullspace(M(rows), EXACT)
    elim = linalg.SparseEliminator(4, EXACT)
    for row in rows:
        elim.add_row({i: EXACT.rational(x) for i, x in enumerate(row) if x})
    sparse = elim.nullspace()
    # row3 = row1 + row2, so the rank is 2 and the nullspace is 2-dimensional.
    assert len(dense) == len(sparse) == 2
    for v in sparse:
        for row in rows:
            s = EXACT.zero
            for i, x in enumerate(row):
                s = s + v[i] * EXACT.rational(x)
            assert not s
