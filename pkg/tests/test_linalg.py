import itertools

import numpy as np
import pytest
import sympy

from fouriermds.errors import CombinationOverflow, IndexOutOfRange, NotSquare, Singular
from fouriermds.fourier import RowSelection, fourier_matrix, select_rows
from fouriermds.galois import field_build, field_of_order
from fouriermds.linalg import (
    FieldMatrix,
    batch_determinant,
    batch_rank,
    determinant,
    matmul,
    minors_all_nonzero,
    rank,
    rref,
    scan_minors,
    solve,
    submatrix,
)
from oracles import PolyField, all_minors_nonzero, cofactor_det, rank_by_minors


def oracle_for(ctx):
    return PolyField(ctx.p, ctx.spec.modulus)


def random_matrix(ctx, rng, rows, cols):
    return FieldMatrix(ctx, rng.integers(0, ctx.q, size=(rows, cols)))


def test_identity_determinant():
    ctx = field_build(3, 2)
    assert determinant(FieldMatrix.identity(ctx, 3)) == ctx.one
    assert determinant(FieldMatrix.zeros(ctx, 0, 0)) == ctx.one


def test_singular_power_matrix_example():
    ctx = field_build(2, 3)
    w = ctx.omega.value
    M = FieldMatrix(ctx, [[1, w], [w, ctx.exp(2)]])
    assert determinant(M) == ctx.zero


def test_not_square():
    with pytest.raises(NotSquare):
        determinant(FieldMatrix.zeros(field_build(5), 2, 3))


@pytest.mark.parametrize("q", [9, 8, 5, 27])
def test_determinant_matches_cofactor_oracle(q):
    ctx = field_of_order(q)
    oracle = oracle_for(ctx)
    rng = np.random.default_rng(q)
    for size in range(1, 6):
        for _ in range(20):
            M = random_matrix(ctx, rng, size, size)
            assert determinant(M).value == cofactor_det(oracle, M.tolist())


@pytest.mark.parametrize("p", [5, 7, 13])
def test_determinant_matches_sympy_over_prime_fields(p):
    ctx = field_build(p)
    rng = np.random.default_rng(p)
    for _ in range(30):
        M = random_matrix(ctx, rng, 5, 5)
        assert determinant(M).value == int(sympy.Matrix(M.tolist()).det()) % p


@pytest.mark.parametrize("q", [4, 7, 9, 16])
def test_determinant_is_multiplicative(q):
    ctx = field_of_order(q)
    rng = np.random.default_rng(7 * q)
    n_pairs = 10**3
    size = 4
    A = rng.integers(0, q, size=(n_pairs, size, size))
    B = rng.integers(0, q, size=(n_pairs, size, size))
    AB = np.zeros_like(A)
    for t in range(size):
        AB = ctx.vadd(AB, ctx.vmul(A[:, :, t : t + 1], B[:, t : t + 1, :]))
    lhs = batch_determinant(ctx, AB)
    rhs = ctx.vmul(batch_determinant(ctx, A), batch_determinant(ctx, B))
    assert np.array_equal(lhs, rhs)


def test_rref_identity_and_zero():
    ctx = field_build(7)
    R, r, piv = rref(FieldMatrix.identity(ctx, 4))
    assert R == FieldMatrix.identity(ctx, 4) and r == 4 and piv == [0, 1, 2, 3]
    Z = FieldMatrix.zeros(ctx, 3, 5)
    R, r, piv = rref(Z)
    assert R == Z and r == 0 and piv == []


@pytest.mark.parametrize("q", [5, 8, 9])
def test_rank_matches_minor_oracle(q):
    ctx = field_of_order(q)
    oracle = oracle_for(ctx)
    rng = np.random.default_rng(q + 1)
    for _ in range(40):
        rows, cols = rng.integers(1, 5, size=2)
        M = random_matrix(ctx, rng, rows, cols)
        if rng.random() < 0.4 and rows > 1:
            data = M.data.copy()
            data[-1] = ctx.vadd(data[0], ctx.vmul(data[1 % rows], np.int64(rng.integers(0, q))))
            M = FieldMatrix(ctx, data)
        expect = rank_by_minors(oracle, M.tolist())
        assert rank(M) == expect
        assert batch_rank(ctx, M.data[None])[0] == expect


def test_rref_is_reduced():
    ctx = field_build(3, 2)
    rng = np.random.default_rng(3)
    M = random_matrix(ctx, rng, 4, 7)
    R, r, piv = rref(M)
    for i, c in enumerate(piv):
        col = R.data[:, c]
        assert col[i] == 1 and np.count_nonzero(col) == 1
    assert not R.data[r:].any()


def test_rref_of_fourier_rows_has_full_rank():
    ctx = field_build(2, 4)
    A = select_rows(fourier_matrix(ctx), RowSelection(2, 5, 7))
    _, r, piv = rref(A)
    assert r == 5 and len(piv) == 5


def test_submatrix():
    ctx = field_build(7)
    M = FieldMatrix(ctx, np.arange(15).reshape(3, 5) % 7)
    assert submatrix(M, [0, 1, 2], range(5)) == M
    assert submatrix(M, [1], [2]).tolist() == [[M.data[1, 2]]]
    S = submatrix(M, [0, 2], [1, 3])
    assert S.tolist() == [[M.data[0, 1], M.data[0, 3]], [M.data[2, 1], M.data[2, 3]]]
    with pytest.raises(IndexOutOfRange):
        submatrix(M, [0, 3], [0])
    with pytest.raises(IndexOutOfRange):
        submatrix(M, [1, 0], [0])


def test_minors_all_ones_counterexample():
    ctx = field_build(5)
    ok, where = minors_all_nonzero(FieldMatrix(ctx, [[1, 1], [1, 1]]), 2)
    assert not ok and where == ((0, 1), (0, 1))


def test_minors_first_three_fourier_rows_gf8():
    ctx = field_build(2, 3)
    A = select_rows(fourier_matrix(ctx), RowSelection(0, 3, 1))
    assert minors_all_nonzero(A, 2) == (True, None)


def test_minors_first_three_fourier_rows_gf5_matches_oracle():
    ctx = field_build(5)
    A = select_rows(fourier_matrix(ctx), RowSelection(0, 3, 1))
    ok, where = minors_all_nonzero(A, 2)
    assert ok == all_minors_nonzero(oracle_for(ctx), A.tolist(), 2)
    # by hand: the third row is w^(2j) and w^4 = 1, so columns 0 and 2 agree on rows 0 and 2
    assert not ok
    assert determinant(submatrix(A, *where)) == ctx.zero


@pytest.mark.parametrize("q", [4, 5, 7, 9])
def test_minors_verdict_matches_cofactor_oracle(q):
    ctx = field_of_order(q)
    oracle = oracle_for(ctx)
    rng = np.random.default_rng(11 * q)
    for rows in range(1, 5):
        for cols in range(1, 7):
            for _ in range(3):
                M = random_matrix(ctx, rng, rows, cols)
                # nonzero entries make the verdict non-trivial more often
                M = FieldMatrix(ctx, np.where(M.data == 0, 1, M.data))
                for j in range(1, min(rows, cols) + 1):
                    ok, where = minors_all_nonzero(M, j)
                    assert ok == all_minors_nonzero(oracle, M.tolist(), j)
                    if not ok:
                        assert cofactor_det(oracle, submatrix(M, *where).tolist()) == 0


def test_minor_scan_is_lexicographic_first_failure():
    ctx = field_build(7)
    M = FieldMatrix(ctx, [[1, 2, 3, 1], [1, 2, 3, 2], [1, 5, 6, 4]])
    ok, where, checked = scan_minors(M, 2)
    # first zero 2x2 minor in (row set, column set) lexicographic order
    oracle = oracle_for(ctx)
    expected = None
    for count, (rs, cs) in enumerate(
        ((rs, cs) for rs in itertools.combinations(range(3), 2) for cs in itertools.combinations(range(4), 2)), 1
    ):
        if cofactor_det(oracle, submatrix(M, rs, cs).tolist()) == 0:
            expected = ((rs, cs), count)
            break
    assert not ok and (where, checked) == expected


def test_budget_guard():
    ctx = field_build(257)
    A = select_rows(fourier_matrix(ctx), RowSelection(0, 4, 1))
    with pytest.raises(CombinationOverflow):
        minors_all_nonzero(A, 4)
    with pytest.raises(CombinationOverflow):
        minors_all_nonzero(A, 2, budget=1000)


def test_solve():
    ctx = field_build(2, 3)
    rng = np.random.default_rng(0)
    I = FieldMatrix.identity(ctx, 3)
    rhs = random_matrix(ctx, rng, 3, 2)
    assert solve(I, rhs) == rhs
    V = FieldMatrix(ctx, [[ctx.exp(i * j) for j in range(3)] for i in (1, 2, 3)])
    X = random_matrix(ctx, rng, 3, 4)
    assert solve(V, matmul(V, X)) == X
    S = FieldMatrix(ctx, [[1, 2, 3], [1, 2, 3], [4, 5, 6]])
    with pytest.raises(Singular):
        solve(S, rhs)
