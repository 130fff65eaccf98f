"""Dense exact linear algebra over a :class:`~fouriermds.galois.FieldContext`.

Matrices hold encoded field elements in read-only ``int64`` numpy arrays.
The minor scans evaluate determinants in batches: a stack of ``j x j``
submatrices is eliminated in lockstep, one pivot column at a time.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .errors import (
    CombinationOverflow,
    ContextMismatch,
    IndexOutOfRange,
    LengthMismatch,
    NotSquare,
    Singular,
)
from .galois import FieldContext, FieldElement

DEFAULT_BUDGET = 10**7
CHUNK = 1 << 15


class FieldMatrix:
    """An immutable ``rows x cols`` matrix over a finite field."""

    __slots__ = ("field", "data")

    def __init__(self, field: FieldContext, data) -> None:
        arr = np.array(data, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError(f"expected a 2-d array, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise ValueError(f"entries must be element encodings in [0, {field.q})")
        arr.setflags(write=False)
        self.field = field
        self.data = arr

    @classmethod
    def from_rows(cls, field: FieldContext, rows: Sequence[Sequence], cols: Optional[int] = None):
        rows = [[int(x) for x in row] for row in rows]
        if not rows:
            return cls(field, np.zeros((0, cols or 0), dtype=np.int64))
        return cls(field, rows)

    @classmethod
    def identity(cls, field: FieldContext, n: int) -> FieldMatrix:
        return cls(field, np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, field: FieldContext, rows: int, cols: int) -> FieldMatrix:
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    @property
    def entries(self) -> list[FieldElement]:
        return [FieldElement(self.field, v) for v in self.data.ravel().tolist()]

    def __getitem__(self, key: tuple[int, int]) -> FieldElement:
        i, j = key
        return FieldElement(self.field, int(self.data[i, j]))

    def tolist(self) -> list[list[int]]:
        return self.data.tolist()

    @property
    def T(self) -> FieldMatrix:
        return FieldMatrix(self.field, self.data.T)

    def take_columns(self, cols: Iterable[int]) -> FieldMatrix:
        return FieldMatrix(self.field, self.data[:, list(cols)])

    def __matmul__(self, other: FieldMatrix) -> FieldMatrix:
        return matmul(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.shape == other.shape
            and bool(np.array_equal(self.data, other.data))
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"FieldMatrix(GF({self.field.q}), {self.tolist()})"


def _same_field(a: FieldMatrix, b: FieldMatrix) -> FieldContext:
    if a.field != b.field:
        raise ContextMismatch(f"{a.field!r} vs {b.field!r}")
    return a.field


def matmul(a: FieldMatrix, b: FieldMatrix) -> FieldMatrix:
    f = _same_field(a, b)
    if a.cols != b.rows:
        raise LengthMismatch(f"cannot multiply {a.shape} by {b.shape}")
    out = np.zeros((a.rows, b.cols), dtype=np.int64)
    for t in range(a.cols):
        out = f.vadd(out, f.vmul(a.data[:, t : t + 1], b.data[t : t + 1, :]))
    return FieldMatrix(f, out)


def hstack(*blocks: FieldMatrix) -> FieldMatrix:
    f = blocks[0].field
    for b in blocks[1:]:
        _same_field(blocks[0], b)
    return FieldMatrix(f, np.hstack([b.data for b in blocks]))


def submatrix(M: FieldMatrix, row_idx: Sequence[int], col_idx: Sequence[int]) -> FieldMatrix:
    """Rows ``row_idx`` and columns ``col_idx`` of ``M``; both strictly increasing."""
    for idx, bound, what in ((row_idx, M.rows, "row"), (col_idx, M.cols, "column")):
        idx = list(idx)
        if any(i < 0 or i >= bound for i in idx):
            raise IndexOutOfRange(f"{what} index out of range [0, {bound}): {idx}")
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise IndexOutOfRange(f"{what} indices must be strictly increasing: {idx}")
    return FieldMatrix(M.field, M.data[np.ix_(list(row_idx), list(col_idx))])


# --------------------------------------------------------------------- kernels
def batch_determinant(field: FieldContext, stack: np.ndarray) -> np.ndarray:
    """Determinants of a ``(B, k, k)`` stack of encoded matrices.

    Row pivoting takes the first nonzero entry at or below the diagonal.
    """
    A = np.array(stack, dtype=np.int64)
    B, k, _ = A.shape
    det = np.ones(B, dtype=np.int64)
    rows = np.arange(B)
    for c in range(k):
        nz = A[:, c:, c] != 0
        piv = c + nz.argmax(axis=1)
        swap = np.flatnonzero(piv != c)
        if swap.size:
            top = A[swap, c].copy()
            A[swap, c] = A[swap, piv[swap]]
            A[swap, piv[swap]] = top
            det[swap] = field.vneg(det[swap])
        pivot = A[rows, c, c]
        # pivot is zero exactly when the column had no nonzero candidate
        det = field.vmul(det, pivot)
        if c + 1 < k:
            factors = field.vmul(A[:, c + 1 :, c], field.vinv(pivot)[:, None])
            A[:, c + 1 :, c:] = field.vsub(
                A[:, c + 1 :, c:], field.vmul(factors[:, :, None], A[:, None, c, c:])
            )
    return det


def batch_rank(field: FieldContext, stack: np.ndarray) -> np.ndarray:
    """Ranks of a ``(B, r, c)`` stack of encoded matrices."""
    A = np.array(stack, dtype=np.int64)
    B, r, c = A.shape
    rank = np.zeros(B, dtype=np.int64)
    batch = np.arange(B)
    row_ids = np.arange(r)
    for col in range(c):
        if r == 0:
            break
        cand = (A[:, :, col] != 0) & (row_ids[None, :] >= rank[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        piv = cand.argmax(axis=1)
        tgt = np.minimum(rank, r - 1)
        swap = np.flatnonzero(has & (piv != tgt))
        if swap.size:
            top = A[swap, tgt[swap]].copy()
            A[swap, tgt[swap]] = A[swap, piv[swap]]
            A[swap, piv[swap]] = top
        pivot_row = A[batch, tgt]
        pivot = np.where(has, pivot_row[:, col], 0)
        below = (row_ids[None, :] > tgt[:, None]) & has[:, None]
        factors = np.where(below, field.vmul(A[:, :, col], field.vinv(pivot)[:, None]), 0)
        A = field.vsub(A, field.vmul(factors[:, :, None], pivot_row[:, None, :]))
        rank = rank + has
    return rank


def _combination_chunks(n: int, k: int, size: int = CHUNK) -> Iterator[np.ndarray]:
    it = itertools.combinations(range(n), k)
    while True:
        block = list(itertools.islice(it, size))
        if not block:
            return
        yield np.array(block, dtype=np.int64).reshape(len(block), k)


def minor_count(rows: int, cols: int, j: int) -> int:
    return math.comb(rows, j) * math.comb(cols, j)


def scan_minors(
    M: FieldMatrix, j: int, budget: Optional[int] = DEFAULT_BUDGET
) -> tuple[bool, Optional[tuple[tuple[int, ...], tuple[int, ...]]], int]:
    """Evaluate ``j x j`` minors of ``M`` in lexicographic order.

    Returns ``(all_nonzero, first_zero_minor, minors_checked)``; the scan
    stops at the first vanishing minor.
    """
    if not 0 <= j <= min(M.rows, M.cols):
        raise ValueError(f"minor size {j} out of range for a {M.rows}x{M.cols} matrix")
    total = minor_count(M.rows, M.cols, j)
    if budget is not None and total > budget:
        raise CombinationOverflow(f"{total} minors of size {j} exceed the budget {budget}")
    if j == 0:
        return True, None, 1
    f = M.field
    n_cols = math.comb(M.cols, j)
    checked = 0
    if n_cols >= CHUNK:
        for row_set in itertools.combinations(range(M.rows), j):
            block = M.data[list(row_set)]
            for cols in _combination_chunks(M.cols, j):
                dets = batch_determinant(f, block[:, cols].transpose(1, 0, 2))
                zero = np.flatnonzero(dets == 0)
                if zero.size:
                    first = int(zero[0])
                    return False, (row_set, tuple(int(c) for c in cols[first])), checked + first + 1
                checked += len(cols)
        return True, None, checked
    # few column sets: batch several row sets per kernel call
    all_cols = np.array(list(itertools.combinations(range(M.cols), j)), dtype=np.int64)
    for rows in _combination_chunks(M.rows, j, max(1, CHUNK // n_cols)):
        stack = M.data[rows[:, None, :, None], all_cols[None, :, None, :]]
        dets = batch_determinant(f, stack.reshape(-1, j, j))
        zero = np.flatnonzero(dets == 0)
        if zero.size:
            first = int(zero[0])
            r, c = divmod(first, n_cols)
            where = (tuple(int(x) for x in rows[r]), tuple(int(x) for x in all_cols[c]))
            return False, where, checked + first + 1
        checked += dets.size
    return True, None, checked


def minors_all_nonzero(
    M: FieldMatrix, j: int, budget: Optional[int] = DEFAULT_BUDGET
) -> tuple[bool, Optional[tuple[tuple[int, ...], tuple[int, ...]]]]:
    """Whether every ``j x j`` minor of ``M`` is nonzero, with the first failure.

    ``budget=None`` lifts the :data:`DEFAULT_BUDGET` cap.
    """
    ok, where, _ = scan_minors(M, j, budget)
    return ok, where


def batch_all_minors_nonzero(field: FieldContext, stack: np.ndarray, max_size: int) -> np.ndarray:
    """For each matrix in a ``(B, r, c)`` stack: are all minors of size ``1..max_size`` nonzero?"""
    A = np.asarray(stack, dtype=np.int64)
    B, r, c = A.shape
    ok = np.ones(B, dtype=bool)
    for j in range(1, max_size + 1):
        for row_set in itertools.combinations(range(r), j):
            for col_set in itertools.combinations(range(c), j):
                sub = A[:, list(row_set)][:, :, list(col_set)]
                ok &= batch_determinant(field, sub) != 0
    return ok


# ----------------------------------------------------------- matrix operations
def determinant(M: FieldMatrix) -> FieldElement:
    if M.rows != M.cols:
        raise NotSquare(f"determinant of a {M.rows}x{M.cols} matrix")
    if M.rows == 0:
        return M.field.one
    return FieldElement(M.field, int(batch_determinant(M.field, M.data[None])[0]))


def rref(M: FieldMatrix) -> tuple[FieldMatrix, int, list[int]]:
    """Reduced row echelon form, rank and pivot columns."""
    f = M.field
    R = M.data.copy()
    pivots: list[int] = []
    r = 0
    for c in range(M.cols):
        if r == M.rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r] = f.vmul(R[r], f.inv(int(R[r, c])))
        others = np.flatnonzero(R[:, c])
        others = others[others != r]
        if others.size:
            R[others] = f.vsub(R[others], f.vmul(R[others, c][:, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return FieldMatrix(f, R), r, pivots


def rank(M: FieldMatrix) -> int:
    return rref(M)[1]


def solve(M: FieldMatrix, rhs: FieldMatrix) -> FieldMatrix:
    """The unique ``X`` with ``M @ X == rhs`` for square nonsingular ``M``."""
    if M.rows != M.cols:
        raise NotSquare(f"solve needs a square matrix, got {M.rows}x{M.cols}")
    _same_field(M, rhs)
    if rhs.rows != M.rows:
        raise LengthMismatch(f"right-hand side has {rhs.rows} rows, expected {M.rows}")
    n = M.rows
    R, r, pivots = rref(hstack(M, rhs))
    if pivots[:n] != list(range(n)):
        raise Singular("matrix is singular")
    return FieldMatrix(M.field, R.data[:, n:])


def inverse(M: FieldMatrix) -> FieldMatrix:
    return solve(M, FieldMatrix.identity(M.field, M.rows))
