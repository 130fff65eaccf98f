"""Linear codes built from Fourier rows, MDS certification, standard form and duals."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .errors import (
    CombinationOverflow,
    FieldNotEven,
    FieldTooSmall,
    LengthMismatch,
    NotStandardForm,
    WrongProvenance,
)
from .fourier import RowSelection, fourier_matrix, select_rows
from .galois import FieldContext
from .linalg import (
    DEFAULT_BUDGET,
    FieldMatrix,
    batch_determinant,
    hstack,
    matmul,
    rref,
    scan_minors,
)

Provenance = dict[str, Union[int, str]]


class LinearCode:
    """An ``[n, k]`` code given by a full-rank ``k x n`` generator matrix.

    ``provenance`` records how the generator was constructed; the extension
    constructions inspect it to make sure their hypotheses hold.
    """

    def __init__(
        self,
        generator: FieldMatrix,
        check: Optional[FieldMatrix] = None,
        provenance: Optional[Provenance] = None,
    ) -> None:
        _, r, _ = rref(generator)
        if r != generator.rows:
            raise ValueError(f"generator has rank {r} < {generator.rows} rows")
        if check is not None:
            if check.shape != (generator.cols - generator.rows, generator.cols):
                raise LengthMismatch(f"check matrix shape {check.shape} does not fit the code")
            if np.any(matmul(generator, check.T).data):
                raise ValueError("generator * check^T is not zero")
        self.generator = generator
        self._check = check
        self.provenance: Provenance = dict(provenance or {})

    @property
    def field(self) -> FieldContext:
        return self.generator.field

    @property
    def n(self) -> int:
        return self.generator.cols

    @property
    def k(self) -> int:
        return self.generator.rows

    @property
    def mds_distance(self) -> int:
        """``n - k + 1``: the minimum distance if the code is MDS."""
        return self.n - self.k + 1

    @property
    def t(self) -> int:
        return (self.mds_distance - 1) // 2

    @property
    def is_degenerate(self) -> bool:
        return self.k == 0

    def check_matrix(self) -> FieldMatrix:
        if self._check is None:
            self._check = dual_code(self).generator
        return self._check

    def __repr__(self) -> str:
        kind = self.provenance.get("kind", "custom")
        return f"LinearCode([{self.n},{self.k}] over GF({self.field.q}), {kind})"


@dataclass(frozen=True)
class Sampled:
    """Certification by ``count`` uniformly drawn column sets, reproducible by ``seed``."""

    count: int
    seed: int

    def __str__(self) -> str:
        return f"sampled:{self.count}:{self.seed}"


Mode = Union[str, Sampled]


@dataclass(frozen=True)
class MdsCertificate:
    verdict: bool
    minors_checked: int
    counterexample: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None
    mode: Mode = "full"

    def summary(self) -> str:
        status = "MDS" if self.verdict else "NOT MDS"
        text = f"{status}: {self.minors_checked} minors checked ({self.mode})"
        if self.counterexample is not None:
            rows, cols = self.counterexample
            text += f"; zero minor at rows {list(rows)} cols {list(cols)}"
        return text


# ---------------------------------------------------------------- constructions
def code_from_rows(ctx: FieldContext, sel: RowSelection, n: Optional[int] = None) -> LinearCode:
    """Code generated by the selected rows of ``F_n`` (``n = q - 1`` by default)."""
    F = fourier_matrix(ctx, n)
    A = select_rows(F, sel)
    prov: Provenance = {
        "kind": "fourier",
        "n": F.rows,
        "start": sel.start,
        "count": sel.count,
        "step": sel.step,
    }
    return LinearCode(A, provenance=prov)


def extend_two_columns(code: LinearCode) -> LinearCode:
    """Prepend ``v = (1,0,...,0)^T`` and ``w = (0,...,0,1)^T`` to a Fourier-row code.

    The input must come from :func:`code_from_rows` with ``n = q - 1`` and
    at least two rows; the result has length ``q + 1``.
    """
    prov = code.provenance
    ctx = code.field
    if prov.get("kind") != "fourier" or prov.get("n") != ctx.order:
        raise WrongProvenance("extend_two_columns needs a code from rows of F_(q-1)")
    r = code.k
    if r < 2:
        raise ValueError("the two-column extension needs at least two rows")
    vw = np.zeros((r, 2), dtype=np.int64)
    vw[0, 0] = 1
    vw[r - 1, 1] = 1
    B = hstack(FieldMatrix(ctx, vw), code.generator)
    new_prov = dict(prov)
    new_prov["kind"] = "extended"
    return LinearCode(B, provenance=new_prov)


def extend_identity_columns_dim3(ctx: FieldContext, start: int = 0, step: int = 1) -> LinearCode:
    """``(I_3 | A)`` over GF(2^m), with ``A`` three progression rows of ``F_(q-1)``."""
    if ctx.p != 2:
        raise FieldNotEven(f"GF({ctx.q}) has odd characteristic")
    if ctx.q < 4:
        raise FieldTooSmall(f"F_{ctx.order} has fewer than three rows")
    sel = RowSelection(start, 3, step)
    A = select_rows(fourier_matrix(ctx), sel)
    B = hstack(FieldMatrix.identity(ctx, 3), A)
    prov: Provenance = {"kind": "even3", "n": ctx.order, "start": start, "count": 3, "step": step}
    return LinearCode(B, provenance=prov)


# ---------------------------------------------------------------- certification
def _full_certificate(G: FieldMatrix, budget: Optional[int]) -> MdsCertificate:
    ok, where, checked = scan_minors(G, G.rows, budget)
    return MdsCertificate(ok, checked, where, "full")


def _sampled_certificate(G: FieldMatrix, mode: Sampled, chunk: int = 4096) -> MdsCertificate:
    k, n = G.shape
    rng = np.random.default_rng(mode.seed)
    rows = tuple(range(k))
    checked = 0
    while checked < mode.count:
        size = min(chunk, mode.count - checked)
        # the k smallest of n iid uniforms index a uniformly random k-subset
        cols = np.sort(np.argsort(rng.random((size, n)), axis=1)[:, :k], axis=1)
        dets = batch_determinant(G.field, G.data[:, cols].transpose(1, 0, 2))
        zero = np.flatnonzero(dets == 0)
        if zero.size:
            first = int(zero[0])
            where = (rows, tuple(int(c) for c in cols[first]))
            return MdsCertificate(False, checked + first + 1, where, mode)
        checked += size
    return MdsCertificate(True, checked, None, mode)


def certify_mds(
    code: Union[LinearCode, FieldMatrix],
    mode: Mode = "full",
    budget: Optional[int] = DEFAULT_BUDGET,
) -> MdsCertificate:
    """Check that every ``k x k`` minor of the generator is nonzero.

    ``mode`` is ``"full"`` (lexicographic enumeration of all ``C(n, k)``
    column sets) or a :class:`Sampled` instance.  ``budget=None`` removes the
    full-mode cap.  A bare matrix is accepted so that rank-deficient
    candidates can be rejected with a witness instead of an exception.
    """
    G = code.generator if isinstance(code, LinearCode) else code
    if isinstance(mode, Sampled):
        return _sampled_certificate(G, mode)
    if mode != "full":
        raise ValueError(f"unknown certification mode {mode!r}")
    return _full_certificate(G, budget)


def is_standard_form(G: FieldMatrix) -> bool:
    k = G.rows
    return bool(np.array_equal(G.data[:, :k], np.eye(k, dtype=np.int64)))


def standard_form(code: LinearCode) -> tuple[LinearCode, list[int]]:
    """Row-reduce to ``(I_k | A)``, permuting columns if the pivots are not leading.

    Returns the new code and ``perm`` with ``perm[i]`` the original column
    placed at position ``i``.
    """
    R, _, pivots = rref(code.generator)
    rest = [c for c in range(code.n) if c not in set(pivots)]
    perm = pivots + rest
    prov = dict(code.provenance)
    prov["form"] = "standard"
    return LinearCode(R.take_columns(perm), provenance=prov), perm


def certify_mds_standard(code: LinearCode, budget: Optional[int] = DEFAULT_BUDGET) -> MdsCertificate:
    """MDS check for ``(I_k | A)``: all square minors of ``A`` of every size are nonzero.

    A vanishing ``j x j`` minor of ``A`` is reported as the equivalent
    vanishing ``k x k`` minor of the generator.  The count includes the
    ``I_k`` minor itself, so a passing certificate reports ``C(n, k)``.
    """
    G = code.generator
    if not is_standard_form(G):
        raise NotStandardForm("generator is not of the form (I_k | A)")
    k, n = G.shape
    A = G.take_columns(range(k, n))
    sizes = range(1, min(k, n - k) + 1)
    total = sum(math.comb(k, j) * math.comb(n - k, j) for j in sizes)
    if budget is not None and total > budget:
        raise CombinationOverflow(f"{total} minors exceed the budget {budget}")
    checked = 1
    for j in sizes:
        ok, where, count = scan_minors(A, j, None)
        checked += count
        if not ok:
            rows, cols = where
            identity_cols = [i for i in range(k) if i not in rows]
            gen_cols = tuple(sorted(identity_cols + [k + c for c in cols]))
            return MdsCertificate(False, checked, (tuple(range(k)), gen_cols), "full")
    return MdsCertificate(True, checked, None, "full")


def dual_code(code: LinearCode) -> LinearCode:
    """The dual code, generated by ``(-A^T | I_(n-k))`` mapped back to original columns."""
    ctx = code.field
    k, n = code.k, code.n
    std, perm = standard_form(code)
    A = std.generator.data[:, k:]
    H_std = np.hstack([ctx.vneg(A.T), np.eye(n - k, dtype=np.int64)])
    H = np.zeros_like(H_std)
    H[:, perm] = H_std
    prov = dict(code.provenance)
    prov["dual"] = int(prov.get("dual", 0)) ^ 1
    prov.pop("form", None)
    return LinearCode(FieldMatrix(ctx, H.reshape(n - k, n)), check=code.generator, provenance=prov)


def same_code(a: LinearCode, b: LinearCode) -> bool:
    """Whether two generators span the same row space."""
    if a.field != b.field or a.n != b.n or a.k != b.k:
        return False
    return rref(a.generator)[0] == rref(b.generator)[0]


def minimum_distance(code: LinearCode, limit: int = 10**6) -> int:
    """Minimum Hamming weight over all nonzero codewords, by enumeration."""
    ctx = code.field
    q, k, n = ctx.q, code.k, code.n
    total = q**k
    if total > limit:
        raise CombinationOverflow(f"{total} codewords exceed the enumeration limit {limit}")
    if k == 0:
        return n + 1
    msgs = np.arange(1, total, dtype=np.int64)
    words = np.zeros((total - 1, n), dtype=np.int64)
    for i in range(k):
        digit = (msgs // q**i) % q
        words = ctx.vadd(words, ctx.vmul(digit[:, None], code.generator.data[i][None, :]))
    return int((words != 0).sum(axis=1).min())
