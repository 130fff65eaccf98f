"""Fourier matrices over finite fields and arithmetic-progression row blocks."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import NoRootOfUnity, StepNotCoprime
from .galois import FieldContext, FieldElement
from .linalg import FieldMatrix, minors_all_nonzero


@dataclass(frozen=True)
class RowSelection:
    """Rows ``start, start + step, ..., start + (count - 1) * step`` taken mod n.

    Indices are 0-based.
    """

    start: int = 0
    count: int = 1
    step: int = 1

    def validate(self, n: int) -> None:
        if self.count < 1:
            raise ValueError(f"row count must be >= 1, got {self.count}")
        if self.count > n:
            raise ValueError(f"cannot select {self.count} distinct rows out of {n}")
        if not 0 <= self.start < n:
            raise ValueError(f"start row {self.start} outside [0, {n})")
        if self.step < 1:
            raise ValueError(f"step must be >= 1, got {self.step}")
        if math.gcd(self.step, n) != 1:
            raise StepNotCoprime(f"gcd({self.step}, {n}) != 1")

    def indices(self, n: int) -> list[int]:
        return [(self.start + t * self.step) % n for t in range(self.count)]


def root_of_unity(ctx: FieldContext, n: int) -> FieldElement:
    """The primitive n-th root ``omega**((q-1)/n)``."""
    if n < 1 or ctx.order % n:
        raise NoRootOfUnity(f"GF({ctx.q}) has no primitive {n}-th root of unity")
    return FieldElement(ctx, ctx.exp(ctx.order // n))


def _power_table(ctx: FieldContext, exponents: np.ndarray, n: int) -> np.ndarray:
    return ctx.vexp((exponents % n) * (ctx.order // n))


def fourier_matrix(ctx: FieldContext, n: Optional[int] = None) -> FieldMatrix:
    """``F_n`` with entry ``(i, j) = w**(i*j)`` for ``w = root_of_unity(ctx, n)``.

    ``n`` defaults to ``q - 1``, in which case ``w`` is omega itself.
    """
    n = ctx.order if n is None else n
    root_of_unity(ctx, n)
    idx = np.arange(n, dtype=np.int64)
    return FieldMatrix(ctx, _power_table(ctx, np.outer(idx, idx), n))


def inverse_fourier_matrix(ctx: FieldContext, n: Optional[int] = None) -> FieldMatrix:
    """``n**-1`` times the reversed-exponent matrix with entries ``w**(-i*j)``."""
    n = ctx.order if n is None else n
    root_of_unity(ctx, n)
    idx = np.arange(n, dtype=np.int64)
    reversed_ = _power_table(ctx, -np.outer(idx, idx), n)
    # n is coprime to p because n divides q - 1
    scale = ctx.inv(ctx.from_int(n))
    return FieldMatrix(ctx, ctx.vmul(reversed_, np.int64(scale)))


def select_rows(F: FieldMatrix, sel: RowSelection) -> FieldMatrix:
    """Rows of ``F`` picked by ``sel``; indices wrap around modulo ``F.rows``."""
    n = F.rows
    sel.validate(n)
    return FieldMatrix(F.field, F.data[sel.indices(n)])


def first_three_rows(ctx: FieldContext) -> FieldMatrix:
    """The ``3 x (q-1)`` matrix with rows ``omega**(i*j)`` for ``i = 0, 1, 2``.

    Defined for every field; rows repeat when ``q - 1 < 3``.
    """
    t = ctx.order
    exps = np.outer(np.arange(3), np.arange(t))
    return FieldMatrix(ctx, ctx.vexp(exps))


def check_first_three_rows_2x2(ctx: FieldContext) -> bool:
    """True iff every 2x2 minor of :func:`first_three_rows` is nonzero."""
    A = first_three_rows(ctx)
    if A.cols < 2:
        return True
    ok, _ = minors_all_nonzero(A, 2, budget=None)
    return ok
