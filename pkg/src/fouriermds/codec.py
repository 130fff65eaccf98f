"""Encoding, syndromes, erasure decoding and bounded-distance error decoding.

Error decoding enumerates candidate error supports of weight ``1..t`` in
lexicographic order and accepts the first support whose columns of the
check matrix explain the syndrome.  Because two error patterns of weight
``<= t`` cannot share a syndrome when the minimum distance is ``2t + 1``,
the first hit is the unique nearest codeword.  Cost is ``sum C(n, w)``
small eliminations, fine at the lengths this package targets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from .codes import LinearCode
from .errors import DecodingFailure, LengthMismatch, TooManyErasures
from .galois import FieldContext, FieldElement
from .linalg import CHUNK, FieldMatrix, batch_rank, rref, solve

Symbol = Union[int, FieldElement]


@dataclass(frozen=True)
class Word:
    """A vector of field symbols, optionally with erased positions marked."""

    symbols: tuple[FieldElement, ...]
    erasures: Optional[tuple[bool, ...]] = None

    def __post_init__(self) -> None:
        if self.erasures is not None and len(self.erasures) != len(self.symbols):
            raise LengthMismatch("erasure mask length differs from the word length")

    @classmethod
    def of(
        cls,
        field: FieldContext,
        values: Sequence[Symbol],
        erasures: Optional[Sequence[bool]] = None,
    ) -> Word:
        symbols = tuple(v if isinstance(v, FieldElement) else FieldElement(field, v) for v in values)
        mask = None if erasures is None else tuple(bool(e) for e in erasures)
        return cls(symbols, mask)

    def __len__(self) -> int:
        return len(self.symbols)

    def values(self) -> list[int]:
        return [s.value for s in self.symbols]

    @property
    def erased_positions(self) -> list[int]:
        if self.erasures is None:
            return []
        return [i for i, e in enumerate(self.erasures) if e]


@dataclass(frozen=True)
class DecodeResult:
    message: tuple[FieldElement, ...]
    codeword: Word
    corrections: int


def _as_array(field: FieldContext, symbols: Sequence[Symbol]) -> np.ndarray:
    vals = [s.value if isinstance(s, FieldElement) else int(s) for s in symbols]
    arr = np.array(vals, dtype=np.int64)
    if arr.size and (arr.min() < 0 or arr.max() >= field.q):
        raise ValueError(f"symbols must lie in [0, {field.q})")
    return arr


def _encode_array(code: LinearCode, msg: np.ndarray) -> np.ndarray:
    ctx = code.field
    out = np.zeros(code.n, dtype=np.int64)
    for i in range(code.k):
        out = ctx.vadd(out, ctx.vmul(msg[i], code.generator.data[i]))
    return out


def encode(message: Sequence[Symbol], code: LinearCode) -> Word:
    """``message @ generator``."""
    if len(message) != code.k:
        raise LengthMismatch(f"message has {len(message)} symbols, code dimension is {code.k}")
    cw = _encode_array(code, _as_array(code.field, message))
    return Word.of(code.field, cw.tolist())


def syndrome(received: Union[Word, Sequence[Symbol]], code: LinearCode) -> list[FieldElement]:
    """``H @ received^T``; all zero exactly for codewords."""
    ctx = code.field
    symbols = received.symbols if isinstance(received, Word) else received
    if len(symbols) != code.n:
        raise LengthMismatch(f"word has {len(symbols)} symbols, code length is {code.n}")
    r = _as_array(ctx, symbols)
    H = code.check_matrix().data
    s = np.zeros(H.shape[0], dtype=np.int64)
    for j in range(code.n):
        s = ctx.vadd(s, ctx.vmul(H[:, j], r[j]))
    return [FieldElement(ctx, v) for v in s.tolist()]


def _solve_message(code: LinearCode, positions: list[int], values: np.ndarray) -> np.ndarray:
    G_S = code.generator.take_columns(positions)
    rhs = FieldMatrix(code.field, values[:, None])
    return solve(G_S.T, rhs).data[:, 0]


def erasure_decode(received: Word, code: LinearCode) -> DecodeResult:
    """Recover the message from the first ``k`` unerased positions.

    The remaining unerased positions are checked against the re-encoded word;
    a disagreement raises :class:`DecodingFailure` instead of being patched.
    ``corrections`` counts the erased positions that were filled in.
    """
    ctx = code.field
    if len(received) != code.n:
        raise LengthMismatch(f"word has {len(received)} symbols, code length is {code.n}")
    erased = set(received.erased_positions)
    alive = [i for i in range(code.n) if i not in erased]
    if len(alive) < code.k:
        raise TooManyErasures(
            f"{len(erased)} erasures exceed the limit n - k = {code.n - code.k}"
        )
    r = _as_array(ctx, received.symbols)
    msg = _solve_message(code, alive[: code.k], r[alive[: code.k]])
    cw = _encode_array(code, msg)
    if np.any(cw[alive] != r[alive]):
        raise DecodingFailure("unerased symbols are inconsistent with any single codeword")
    return DecodeResult(
        tuple(FieldElement(ctx, v) for v in msg.tolist()),
        Word.of(ctx, cw.tolist()),
        len(erased),
    )


def _find_error(code: LinearCode, s: np.ndarray, max_weight: int) -> Optional[tuple[tuple[int, ...], np.ndarray]]:
    ctx = code.field
    H = code.check_matrix().data
    for w in range(1, max_weight + 1):
        it = itertools.combinations(range(code.n), w)
        while True:
            block = list(itertools.islice(it, CHUNK))
            if not block:
                break
            supports = np.array(block, dtype=np.int64)
            H_S = H[:, supports].transpose(1, 0, 2)
            aug = np.concatenate([H_S, np.broadcast_to(s[None, :, None], (len(block), len(s), 1))], axis=2)
            consistent = batch_rank(ctx, H_S) == batch_rank(ctx, aug)
            hits = np.flatnonzero(consistent)
            if hits.size:
                support = block[int(hits[0])]
                R, _, pivots = rref(FieldMatrix(ctx, aug[int(hits[0])]))
                values = np.zeros(w, dtype=np.int64)
                for row, col in enumerate(pivots):
                    if col < w:
                        values[col] = R.data[row, w]
                return support, values
    return None


def error_decode(received: Union[Word, Sequence[Symbol]], code: LinearCode) -> DecodeResult:
    """Correct up to ``t = (d - 1) // 2`` symbol errors, ``d = n - k + 1``.

    Raises :class:`DecodingFailure` when no codeword lies within distance ``t``.
    """
    ctx = code.field
    symbols = received.symbols if isinstance(received, Word) else received
    if len(symbols) != code.n:
        raise LengthMismatch(f"word has {len(symbols)} symbols, code length is {code.n}")
    r = _as_array(ctx, symbols)
    s = np.array([e.value for e in syndrome(symbols, code)], dtype=np.int64)
    cw = r
    corrections = 0
    if np.any(s):
        found = _find_error(code, s, code.t)
        if found is None:
            raise DecodingFailure(f"no codeword within distance {code.t}")
        support, values = found
        cw = r.copy()
        cw[list(support)] = ctx.vsub(r[list(support)], values)
        corrections = int(np.count_nonzero(values))
    positions = _information_set(code)
    msg = _solve_message(code, positions, cw[positions])
    return DecodeResult(
        tuple(FieldElement(ctx, v) for v in msg.tolist()),
        Word.of(ctx, cw.tolist()),
        corrections,
    )


def _information_set(code: LinearCode) -> list[int]:
    return rref(code.generator)[2]
