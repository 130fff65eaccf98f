"""Plain-text matrix files.

::

    field p=3 m=2 modulus=[2,1,1]
    dims 4 10
    1 0 1 1 1 1 1 1 1 1
    ...
    # provenance: kind=extended n=8 start=0 count=4 step=1

Entries are element encodings in ``[0, q)``.  Provenance values use the
library's 0-based row indices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

from .codes import LinearCode, Provenance
from .errors import MatrixFormatError
from .galois import FieldSpec, field_from_spec
from .linalg import FieldMatrix

_FIELD_RE = re.compile(r"^field\s+p=(\d+)\s+m=(\d+)\s+modulus=\[([\d,\s]*)\]$")
_DIMS_RE = re.compile(r"^dims\s+(\d+)\s+(\d+)$")
_PROVENANCE = "# provenance:"


@dataclass
class MatrixFile:
    spec: FieldSpec
    rows: list[list[int]]
    cols: int
    provenance: Optional[Provenance] = field(default=None)

    def matrix(self) -> FieldMatrix:
        return FieldMatrix.from_rows(field_from_spec(self.spec), self.rows, cols=self.cols)

    def code(self) -> LinearCode:
        return LinearCode(self.matrix(), provenance=self.provenance)

    @classmethod
    def from_matrix(cls, M: FieldMatrix, provenance: Optional[Provenance] = None) -> MatrixFile:
        return cls(M.field.spec, M.tolist(), M.cols, provenance)

    @classmethod
    def from_code(cls, code: LinearCode) -> MatrixFile:
        return cls.from_matrix(code.generator, code.provenance or None)


def format_matrix_file(mf: MatrixFile) -> str:
    lines = [f"field {mf.spec}", f"dims {len(mf.rows)} {mf.cols}"]
    lines += [" ".join(str(v) for v in row) for row in mf.rows]
    if mf.provenance:
        pairs = " ".join(f"{k}={v}" for k, v in mf.provenance.items())
        lines.append(f"{_PROVENANCE} {pairs}")
    return "\n".join(lines) + "\n"


def _parse_value(text: str) -> Union[int, str]:
    return int(text) if re.fullmatch(r"-?\d+", text) else text


def parse_matrix_file(text: str) -> MatrixFile:
    lines = [ln.strip() for ln in text.splitlines()]
    provenance: Optional[Provenance] = None
    body = []
    for ln in lines:
        if ln.startswith(_PROVENANCE):
            provenance = {}
            for pair in ln[len(_PROVENANCE) :].split():
                key, sep, value = pair.partition("=")
                if not sep:
                    raise MatrixFormatError(f"bad provenance entry {pair!r}")
                provenance[key] = _parse_value(value)
        elif ln and not ln.startswith("#"):
            body.append(ln)
    if len(body) < 2:
        raise MatrixFormatError("missing field or dims line")
    m = _FIELD_RE.match(body[0])
    if not m:
        raise MatrixFormatError(f"bad field line {body[0]!r}")
    try:
        modulus = tuple(int(c) for c in m.group(3).split(",") if c.strip())
        spec = FieldSpec(int(m.group(1)), int(m.group(2)), modulus)
    except ValueError as exc:
        raise MatrixFormatError(f"bad field description: {exc}") from exc
    d = _DIMS_RE.match(body[1])
    if not d:
        raise MatrixFormatError(f"bad dims line {body[1]!r}")
    nrows, ncols = int(d.group(1)), int(d.group(2))
    data = body[2:]
    if len(data) != nrows:
        raise MatrixFormatError(f"expected {nrows} matrix rows, found {len(data)}")
    rows = []
    for ln in data:
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError as exc:
            raise MatrixFormatError(f"non-integer entry in row {ln!r}") from exc
        if len(row) != ncols:
            raise MatrixFormatError(f"expected {ncols} entries, found {len(row)} in {ln!r}")
        if any(not 0 <= v < spec.q for v in row):
            raise MatrixFormatError(f"entry out of range [0, {spec.q}) in {ln!r}")
        rows.append(row)
    return MatrixFile(spec, rows, ncols, provenance)


def read_matrix_file(path: Union[str, Path]) -> MatrixFile:
    return parse_matrix_file(Path(path).read_text(encoding="utf-8"))


def write_matrix_file(path: Union[str, Path], mf: MatrixFile) -> None:
    Path(path).write_text(format_matrix_file(mf), encoding="utf-8")
