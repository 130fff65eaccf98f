"""Extended Fourier-matrix MDS codes over finite fields.

Builds generator matrices from rows of Fourier matrices over GF(q),
extends them to length ``q + 1`` (and ``q + 2`` in dimension 3 over
GF(2^m)), certifies the MDS property by enumerating minors, encodes and
decodes, and searches exhaustively for the longest ``[n, 3]`` MDS codes
over small fields.
"""

from .bounds import SearchReport, max_length_dim3, search_dim3
from .codec import DecodeResult, Word, encode, erasure_decode, error_decode, syndrome
from .codes import (
    LinearCode,
    MdsCertificate,
    Sampled,
    certify_mds,
    certify_mds_standard,
    code_from_rows,
    dual_code,
    extend_identity_columns_dim3,
    extend_two_columns,
    minimum_distance,
    standard_form,
)
from .fourier import (
    RowSelection,
    check_first_three_rows_2x2,
    fourier_matrix,
    inverse_fourier_matrix,
    select_rows,
)
from .galois import FieldContext, FieldElement, FieldSpec, field_build, field_of_order
from .linalg import (
    FieldMatrix,
    determinant,
    minors_all_nonzero,
    rref,
    solve,
    submatrix,
)

__version__ = "0.1.0"
