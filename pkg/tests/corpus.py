"""Shared small-field code corpus for the test modules."""

from fouriermds.codes import LinearCode, code_from_rows, extend_identity_columns_dim3, extend_two_columns
from fouriermds.fourier import RowSelection, fourier_matrix, select_rows
from fouriermds.galois import field_of_order
from fouriermds.linalg import FieldMatrix, hstack


def corpus(include_non_mds=True):
    codes = []
    for q in (4, 5, 7, 8, 9):
        ctx = field_of_order(q)
        for r in range(2, min(q - 1, 5) + 1):
            codes.append(code_from_rows(ctx, RowSelection(0, r, 1)))
            codes.append(extend_two_columns(code_from_rows(ctx, RowSelection(1, r, 1))))
        if q % 2 == 0:
            codes.append(extend_identity_columns_dim3(ctx))
        elif include_non_mds:
            A = select_rows(fourier_matrix(ctx), RowSelection(0, 3, 1))
            codes.append(LinearCode(hstack(FieldMatrix.identity(ctx, 3), A)))  # not MDS for odd q
    return codes
