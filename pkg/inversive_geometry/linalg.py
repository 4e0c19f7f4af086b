"""Exact linear algebra over a Field, on numpy object arrays of FieldElement.

Gaussian elimination never divides by anything but a pivot, so every result is
exact for the rationals, prime fields and quadratic extensions alike.
"""
from typing import Iterable, List, Optional, Sequence, Tuple
import logging

import numpy as np

from inversive_geometry.field_core import Field

logger = logging.getLogger(__name__)


def to_matrix(field: Field, rows: Iterable[Iterable], n_cols: Optional[int] = None) -> np.ndarray:
    """Object array of field elements; ``n_cols`` is needed only for zero rows."""
    rows = [[field(x) for x in row] for row in rows]
    if n_cols is None:
        n_cols = len(rows[0]) if rows else 0
    matrix = np.empty((len(rows), n_cols), dtype=object)
    for i, row in enumerate(rows):
        if len(row) != n_cols:
            raise ValueError("ragged matrix rows")
        for j, x in enumerate(row):
            matrix[i, j] = x
    return matrix


def _width(matrix) -> Optional[int]:
    if isinstance(matrix, np.ndarray):
        return matrix.shape[1]
    return len(matrix[0]) if len(matrix) else None


def to_vector(field: Field, values: Iterable) -> np.ndarray:
    values = [field(x) for x in values]
    vector = np.empty(len(values), dtype=object)
    for i, x in enumerate(values):
        vector[i] = x
    return vector


def identity(field: Field, n: int) -> np.ndarray:
    return to_matrix(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])


def rref(field: Field, matrix) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = to_matrix(field, matrix, n_cols=_width(matrix))
    n_rows, n_cols = m.shape
    pivots = []
    piv_r = 0
    for piv_c in range(n_cols):
        if piv_r == n_rows:
            break
        for i_row in range(piv_r, n_rows):
            if m[i_row, piv_c]:
                break
        else:
            continue
        if i_row != piv_r:
            m[[piv_r, i_row]] = m[[i_row, piv_r]]
        m[piv_r] = m[piv_r] * m[piv_r, piv_c].inverse()
        for r in range(n_rows):
            if r != piv_r and m[r, piv_c]:
                m[r] = m[r] - m[piv_r] * m[r, piv_c]
        pivots.append(piv_c)
        piv_r += 1
    return m, pivots


def rank(field: Field, matrix) -> int:
    return len(rref(field, matrix)[1])


def nullspace(field: Field, matrix, n_cols: Optional[int] = None) -> List[np.ndarray]:
    """Basis of {x : matrix @ x = 0}, one vector per free column in column order."""
    if n_cols is None:
        n_cols = _width(matrix)
    if len(matrix) == 0:
        return [to_vector(field, identity(field, n_cols)[i]) for i in range(n_cols)]
    reduced, pivots = rref(field, to_matrix(field, matrix, n_cols=n_cols))
    basis = []
    for free in range(n_cols):
        if free in pivots:
            continue
        x = to_vector(field, [0] * n_cols)
        x[free] = field.one
        for row, pivot in enumerate(pivots):
            x[pivot] = -reduced[row, free]
        basis.append(x)
    return basis


def determinant(field: Field, matrix) -> "FieldElement":
    m = to_matrix(field, matrix)
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError("determinant of a non-square matrix")
    det = field.one
    for col in range(n):
        for pivot in range(col, n):
            if m[pivot, col]:
                break
        else:
            return field.zero
        if pivot != col:
            m[[col, pivot]] = m[[pivot, col]]
            det = -det
        det = det * m[col, col]
        inv = m[col, col].inverse()
        for r in range(col + 1, n):
            if m[r, col]:
                m[r] = m[r] - m[col] * (m[r, col] * inv)
    return det


def solve(field: Field, matrix, rhs: Sequence) -> Optional[np.ndarray]:
    """One solution of matrix @ x = rhs (free variables set to 0), or None."""
    m = to_matrix(field, matrix)
    n_rows, n_cols = m.shape
    augmented = to_matrix(
        field, [list(m[i]) + [rhs[i]] for i in range(n_rows)], n_cols=n_cols + 1
    )
    reduced, pivots = rref(field, augmented)
    if n_cols in pivots:
        return None
    x = to_vector(field, [0] * n_cols)
    for row, pivot in enumerate(pivots):
        x[pivot] = reduced[row, n_cols]
    return x


def inverse(field: Field, matrix) -> np.ndarray:
    m = to_matrix(field, matrix)
    n = m.shape[0]
    eye = identity(field, n)
    augmented = to_matrix(field, [list(m[i]) + list(eye[i]) for i in range(n)])
    reduced, pivots = rref(field, augmented)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return reduced[:, n:]


def matrices_equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))
