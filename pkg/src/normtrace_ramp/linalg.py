"""Exact dense linear algebra over a finite field.

Vectors are sequences of element indices and matrices are lists of row
vectors.  Everything reduces to Gaussian elimination through the field's
arithmetic, so results are exact; no floating point is involved anywhere.
"""

from __future__ import annotations

from .errors import ValidationError
from .field import Field


def _copy(rows) -> list[list[int]]:
    return [list(r) for r in rows]


def rref(field: Field, rows) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot columns)."""
    R = _copy(rows)
    if not R:
        return [], []
    ncols = len(R[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(R)) if R[i][c]), None)
        if pivot_row is None:
            continue
        R[r], R[pivot_row] = R[pivot_row], R[r]
        inv = field.inv(R[r][c])
        if inv != 1:
            R[r] = [field.mul(inv, v) for v in R[r]]
        base = R[r]
        for i in range(len(R)):
            f = R[i][c]
            if i != r and f:
                row = R[i]
                R[i] = [field.sub(row[k], field.mul(f, base[k])) for k in range(ncols)]
        pivots.append(c)
        r += 1
        if r == len(R):
            break
    return R, pivots


def rank(field: Field, rows) -> int:
    """Rank by forward elimination (no normalization, no back-substitution)."""
    R = _copy(rows)
    if not R or not R[0]:
        return 0
    ncols = len(R[0])
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(R)) if R[i][c]), None)
        if pivot_row is None:
            continue
        R[r], R[pivot_row] = R[pivot_row], R[r]
        base = R[r]
        binv = field.inv(base[c])
        for i in range(r + 1, len(R)):
            f = R[i][c]
            if f:
                scale = field.mul(f, binv)
                row = R[i]
                R[i] = [field.sub(row[k], field.mul(scale, base[k])) for k in range(ncols)]
        r += 1
        if r == len(R):
            break
    return r


def ref_with_transform(field: Field, rows) -> tuple[list[list[int]], list[list[int]], list[int]]:
    """Row echelon form R with a transform T such that T * rows = R.

    Pivots are normalized to 1 and elimination runs below the pivot only,
    so rows keep their echelon staircase.  Returns (R, T, pivot columns);
    pivot k belongs to row k, any remaining rows of R are zero.
    """
    m = len(rows)
    R = _copy(rows)
    T = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    if not R:
        return [], [], []
    ncols = len(R[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, m) if R[i][c]), None)
        if pivot_row is None:
            continue
        R[r], R[pivot_row] = R[pivot_row], R[r]
        T[r], T[pivot_row] = T[pivot_row], T[r]
        inv = field.inv(R[r][c])
        if inv != 1:
            R[r] = [field.mul(inv, v) for v in R[r]]
            T[r] = [field.mul(inv, v) for v in T[r]]
        for i in range(r + 1, m):
            f = R[i][c]
            if f:
                R[i] = [field.sub(R[i][k], field.mul(f, R[r][k])) for k in range(ncols)]
                T[i] = [field.sub(T[i][k], field.mul(f, T[r][k])) for k in range(m)]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return R, T, pivots


def nullspace(field: Field, rows, width: int) -> list[list[int]]:
    """Basis of {v : row . v = 0 for every row}, one vector per free column."""
    R, pivots = rref(field, rows) if rows else ([], [])
    pivot_set = set(pivots)
    basis = []
    for free in range(width):
        if free in pivot_set:
            continue
        v = [0] * width
        v[free] = 1
        for row, pc in zip(R, pivots):
            v[pc] = field.neg(row[free])
        basis.append(v)
    return basis


def transpose(rows) -> list[list[int]]:
    return [list(col) for col in zip(*rows)]


def left_kernel(field: Field, rows) -> list[list[int]]:
    """Basis of {z : z * rows = 0}."""
    if not rows:
        return []
    cols = transpose(rows)
    return nullspace(field, cols, len(rows))


def columns(rows, indices) -> list[list[int]]:
    """Restriction of every row to the given column indices."""
    idx = list(indices)
    return [[row[i] for i in idx] for row in rows]


def row_combination(field: Field, coeffs, rows) -> list[int]:
    """The vector sum of coeffs[i] * rows[i]."""
    if not rows:
        return []
    out = [0] * len(rows[0])
    for c, row in zip(coeffs, rows):
        if c:
            out = [field.add(o, field.mul(c, v)) for o, v in zip(out, row)]
    return out


def dot(field: Field, u, v) -> int:
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc = field.add(acc, field.mul(a, b))
    return acc


def matrix_inverse(field: Field, rows) -> list[list[int]]:
    n = len(rows)
    aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(rows)]
    R, pivots = rref(field, aug)
    if pivots != list(range(n)):
        raise ValidationError("matrix is singular")
    return [r[n:] for r in R]


def vec_matrix(field: Field, vec, matrix) -> list[int]:
    """Row vector times matrix."""
    return row_combination(field, vec, matrix)


def solve_left(field: Field, rows, target) -> list[int] | None:
    """One z with z * rows = target, or None when inconsistent.

    Free coordinates of z are set to zero.
    """
    k = len(rows)
    if k == 0:
        return [] if not any(target) else None
    n = len(rows[0])
    aug = [[rows[i][c] for i in range(k)] + [target[c]] for c in range(n)]
    R, pivots = rref(field, aug)
    if k in pivots:
        return None
    z = [0] * k
    for row, pc in zip(R, pivots):
        z[pc] = row[k]
    return z
