"""Dense exact linear algebra over FieldScalar vectors and matrices.

Vectors are tuples of FieldScalar, matrices tuples of row tuples.  Sizes in
this package are tiny (dimension <= 4), so plain Gaussian elimination with
exact division is entirely adequate.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .field import FieldScalar

Vector = tuple[FieldScalar, ...]
Matrix = tuple[Vector, ...]


def vec(values: Sequence, d: int = 1) -> Vector:
    out = []
    for v in values:
        if isinstance(v, FieldScalar):
            out.append(v)
        else:
            out.append(FieldScalar(Fraction(v), 0, d))
    return tuple(out)


def vec_add(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y, strict=True))


def vec_sub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y, strict=True))


def vec_neg(x: Vector) -> Vector:
    return tuple(-a for a in x)


def vec_scale(c, x: Vector) -> Vector:
    return tuple(c * a for a in x)


def dot(x: Vector, y: Vector) -> FieldScalar:
    acc = None
    for a, b in zip(x, y, strict=True):
        term = a * b
        acc = term if acc is None else acc + term
    if acc is None:
        raise ValueError("dot product of empty vectors")
    return acc


def norm_sq(x: Vector) -> FieldScalar:
    return dot(x, x)


def mat_vec(m: Matrix, x: Vector) -> Vector:
    return tuple(dot(row, x) for row in m)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = tuple(zip(*b))
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def mat_col(m: Matrix, j: int) -> Vector:
    return tuple(row[j] for row in m)


def determinant(m: Matrix) -> FieldScalar:
    n = len(m)
    rows = [list(r) for r in m]
    det = FieldScalar(1)
    sign = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col].sign() != 0), None)
        if pivot is None:
            return FieldScalar(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            sign = -sign
        p = rows[col][col]
        det = det * p
        inv = p.inverse()
        for r in range(col + 1, n):
            factor = rows[r][col] * inv
            if factor.is_zero():
                continue
            rows[r] = [rows[r][k] - factor * rows[col][k] for k in range(n)]
    return det if sign == 1 else -det


def invert(m: Matrix) -> Matrix:
    n = len(m)
    aug = [list(row) + [FieldScalar(1) if i == j else FieldScalar(0) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if not aug[r][col].is_zero()), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r == col or aug[r][col].is_zero():
                continue
            factor = aug[r][col]
            aug[r] = [aug[r][k] - factor * aug[col][k] for k in range(2 * n)]
    return tuple(tuple(row[n:]) for row in aug)


def solve(m: Matrix, rhs: Vector) -> Vector:
    return mat_vec(invert(m), rhs)


def rational_kernel_dimension(m: Matrix) -> int:
    """Dimension over Q(sqrt(d)) of the kernel of m acting on column vectors."""
    rows = [list(r) for r in m]
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if not rows[r][col].is_zero()), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col].inverse()
        rows[rank] = [v * inv for v in rows[rank]]
        for r in range(n_rows):
            if r != rank and not rows[r][col].is_zero():
                factor = rows[r][col]
                rows[r] = [rows[r][k] - factor * rows[rank][k] for k in range(n_cols)]
        rank += 1
    return n_cols - rank
