"""Exact dense linear algebra over GF(2^r).

Matrices are immutable tuples of row tuples of ints.  The field is passed
explicitly to any operation that multiplies entries; addition of entries is
xor and needs no field.  Nothing here is numerical: every operation is exact.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator

from .gf2r import Field

Mat = tuple[tuple[int, ...], ...]


class SingularMatrixError(ValueError):
    pass


def identity(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(a: Mat) -> Mat:
    return tuple(zip(*a))


def mat_add(a: Mat, b: Mat) -> Mat:
    if len(a) != len(b) or len(a[0]) != len(b[0]):
        raise ValueError("dimension mismatch in matrix sum")
    return tuple(tuple(x ^ y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _dot(mul, row, col) -> int:
    s = 0
    for x, y in zip(row, col):
        if x and y:
            s ^= mul(x, y)
    return s


def mat_mul(field: Field, a: Mat, b: Mat) -> Mat:
    if len(a[0]) != len(b):
        raise ValueError(f"dimension mismatch: {len(a[0])} columns vs {len(b)} rows")
    mul = field.mul
    cols = tuple(zip(*b))
    return tuple(tuple(_dot(mul, row, col) for col in cols) for row in a)


def mat_vec(field: Field, a: Mat, x: tuple[int, ...]) -> tuple[int, ...]:
    if len(a[0]) != len(x):
        raise ValueError("dimension mismatch in matrix-vector product")
    mul = field.mul
    return tuple(_dot(mul, row, x) for row in a)


def mat_trace(a: Mat) -> int:
    if len(a) != len(a[0]):
        raise ValueError("trace of a non-square matrix")
    t = 0
    for i in range(len(a)):
        t ^= a[i][i]
    return t


def mat_inv(field: Field, a: Mat) -> Mat:
    """Inverse by Gauss-Jordan elimination; raises SingularMatrixError."""
    n = len(a)
    if n != len(a[0]):
        raise ValueError("inverse of a non-square matrix")
    mul, inv = field.mul, field.inv
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        if p != 1:
            pi = inv(p)
            aug[col] = [mul(pi, v) for v in aug[col]]
        prow = aug[col]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x ^ mul(f, y) for x, y in zip(aug[r], prow)]
    return tuple(tuple(row[n:]) for row in aug)


def is_invertible(field: Field, a: Mat) -> bool:
    """Forward elimination only; detects singularity without building an inverse."""
    n = len(a)
    if n != len(a[0]):
        return False
    mul, inv = field.mul, field.inv
    rows = [list(r) for r in a]
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col]), None)
        if piv is None:
            return False
        rows[col], rows[piv] = rows[piv], rows[col]
        pi = inv(rows[col][col])
        prow = rows[col]
        for r in range(col + 1, n):
            if rows[r][col]:
                f = mul(rows[r][col], pi)
                rows[r] = [x ^ mul(f, y) for x, y in zip(rows[r], prow)]
    return True


def is_alternating(a: Mat) -> bool:
    """Zero diagonal and symmetric off-diagonal (characteristic-2 alternating)."""
    n = len(a)
    if n != len(a[0]):
        raise ValueError("alternating test on a non-square matrix")
    for i in range(n):
        if a[i][i]:
            return False
        for j in range(i + 1, n):
            if a[i][j] != a[j][i]:
                return False
    return True


def all_matrices(field: Field, rows: int, cols: int) -> Iterator[Mat]:
    """All rows x cols matrices in lexicographic order of flattened entries."""
    q = field.q
    for entries in product(range(q), repeat=rows * cols):
        yield tuple(entries[i * cols:(i + 1) * cols] for i in range(rows))


def gl_iter(field: Field, n: int) -> Iterator[Mat]:
    """All invertible n x n matrices, in the all_matrices order."""
    for a in all_matrices(field, n, n):
        if is_invertible(field, a):
            yield a
