"""Left-circulant matrices over Q(zeta_p) and exact dense linear algebra.

A left-circulant matrix is determined by its first row a = (a_0, ...,
a_{n-1}); row i is a rotated left by i steps, so entry (i, j) equals
a_{(i+j) mod n}.  Such matrices are symmetric, and the inverse of an
invertible real one is again left-circulant.

Determinants and inverses are computed by exact Gaussian elimination with
full pivoting over the cyclotomic coefficient field (any nonzero pivot is
exact, so "full" pivoting just scans the remaining submatrix); matrix
sizes here are at most a few dozen, so cubic elimination with rational
arithmetic is fine.  :func:`det_eigen` provides the independent numeric
route through the root-of-unity product formula

    det A = (-1)^((n-1)(n-2)/2) * prod_l f(theta_l),

with f(x) = sum_r a_r x^r and theta_l ranging over the n-th roots of
unity.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .cyclotomic import CycloNum
from .errors import SingularMatrixError

__all__ = [
    "LeftCirculant",
    "det_exact",
    "det_eigen",
    "invert_exact",
    "row_sum_reciprocal_check",
    "RowSumReport",
    "xy_det",
    "gauss_det",
    "gauss_solve",
    "gauss_invert",
    "mat_mul",
]

Matrix = list[list[CycloNum]]


# ---------------------------------------------------------------------------
# generic exact elimination on small dense matrices


def _find_pivot(work: Matrix, k: int) -> tuple[int, int] | None:
    n = len(work)
    for i in range(k, n):
        for j in range(k, n):
            if not work[i][j].is_zero():
                return i, j
    return None


def gauss_det(rows: Matrix) -> CycloNum:
    """Exact determinant by elimination with full pivoting."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    p = rows[0][0].p
    work = [list(r) for r in rows]
    sign = 1
    for k in range(n):
        pivot = _find_pivot(work, k)
        if pivot is None:
            return CycloNum.zero(p)
        pi, pj = pivot
        if pi != k:
            work[k], work[pi] = work[pi], work[k]
            sign = -sign
        if pj != k:
            for row in work:
                row[k], row[pj] = row[pj], row[k]
            sign = -sign
        inv_pivot = work[k][k].invert()
        for i in range(k + 1, n):
            if work[i][k].is_zero():
                continue
            factor = work[i][k] * inv_pivot
            for j in range(k + 1, n):
                work[i][j] = work[i][j] - factor * work[k][j]
    det = CycloNum.from_rational(sign, p)
    for k in range(n):
        det = det * work[k][k]
    return det


def gauss_solve(rows: Matrix, rhs: list[CycloNum]) -> list[CycloNum]:
    """Solve A x = b exactly; raises SingularMatrixError when det A = 0."""
    n = len(rows)
    if len(rhs) != n:
        raise ValueError("right-hand side length mismatch")
    work = [list(r) + [b] for r, b in zip(rows, rhs)]
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if not work[i][k].is_zero()), None)
        if pivot_row is None:
            raise SingularMatrixError("coefficient matrix is singular")
        if pivot_row != k:
            work[k], work[pivot_row] = work[pivot_row], work[k]
        inv_pivot = work[k][k].invert()
        for i in range(k + 1, n):
            if work[i][k].is_zero():
                continue
            factor = work[i][k] * inv_pivot
            for j in range(k, n + 1):
                work[i][j] = work[i][j] - factor * work[k][j]
    p = rows[0][0].p
    solution = [CycloNum.zero(p)] * n
    for k in range(n - 1, -1, -1):
        acc = work[k][n]
        for j in range(k + 1, n):
            acc = acc - work[k][j] * solution[j]
        solution[k] = acc * work[k][k].invert()
    return solution


def gauss_invert(rows: Matrix) -> Matrix:
    """Exact inverse via elimination on [A | I]."""
    n = len(rows)
    p = rows[0][0].p
    zero, one = CycloNum.zero(p), CycloNum.one(p)
    work = [
        list(r) + [one if i == j else zero for j in range(n)]
        for i, r in enumerate(rows)
    ]
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if not work[i][k].is_zero()), None)
        if pivot_row is None:
            raise SingularMatrixError("matrix is singular")
        if pivot_row != k:
            work[k], work[pivot_row] = work[pivot_row], work[k]
        inv_pivot = work[k][k].invert()
        work[k] = [entry * inv_pivot for entry in work[k]]
        for i in range(n):
            if i == k or work[i][k].is_zero():
                continue
            factor = work[i][k]
            work[i] = [a - factor * b for a, b in zip(work[i], work[k])]
    return [row[n:] for row in work]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, mid, cols = len(a), len(b), len(b[0])
    if len(a[0]) != mid:
        raise ValueError("inner dimensions do not match")
    p = a[0][0].p
    out = []
    for i in range(n):
        row = []
        for j in range(cols):
            acc = CycloNum.zero(p)
            for k in range(mid):
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


# ---------------------------------------------------------------------------
# left-circulant structure


@dataclass(frozen=True)
class LeftCirculant:
    """n x n left-circulant matrix of cyclotomic numbers, stored by first row."""

    first_row: tuple[CycloNum, ...]

    def __post_init__(self) -> None:
        if not self.first_row:
            raise ValueError("matrix must be at least 1 x 1")
        p = self.first_row[0].p
        if any(c.p != p for c in self.first_row):
            raise ValueError("all entries must share one conductor")

    @property
    def n(self) -> int:
        return len(self.first_row)

    @property
    def conductor(self) -> int:
        return self.first_row[0].p

    def entry(self, i: int, j: int) -> CycloNum:
        return self.first_row[(i + j) % self.n]

    def row(self, i: int) -> tuple[CycloNum, ...]:
        return self.first_row[i:] + self.first_row[:i]

    def rows(self) -> Matrix:
        return [list(self.row(i)) for i in range(self.n)]

    def row_sum(self) -> CycloNum:
        acc = CycloNum.zero(self.conductor)
        for c in self.first_row:
            acc = acc + c
        return acc


def det_exact(matrix: LeftCirculant) -> CycloNum:
    """Exact determinant (zero is a valid return)."""
    return gauss_det(matrix.rows())


def det_eigen(matrix: LeftCirculant) -> complex:
    """Root-of-unity product formula, evaluated in floating point."""
    n = matrix.n
    coeffs = [c.embed_complex() for c in matrix.first_row]
    det = complex(1.0)
    for ell in range(n):
        theta = cmath.exp(2j * cmath.pi * ell / n)
        det *= sum(c * theta**r for r, c in enumerate(coeffs))
    sign = -1 if ((n - 1) * (n - 2) // 2) % 2 else 1
    return sign * det


def invert_exact(matrix: LeftCirculant) -> LeftCirculant:
    """Exact inverse, returned in compressed left-circulant form.

    The full inverse is computed first and its left-circulant structure
    verified entry by entry before compressing to the first row.
    """
    inverse = gauss_invert(matrix.rows())
    n = matrix.n
    first_row = tuple(inverse[0])
    for i in range(1, n):
        for j in range(n):
            if inverse[i][j] != first_row[(i + j) % n]:
                raise AssertionError("inverse of a left-circulant lost circulant structure")
    return LeftCirculant(first_row)


@dataclass(frozen=True)
class RowSumReport:
    forward_sum: CycloNum
    inverse_sum: CycloNum
    reciprocal: bool


def row_sum_reciprocal_check(matrix: LeftCirculant) -> RowSumReport:
    """Check S' = 1/S for the first-row sums of M and M^(-1)."""
    s = matrix.row_sum()
    s_inv = invert_exact(matrix).row_sum()
    return RowSumReport(s, s_inv, reciprocal=(s * s_inv) == CycloNum.one(matrix.conductor))


def xy_det(n: int, x: CycloNum, y: CycloNum) -> CycloNum:
    """Closed-form determinant (x + (n-1) y) (x - y)^(n-1) of the matrix
    with x on the diagonal and y elsewhere."""
    if n < 1:
        raise ValueError("matrix size must be at least 1")
    return (x + (n - 1) * y) * (x - y) ** (n - 1)
