"""Exact rational matrices and vectors.

Scalars are `fractions.Fraction` throughout: always in lowest terms,
positive denominator, no rounding anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ShapeMismatch, Singular

Vector = tuple[Fraction, ...]


def frac(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def vec(values: Iterable) -> Vector:
    return tuple(frac(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def basis_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def vec_add(x: Vector, y: Vector) -> Vector:
    if len(x) != len(y):
        raise ShapeMismatch(f"vector lengths {len(x)} and {len(y)} differ")
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x: Vector, y: Vector) -> Vector:
    if len(x) != len(y):
        raise ShapeMismatch(f"vector lengths {len(x)} and {len(y)} differ")
    return tuple(a - b for a, b in zip(x, y))


def vec_scale(c, x: Vector) -> Vector:
    c = frac(c)
    return tuple(c * a for a in x)


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix over the rationals."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ShapeMismatch(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "Matrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        flat = []
        for row in rows:
            if len(row) != ncols:
                raise ShapeMismatch("ragged rows")
            flat.extend(frac(v) for v in row)
        return Matrix(nrows, ncols, tuple(flat))

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(n, n, tuple(Fraction(1 if i == j else 0)
                                  for i in range(n) for j in range(n)))

    @staticmethod
    def zero(rows: int, cols: int) -> "Matrix":
        return Matrix(rows, cols, (Fraction(0),) * (rows * cols))

    @staticmethod
    def diagonal(values: Sequence) -> "Matrix":
        n = len(values)
        return Matrix(n, n, tuple(frac(values[i]) if i == j else Fraction(0)
                                  for i in range(n) for j in range(n)))

    def get(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def apply(self, x: Vector) -> Vector:
        if len(x) != self.cols:
            raise ShapeMismatch(f"cannot apply {self.rows}x{self.cols} to length-{len(x)}")
        return tuple(sum((self.get(i, j) * x[j] for j in range(self.cols)),
                         Fraction(0))
                     for i in range(self.rows))

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == Matrix.identity(self.rows)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.rows:
        raise ShapeMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    entries = []
    for i in range(a.rows):
        for j in range(b.cols):
            entries.append(sum((a.get(i, k) * b.get(k, j) for k in range(a.cols)),
                               Fraction(0)))
    return Matrix(a.rows, b.cols, tuple(entries))


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise ShapeMismatch("matrix shapes differ")
    return Matrix(a.rows, a.cols, tuple(x + y for x, y in zip(a.entries, b.entries)))


def mat_scale(c, a: Matrix) -> Matrix:
    c = frac(c)
    return Matrix(a.rows, a.cols, tuple(c * x for x in a.entries))


def mat_inverse(a: Matrix) -> Matrix:
    """Exact inverse by Gaussian elimination.

    Pivot rule: first nonzero entry in row order, for deterministic
    elimination and reproducible failure points.
    """
    if a.rows != a.cols:
        raise ShapeMismatch("only square matrices invert")
    n = a.rows
    work = [list(a.row(i)) for i in range(n)]
    inv = [list(Matrix.identity(n).row(i)) for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            raise Singular(f"matrix is singular at column {col}")
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            inv[col], inv[pivot] = inv[pivot], inv[col]
        scale = work[col][col]
        work[col] = [v / scale for v in work[col]]
        inv[col] = [v / scale for v in inv[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [v - factor * w for v, w in zip(work[r], work[col])]
                inv[r] = [v - factor * w for v, w in zip(inv[r], inv[col])]
    return Matrix.from_rows(inv)


def mats_commute(a: Matrix, b: Matrix) -> bool:
    if a.rows != a.cols or b.rows != b.cols or a.rows != b.rows:
        raise ShapeMismatch("commutation needs square matrices of equal size")
    return mat_mul(a, b) == mat_mul(b, a)
