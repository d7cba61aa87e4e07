"""Exact dense linear algebra over Fraction: elimination, rank, determinants,
and canonical null-space bases.

Everything here is deterministic. kernel_basis returns the RREF-derived basis
(one vector per free column, free columns in ascending order), which downstream
code treats as *the* canonical basis; semantic assertions elsewhere only ever
use basis-invariant quantities.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InvalidInputError

ZERO = Fraction(0)
ONE = Fraction(1)


class Matrix:
    """Immutable-by-convention dense matrix of Fractions, row-major."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, cols: int | None = None):
        converted = tuple(tuple(Fraction(x) for x in row) for row in data)
        if converted:
            width = len(converted[0])
            if any(len(r) != width for r in converted):
                raise InvalidInputError("ragged matrix rows")
            if cols is not None and cols != width:
                raise InvalidInputError("cols does not match row width")
        else:
            width = 0 if cols is None else cols
        self.rows = len(converted)
        self.cols = width
        self.data = converted

    @classmethod
    def from_columns(cls, columns) -> "Matrix":
        cols = [tuple(col) for col in columns]
        if not cols:
            return cls([], cols=0)
        return cls(list(zip(*cols)), cols=len(cols))

    def entry(self, i: int, j: int) -> Fraction:
        return self.data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.data[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.data)

    def transpose(self) -> "Matrix":
        return Matrix.from_columns(self.data)

    def mul_vec(self, v) -> tuple[Fraction, ...]:
        if len(v) != self.cols:
            raise InvalidInputError("vector length does not match column count")
        return tuple(sum((a * b for a, b in zip(row, v)), ZERO) for row in self.data)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.data == other.data and self.cols == other.cols

    def __hash__(self):
        return hash((self.cols, self.data))

    def __repr__(self):
        return f"Matrix({[list(map(str, r)) for r in self.data]})"


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and the pivot column indices."""
    a = [list(r) for r in m.data]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        pivot_row = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        inv = a[r][c]
        a[r] = [x / inv for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return Matrix(a, cols=m.cols), tuple(pivots)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def det(m: Matrix) -> Fraction:
    """Determinant by Bareiss elimination (division-exact at every step)."""
    if m.rows != m.cols:
        raise InvalidInputError("determinant requires a square matrix")
    n = m.rows
    if n == 0:
        return ONE
    a = [list(r) for r in m.data]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return ZERO
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) / prev
            row_i[k] = ZERO
        prev = pivot
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def kernel_basis(m: Matrix) -> list[tuple[Fraction, ...]]:
    """Canonical right-null-space basis: one vector per free column of the RREF,
    with unit entry at its free column and zeros at the other free columns."""
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [ZERO] * m.cols
        v[free] = ONE
        for i, p in enumerate(pivots):
            v[p] = -reduced.data[i][free]
        basis.append(tuple(v))
    return basis
