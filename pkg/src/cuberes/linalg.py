"""Dense exact matrices over Q and a fraction-free determinant."""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import IndexOutOfRange, NotSquare

__all__ = ["Matrix", "determinant", "submatrix"]


@dataclass(frozen=True)
class Matrix:
    """Row-major matrix of :class:`Fraction` entries.

    A 0x0 matrix is allowed; its determinant is 1.
    """

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )
        object.__setattr__(self, "entries", tuple(Fraction(x) for x in self.entries))

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n):
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r * self.cols + c]

    def row(self, r):
        return self.entries[r * self.cols : (r + 1) * self.cols]

    def to_rows(self):
        return [list(self.row(r)) for r in range(self.rows)]

    def transpose(self):
        return Matrix(
            self.cols,
            self.rows,
            tuple(self[r, c] for c in range(self.cols) for r in range(self.rows)),
        )

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = [other.entries[c :: other.cols] for c in range(other.cols)]
        out = []
        for r in range(self.rows):
            row = self.row(r)
            out.extend(sum(a * b for a, b in zip(row, col)) for col in cols)
        return Matrix(self.rows, other.cols, tuple(out))

    def swap_rows(self, i, j):
        rows = self.to_rows()
        rows[i], rows[j] = rows[j], rows[i]
        return Matrix(self.rows, self.cols, tuple(x for r in rows for x in r))


def determinant(m):
    """Exact determinant by single-step Bareiss elimination.

    Each row is first scaled to integers by the lcm of its denominators; the
    accumulated scale is divided out at the end.  Pivots are the first
    nonzero entry at or below the diagonal.
    """
    if m.rows != m.cols:
        raise NotSquare(f"{m.rows}x{m.cols} matrix has no determinant")
    n = m.rows
    if n == 0:
        return Fraction(1)

    a = []
    scale = 1
    for r in range(n):
        row = m.row(r)
        den = lcm(*(x.denominator for x in row))
        scale *= den
        a.append([x.numerator * (den // x.denominator) for x in row])

    sign = 1
    prev = 1
    for k in range(n - 1):
        pivot = next((r for r in range(k, n) if a[r][k]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        row_k = a[k]
        akk = row_k[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            if aik:
                for j in range(k + 1, n):
                    row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            else:
                # aik == 0 row update reduces to a pure rescale
                for j in range(k + 1, n):
                    row_i[j] = row_i[j] * akk // prev
            row_i[k] = 0
        prev = akk
    return Fraction(sign * a[n - 1][n - 1], scale)


def submatrix(m, row_keep, col_keep):
    """Rows and columns in ``row_keep``/``col_keep``, original order preserved."""
    rows = sorted(set(row_keep))
    cols = sorted(set(col_keep))
    for r in rows:
        if not 0 <= r < m.rows:
            raise IndexOutOfRange(f"row {r} out of range for {m.rows} rows")
    for c in cols:
        if not 0 <= c < m.cols:
            raise IndexOutOfRange(f"column {c} out of range for {m.cols} columns")
    return Matrix(len(rows), len(cols), tuple(m[r, c] for r in rows for c in cols))
