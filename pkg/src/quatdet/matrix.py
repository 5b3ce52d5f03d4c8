"""Dense quaternion matrices with value semantics.

All public row/column indices are 1-based, matching the usual mathematical
convention, so worked examples transfer without off-by-one bookkeeping.
Matrices are immutable: structural edits (replace a row/column, delete a
row and column) return fresh matrices and never touch their input, which
lets the determinant formulas compose many edits of one base matrix.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import IndexRangeError, NonSquareError, ShapeMismatchError
from .scalar import Quaternion, as_quaternion

FLOAT_TOL = 1e-9


def _coerce_entries(values) -> tuple[Quaternion, ...]:
    entries = tuple(as_quaternion(v) for v in values)
    # one float entry makes the whole matrix a float-backend matrix
    if any(not q.is_exact for q in entries) and any(q.is_exact for q in entries):
        entries = tuple(q.to_float() for q in entries)
    return entries


class QMatrix:
    """An m x n matrix of quaternions, stored row-major, indexed from 1."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        if rows < 1 or cols < 1:
            raise ShapeMismatchError(f"matrix shape must be positive, got {rows}x{cols}")
        coerced = _coerce_entries(entries)
        if len(coerced) != rows * cols:
            raise ShapeMismatchError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(coerced)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", coerced)

    def __setattr__(self, name, value):
        raise AttributeError("QMatrix is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "QMatrix":
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ShapeMismatchError("from_rows needs at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ShapeMismatchError("ragged rows")
        return cls(len(rows), width, [v for r in rows for v in r])

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(n, n, [1 if r == c else 0 for r in range(n) for c in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def diag(cls, *values) -> "QMatrix":
        n = len(values)
        return cls(n, n, [values[r] if r == c else 0 for r in range(n) for c in range(n)])

    @classmethod
    def column(cls, values) -> "QMatrix":
        values = list(values)
        return cls(len(values), 1, values)

    # -- access ------------------------------------------------------------

    def _check(self, i: int, j: int):
        if not 1 <= i <= self.rows:
            raise IndexRangeError(f"row index {i} out of range 1..{self.rows}")
        if not 1 <= j <= self.cols:
            raise IndexRangeError(f"column index {j} out of range 1..{self.cols}")

    def __getitem__(self, key) -> Quaternion:
        i, j = key
        self._check(i, j)
        return self.entries[(i - 1) * self.cols + (j - 1)]

    def row(self, i: int) -> tuple[Quaternion, ...]:
        self._check(i, 1)
        start = (i - 1) * self.cols
        return self.entries[start:start + self.cols]

    def col(self, j: int) -> tuple[Quaternion, ...]:
        self._check(1, j)
        return self.entries[j - 1::self.cols]

    def to_rows(self) -> list[list[Quaternion]]:
        return [list(self.row(i)) for i in range(1, self.rows + 1)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_exact(self) -> bool:
        return self.entries[0].is_exact

    def to_float(self) -> "QMatrix":
        return QMatrix(self.rows, self.cols, [q.to_float() for q in self.entries])

    # -- algebra -----------------------------------------------------------

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if not isinstance(other, QMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            arow = self.entries[i * self.cols:(i + 1) * self.cols]
            for j in range(other.cols):
                bcol = other.entries[j::other.cols]
                acc = Quaternion(0)
                for a, b in zip(arow, bcol):
                    acc = acc + a * b  # factor order matters over H
                out.append(acc)
        return QMatrix(self.rows, other.cols, out)

    def matmul(self, other: "QMatrix") -> "QMatrix":
        return self @ other

    def conj_transpose(self) -> "QMatrix":
        out = [self.entries[r * self.cols + c].conj()
               for c in range(self.cols) for r in range(self.rows)]
        return QMatrix(self.cols, self.rows, out)

    def is_hermitian(self, tol: float | None = None) -> bool:
        """a[i][j] == conj(a[j][i]) for all i, j (implies a real diagonal).

        Exact matrices compare exactly; float matrices componentwise within
        ``tol`` (default 1e-9), which is documented as approximate.
        """
        if not self.is_square:
            raise NonSquareError("hermiticity is defined for square matrices only")
        if tol is None:
            tol = None if self.is_exact else FLOAT_TOL
        for i in range(1, self.rows + 1):
            for j in range(i, self.cols + 1):
                a, b = self[i, j], self[j, i].conj()
                if tol is None:
                    if a != b:
                        return False
                elif any(abs(p - q) > tol for p, q in zip(a.components(), b.components())):
                    return False
        return True

    # -- structural edits (all pure) ----------------------------------------

    def _replaced(self, flat_index_of, values, count, what):
        values = tuple(as_quaternion(v) for v in values)
        if len(values) != count:
            raise ShapeMismatchError(
                f"replacement {what} has length {len(values)}, expected {count}")
        entries = list(self.entries)
        for t, v in enumerate(values):
            entries[flat_index_of(t)] = v
        return QMatrix(self.rows, self.cols, entries)

    def replace_row(self, i: int, b) -> "QMatrix":
        self._check(i, 1)
        return self._replaced(lambda t: (i - 1) * self.cols + t, b, self.cols, "row")

    def replace_column(self, j: int, b) -> "QMatrix":
        self._check(1, j)
        return self._replaced(lambda t: t * self.cols + (j - 1), b, self.rows, "column")

    def delete_row_col(self, i: int, j: int) -> "QMatrix":
        if self.rows < 2 or self.cols < 2:
            raise ShapeMismatchError("cannot delete from a matrix with a single row or column")
        self._check(i, j)
        out = [self.entries[r * self.cols + c]
               for r in range(self.rows) if r != i - 1
               for c in range(self.cols) if c != j - 1]
        return QMatrix(self.rows - 1, self.cols - 1, out)

    def corresponding_hermitian(self, side: str) -> "QMatrix":
        """A*A for side="left" (n x n) or AA* for side="right" (m x m)."""
        if side == "left":
            return self.conj_transpose() @ self
        if side == "right":
            return self @ self.conj_transpose()
        raise ValueError(f'side must be "left" or "right", got {side!r}')

    # -- value semantics -----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(", ".join(str(q) for q in self.row(i))
                         for i in range(1, self.rows + 1))
        return f"QMatrix({self.rows}x{self.cols}: {body})"
