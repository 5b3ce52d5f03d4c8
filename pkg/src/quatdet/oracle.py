"""Independent verification paths for the determinant and solver stack.

Two oracles, deliberately sharing no code with the permutation-sum
functionals:

* the 2n x 2n complex embedding: each quaternion w+xi+yj+zk becomes the
  2x2 block [[w+xi, y+zi], [-y+zi, w-xi]] over Q(i); the exact determinant
  of the embedded matrix equals ddet of the original.  (Several equivalent
  embedding conventions exist; this one is fixed here and ddet does not
  depend on the choice, though intermediate matrices do.)
* quaternionic Gauss-Jordan elimination, valid because H is a division
  ring: rows are left-multiplied by pivot inverses, so it solves right
  systems A x = y and produces two-sided inverses.

The embedded determinant runs Bareiss-style fraction-free elimination over
the Gaussian integers after clearing denominators, which bounds coefficient
growth; every division it performs is exact by construction.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .errors import InternalCheckError, NonSquareError, ShapeMismatchError, SingularMatrixError
from .matrix import QMatrix
from .scalar import Quaternion, as_quaternion


class GaussianRational:
    """An element re + im*i of Q(i), with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", re if isinstance(re, Fraction) else Fraction(re))
        object.__setattr__(self, "im", im if isinstance(im, Fraction) else Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __add__(self, other):
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        return GaussianRational(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)

    def __truediv__(self, other):
        n = other.re * other.re + other.im * other.im
        if not n:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational((self.re * other.re + self.im * other.im) / n,
                                (self.im * other.re - self.re * other.im) / n)

    def conj(self):
        return GaussianRational(self.re, -self.im)

    def is_zero(self):
        return not (self.re or self.im)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"


class CMatrix:
    """A dense matrix over Q(i); just enough surface for the oracle."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(e if isinstance(e, GaussianRational) else GaussianRational(e)
                        for e in entries)
        if len(entries) != rows * cols:
            raise ShapeMismatchError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("CMatrix is immutable")

    def __getitem__(self, key):
        i, j = key
        return self.entries[(i - 1) * self.cols + (j - 1)]

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ShapeMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            arow = self.entries[i * self.cols:(i + 1) * self.cols]
            for j in range(other.cols):
                bcol = other.entries[j::other.cols]
                acc = GaussianRational(0)
                for a, b in zip(arow, bcol):
                    acc = acc + a * b
                out.append(acc)
        return CMatrix(self.rows, other.cols, out)

    def conj_transpose(self):
        out = [self.entries[r * self.cols + c].conj()
               for c in range(self.cols) for r in range(self.rows)]
        return CMatrix(self.cols, self.rows, out)

    def __eq__(self, other):
        if not isinstance(other, CMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"CMatrix({self.rows}x{self.cols})"


def complex_embed(A: QMatrix) -> CMatrix:
    """Tile each entry into its 2x2 complex block, preserving entry order."""
    m, n = A.rows, A.cols
    out = [GaussianRational(0)] * (2 * m * 2 * n)
    width = 2 * n
    for r in range(m):
        for c in range(n):
            q = A.entries[r * n + c]
            top, left = 2 * r, 2 * c
            out[top * width + left] = GaussianRational(q.w, q.x)
            out[top * width + left + 1] = GaussianRational(q.y, q.z)
            out[(top + 1) * width + left] = GaussianRational(-q.y, q.z)
            out[(top + 1) * width + left + 1] = GaussianRational(q.w, -q.x)
    return CMatrix(2 * m, 2 * n, out)


def _gauss_int_div(num, den):
    """Exact division in Z[i]; Bareiss guarantees the quotient is integral."""
    a, b = num
    c, d = den
    n = c * c + d * d
    re, re_rem = divmod(a * c + b * d, n)
    im, im_rem = divmod(b * c - a * d, n)
    if re_rem or im_rem:
        raise InternalCheckError("non-exact division in fraction-free elimination")
    return (re, im)


def complex_det(M: CMatrix) -> GaussianRational:
    """Exact determinant over Q(i) by fraction-free (Bareiss) elimination.

    Denominators are cleared row by row first, so the elimination itself
    runs over the Gaussian integers; a singular matrix yields exactly 0.
    """
    if M.rows != M.cols:
        raise NonSquareError(f"determinant of a {M.rows}x{M.cols} matrix")
    n = M.rows
    scale = 1  # product of the row multipliers, divided back out at the end
    grid = []
    for r in range(n):
        row = M.entries[r * n:(r + 1) * n]
        mult = lcm(*(f.denominator for e in row for f in (e.re, e.im)))
        scale *= mult
        grid.append([(int(e.re * mult), int(e.im * mult)) for e in row])

    sign = 1
    prev = (1, 0)
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if any(grid[r][col])), None)
        if pivot_row is None:
            return GaussianRational(0)
        if pivot_row != col:
            grid[col], grid[pivot_row] = grid[pivot_row], grid[col]
            sign = -sign
        piv = grid[col][col]
        for r in range(col + 1, n):
            head = grid[r][col]
            for c in range(col + 1, n):
                a, b = grid[r][c]
                p, q = piv
                h, k = head
                u, v = grid[col][c]
                num = (a * p - b * q - (h * u - k * v),
                       a * q + b * p - (h * v + k * u))
                grid[r][c] = _gauss_int_div(num, prev)
            grid[r][col] = (0, 0)
        prev = piv
    re, im = grid[n - 1][n - 1]
    return GaussianRational(Fraction(sign * re, scale), Fraction(sign * im, scale))


# -- quaternionic elimination -------------------------------------------------


def _eliminate(A: QMatrix, augment):
    """Gauss-Jordan on [A | augment] with left row multiplications.

    Pivot choice is the first row with a nonzero entry, in column order; no
    magnitude pivoting, exact arithmetic needs none.  Returns the reduced
    augment block; raises SingularMatrixError when some column has no pivot.
    """
    n = A.rows
    width = len(augment[0])
    rows = [list(A.row(i)) + list(aug) for i, aug in zip(range(1, n + 1), augment)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if not rows[r][col].is_zero()), None)
        if pivot_row is None:
            raise SingularMatrixError(
                f"elimination found no pivot in column {col + 1}", certificate=0)
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
        pinv = rows[col][col].inverse()
        rows[col] = [pinv * v for v in rows[col]]
        for r in range(n):
            if r == col or rows[r][col].is_zero():
                continue
            factor = rows[r][col]
            rows[r] = [v - factor * w for v, w in zip(rows[r], rows[col])]
    return [row[n:n + width] for row in rows]


def gauss_solve_right(A: QMatrix, y) -> tuple[Quaternion, ...]:
    """Exact solution of the right system A x = y by elimination."""
    if A.rows != A.cols:
        raise NonSquareError(f"square system required, got {A.rows}x{A.cols}")
    y = [as_quaternion(v) for v in y]
    if len(y) != A.rows:
        raise ShapeMismatchError(f"rhs has length {len(y)}, expected {A.rows}")
    solution = _eliminate(A, [[v] for v in y])
    return tuple(row[0] for row in solution)


def gauss_inverse(A: QMatrix) -> QMatrix:
    """Exact two-sided inverse by eliminating [A | I]."""
    if A.rows != A.cols:
        raise NonSquareError(f"square matrix required, got {A.rows}x{A.cols}")
    n = A.rows
    eye = QMatrix.identity(n)
    block = _eliminate(A, [list(eye.row(i)) for i in range(1, n + 1)])
    return QMatrix(n, n, [v for row in block for v in row])
