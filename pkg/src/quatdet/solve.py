"""Cramer-rule solvers for right systems A x = y and left systems x A = y.

Over the quaternions the two kinds of system are genuinely different
problems with different solutions.  The general paths reduce to the
corresponding Hermitian matrices: for A x = y each component is

    x[j] = cdet_j((A*A) with column j replaced by f) / ddet(A),  f = A* y,

and for x A = y dually with rows, AA*, and z = y A*.  When A is itself
Hermitian and nonsingular there are fast paths that skip forming A*A and
divide by det(A) instead.

Division by the real denominator happens only at the last step; the report
keeps the raw numerators and the denominator so the Cramer structure stays
auditable: solution[t] * denominator == numerators[t] exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .det import cdet, ddet, hermitian_det, rdet
from .errors import NonHermitianError, NonSquareError, ShapeMismatchError, SingularMatrixError
from .matrix import QMatrix
from .scalar import Quaternion, as_quaternion


@dataclass(frozen=True)
class SolveReport:
    """A solved system plus its determinant certificate.

    ``ddet`` is the real denominator of the Cramer quotients: the double
    determinant on the general paths, det(A) on the Hermitian fast paths
    (for Hermitian A, ddet(A) == det(A)**2, so the two certificates
    convert into each other).
    """

    solution: tuple[Quaternion, ...]
    ddet: object
    numerators: tuple[Quaternion, ...]
    side: str  # "right" | "left"
    hermitian_fast_path: bool


def _as_vector(y, n: int) -> tuple[Quaternion, ...]:
    if isinstance(y, QMatrix):
        if 1 not in (y.rows, y.cols):
            raise ShapeMismatchError(f"right-hand side must be a vector, got {y.rows}x{y.cols}")
        y = y.entries
    vec = tuple(as_quaternion(v) for v in y)
    if len(vec) != n:
        raise ShapeMismatchError(f"right-hand side has length {len(vec)}, expected {n}")
    return vec


def _require_square(A: QMatrix) -> int:
    if A.rows != A.cols:
        raise NonSquareError(
            f"only square nonsingular systems are supported, got {A.rows}x{A.cols}")
    return A.rows


def _nonzero_or_raise(value, what: str):
    if not value:
        raise SingularMatrixError(f"singular system: {what} is zero", certificate=value)
    return value


def solve_right(A: QMatrix, y, *, max_enum: int | None = None) -> SolveReport:
    """Solve A x = y (unknowns multiplied on the right)."""
    n = _require_square(A)
    y = _as_vector(y, n)
    d = _nonzero_or_raise(ddet(A, max_enum=max_enum), "ddet")
    astar = A.conj_transpose()
    f = [sum((astar[i, k] * y[k - 1] for k in range(1, n + 1)), Quaternion(0))
         for i in range(1, n + 1)]
    h = astar @ A
    numerators = tuple(cdet(h.replace_column(j, f), j, max_enum=max_enum)
                       for j in range(1, n + 1))
    return SolveReport(tuple(num / d for num in numerators), d, numerators,
                       "right", False)


def solve_left(A: QMatrix, y, *, max_enum: int | None = None) -> SolveReport:
    """Solve x A = y (unknowns multiplied on the left, y a row)."""
    n = _require_square(A)
    y = _as_vector(y, n)
    d = _nonzero_or_raise(ddet(A, max_enum=max_enum), "ddet")
    astar = A.conj_transpose()
    z = [sum((y[k - 1] * astar[k, j] for k in range(1, n + 1)), Quaternion(0))
         for j in range(1, n + 1)]
    h = A @ astar
    numerators = tuple(rdet(h.replace_row(i, z), i, max_enum=max_enum)
                       for i in range(1, n + 1))
    return SolveReport(tuple(num / d for num in numerators), d, numerators,
                       "left", False)


def _require_hermitian(A: QMatrix):
    if not A.is_hermitian():
        raise NonHermitianError("the Hermitian fast path needs a Hermitian matrix")


def solve_right_hermitian(A: QMatrix, y, *, max_enum: int | None = None) -> SolveReport:
    """Fast path for Hermitian A: x[j] = cdet_j(A with column j := y) / det A."""
    n = _require_square(A)
    _require_hermitian(A)
    y = _as_vector(y, n)
    d = _nonzero_or_raise(hermitian_det(A, max_enum=max_enum), "det")
    numerators = tuple(cdet(A.replace_column(j, y), j, max_enum=max_enum)
                       for j in range(1, n + 1))
    return SolveReport(tuple(num / d for num in numerators), d, numerators,
                       "right", True)


def solve_left_hermitian(A: QMatrix, y, *, max_enum: int | None = None) -> SolveReport:
    """Fast path for Hermitian A: x[i] = rdet_i(A with row i := y) / det A."""
    n = _require_square(A)
    _require_hermitian(A)
    y = _as_vector(y, n)
    d = _nonzero_or_raise(hermitian_det(A, max_enum=max_enum), "det")
    numerators = tuple(rdet(A.replace_row(i, y), i, max_enum=max_enum)
                       for i in range(1, n + 1))
    return SolveReport(tuple(num / d for num in numerators), d, numerators,
                       "left", True)
