"""Adjugate-style inverses and unimodular congruence diagonalization.

A nonsingular Hermitian matrix is inverted through its cofactor tables
(the classical adjoint pattern, with right and left cofactor variants that
must agree).  A general square matrix with nonzero double determinant is
inverted through both corresponding-Hermitian routes,
``(A*A)^-1 A*`` and ``A* (AA*)^-1``, which are checked against each other
before the common value is returned.

``unimodular_diagonalize`` follows the constructive congruence sweep: for
each pivot position it either divides by a nonzero real diagonal pivot,
repairs a zero pivot using a nonzero entry lower in the column, or records
a zero diagonal value when the remaining column is entirely zero.  The
accumulated U is an explicit product of elementary unimodular matrices and
satisfies U A U* = diag(mu) with det A = product(mu).
"""

from __future__ import annotations

from dataclasses import dataclass

from .det import ddet, hermitian_det, left_cofactor, right_cofactor
from .errors import (InternalCheckError, NonHermitianError, NonSquareError,
                     SingularMatrixError, UnstablePivotError)
from .matrix import QMatrix
from .scalar import Quaternion, as_quaternion

FLOAT_PIVOT_TOL = 1e-9


def elementary_unimodular(n: int, i: int, j: int, b) -> QMatrix:
    """P[i][j](b) = I + b*E[i][j]; left multiplication adds b*(row j) to row i."""
    if i == j:
        raise ValueError("elementary unimodular matrices need i != j")
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"indices ({i}, {j}) out of range 1..{n}")
    b = as_quaternion(b)
    entries = [1 if r == c else 0 for r in range(n) for c in range(n)]
    entries[(i - 1) * n + (j - 1)] = b
    return QMatrix(n, n, entries)


def _require_square(A: QMatrix) -> int:
    if A.rows != A.cols:
        raise NonSquareError(f"square matrix required, got {A.rows}x{A.cols}")
    return A.rows


def hermitian_inverse(A: QMatrix, *, max_enum: int | None = None) -> QMatrix:
    """Inverse of a nonsingular Hermitian matrix via its cofactor adjugates.

    Builds both the right-cofactor and left-cofactor adjugate and insists
    they agree; A @ result and result @ A are the identity exactly on the
    rational backend.
    """
    n = _require_square(A)
    if not A.is_hermitian():
        raise NonHermitianError("hermitian_inverse needs a Hermitian matrix")
    d = hermitian_det(A, max_enum=max_enum)
    if not d:
        raise SingularMatrixError("Hermitian matrix is singular (det 0)", certificate=d)
    if n == 1:
        return QMatrix(1, 1, [A[1, 1].inverse()])
    via_right = QMatrix(n, n, [right_cofactor(A, q, p, max_enum=max_enum) / d
                               for p in range(1, n + 1) for q in range(1, n + 1)])
    via_left = QMatrix(n, n, [left_cofactor(A, q, p, max_enum=max_enum) / d
                              for p in range(1, n + 1) for q in range(1, n + 1)])
    if via_right != via_left:
        raise InternalCheckError("right- and left-cofactor inverses disagree")
    return via_right


def general_inverse(A: QMatrix, *, max_enum: int | None = None) -> QMatrix:
    """Inverse of any square A with ddet(A) != 0.

    Both constructions (A*A)^-1 A* and A* (AA*)^-1 are computed and must
    coincide; the common matrix is the unique two-sided inverse.  Singular
    input raises SingularMatrixError carrying the zero ddet certificate.
    """
    _require_square(A)
    d = ddet(A, max_enum=max_enum)
    if not d:
        raise SingularMatrixError(
            "matrix is not invertible (ddet 0: columns are right linearly dependent)",
            certificate=d)
    astar = A.conj_transpose()
    via_left = hermitian_inverse(astar @ A, max_enum=max_enum) @ astar
    via_right = astar @ hermitian_inverse(A @ astar, max_enum=max_enum)
    if via_left != via_right:
        raise InternalCheckError("the two corresponding-Hermitian inverses disagree")
    return via_left


# -- diagonalization -----------------------------------------------------------


@dataclass(frozen=True)
class CongruenceStep:
    """One applied congruence A -> P A P* with P = I + b*E[i][j]."""

    i: int
    j: int
    b: Quaternion
    note: str


@dataclass(frozen=True)
class AuditNote:
    """A non-multiplicative audit event (skipped column, rejected repair)."""

    note: str


@dataclass(frozen=True)
class DiagonalizationResult:
    """Outcome of the congruence sweep: U A U* = diag(mu).

    U is accumulated explicitly as a matrix product (not replayed from the
    step log), so checking the invariants needs nothing but this object and
    A.  ``steps`` interleaves CongruenceStep entries (whose product, applied
    left to right, rebuilds U) with AuditNote entries.
    """

    U: QMatrix
    mu: tuple
    steps: tuple

    def rebuild_u(self) -> QMatrix:
        """Recompose U from the logged congruence steps, newest on the left."""
        n = self.U.rows
        u = QMatrix.identity(n)
        for step in self.steps:
            if isinstance(step, CongruenceStep):
                u = elementary_unimodular(n, step.i, step.j, step.b) @ u
        return u


def _is_zero_entry(q: Quaternion, exact: bool) -> bool:
    if exact:
        return q.is_zero()
    return max(abs(c) for c in q.components()) < FLOAT_PIVOT_TOL


def unimodular_diagonalize(A: QMatrix) -> DiagonalizationResult:
    """Diagonalize a Hermitian matrix by elementary unimodular congruences.

    The float backend refuses pivots below 1e-9 in magnitude instead of
    amplifying roundoff; use the exact backend for anything that matters.
    """
    n = _require_square(A)
    if not A.is_hermitian():
        raise NonHermitianError("unimodular_diagonalize needs a Hermitian matrix")
    exact = A.is_exact
    M = A.to_rows()
    U = QMatrix.identity(n)
    if not exact:
        U = U.to_float()
    steps: list = []

    def congruence(p: int, q: int, b: Quaternion, note: str):
        nonlocal U
        bconj = b.conj()
        M[p - 1] = [v + b * w for v, w in zip(M[p - 1], M[q - 1])]
        for r in range(n):
            M[r][p - 1] = M[r][p - 1] + M[r][q - 1] * bconj
        U = elementary_unimodular(n, p, q, b) @ U
        steps.append(CongruenceStep(p, q, b, note))

    for k in range(1, n + 1):
        pivot = M[k - 1][k - 1]
        candidates = [i for i in range(k + 1, n + 1)
                      if not _is_zero_entry(M[i - 1][k - 1], exact)]
        if _is_zero_entry(pivot, exact):
            if not candidates:
                steps.append(AuditNote(f"column {k} is zero below the pivot; mu[{k}] = 0"))
                continue
            repaired = False
            c = 1
            while not repaired:
                for i in candidates:
                    head = M[i - 1][k - 1]
                    diag = M[i - 1][i - 1].w
                    predicted = c * head.norm() * (2 + c * diag)
                    if predicted:
                        congruence(k, i, c * M[k - 1][i - 1],
                                   f"repair zero pivot at {k} using row {i} (scale {c})")
                        repaired = True
                        break
                    steps.append(AuditNote(
                        f"repair candidate row {i} with scale {c} would leave "
                        f"a zero pivot at {k}; rejected"))
                c += 1
            pivot = M[k - 1][k - 1]
        if not exact and abs(pivot.w) < FLOAT_PIVOT_TOL:
            raise UnstablePivotError(
                f"float pivot {pivot.w!r} at position {k} is below 1e-9; "
                "use the exact backend")
        mu = pivot.w
        for i in range(k + 1, n + 1):
            if _is_zero_entry(M[i - 1][k - 1], exact):
                continue
            congruence(i, k, -(M[i - 1][k - 1] / mu),
                       f"clear column {k} entry in row {i}")

    if exact:
        for r in range(n):
            for c in range(n):
                if r != c and not M[r][c].is_zero():
                    raise InternalCheckError(
                        f"congruence sweep left a nonzero off-diagonal entry at "
                        f"({r + 1}, {c + 1})")
    return DiagonalizationResult(U, tuple(M[k][k].w for k in range(n)), tuple(steps))
