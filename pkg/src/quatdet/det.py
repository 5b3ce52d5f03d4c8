"""Anchored determinant functionals for quaternion matrices.

``rdet(A, i)`` and ``cdet(A, j)`` are the row/column determinants: signed
sums over all n! permutations, with each monomial's factor order pinned by
the left/right-ordered cycle normal forms of :mod:`quatdet.perm`.  On a
Hermitian matrix all 2n anchored values coincide, are real, and equal the
classical Moore recursion (:func:`moore_det`); that common value is
:func:`hermitian_det`.  For an arbitrary square matrix the anchored values
genuinely differ, and the workable scalar invariant is the double
determinant ``ddet(A) = hermitian_det(A* A)``.

Exact evaluation strategy: a matrix over Fraction components is scaled once
by the lcm L of all component denominators so the permutation walk runs in
pure integer arithmetic, and the final sums are divided by L**n.  The float
backend skips scaling and accumulates in enumeration (lexicographic) order,
which keeps float results bit-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .errors import (EnumerationLimitError, IndexRangeError,
                     InternalCheckError, NonHermitianError, NonSquareError)
from .matrix import QMatrix
from .perm import DEFAULT_MAX_ENUM, enumerate_permutations, left_ordered, right_ordered
from .scalar import Quaternion

FLOAT_HERMITIAN_TOL = 1e-9

__all__ = [
    "DetValue", "DoubleCofactorTable", "rdet", "cdet",
    "rdet_cofactor", "cdet_cofactor", "right_cofactor", "left_cofactor",
    "moore_det", "hermitian_det", "ddet", "double_cofactors",
    "DEFAULT_MAX_ENUM",
]


@dataclass(frozen=True)
class DetValue:
    """An anchored determinant value plus how it was obtained."""

    value: Quaternion
    method: str  # "direct" | "cofactor" | "moore"
    anchor: int


@dataclass(frozen=True)
class DoubleCofactorTable:
    """Left and right double cofactor tables of a square matrix.

    Row/column sums against the matrix entries reproduce ddet:
    sum_i left[i][j] * a[i][j] == ddet(A) for every j, and
    sum_j a[i][j] * right[i][j] == ddet(A) for every i.
    Tables are row-major; use left_at/right_at for 1-based access.
    """

    n: int
    left: tuple[tuple[Quaternion, ...], ...]
    right: tuple[tuple[Quaternion, ...], ...]

    def left_at(self, i: int, j: int) -> Quaternion:
        return self.left[i - 1][j - 1]

    def right_at(self, i: int, j: int) -> Quaternion:
        return self.right[i - 1][j - 1]


# -- permutation walk machinery ---------------------------------------------


@lru_cache(maxsize=None)
def _monomial_paths(n: int, anchor: int, ordering: str):
    """All n! monomials for one anchor: (sign, flat entry indices) tuples.

    Flat indices are row-major 0-based; the index order is exactly the
    multiplication order of the normal form.  Enumeration is lexicographic
    in one-line notation, so float sums are reproducible.
    """
    order = left_ordered if ordering == "left" else right_ordered
    paths = []
    for sigma in enumerate_permutations(n, max_enum=n):
        p = order(sigma, anchor)
        flat = tuple((r - 1) * n + (c - 1) for r, c in p.entry_path())
        paths.append((p.sign, flat))
    return tuple(paths)


def _qmul(p, q):
    pw, px, py, pz = p
    qw, qx, qy, qz = q
    return (pw * qw - px * qx - py * qy - pz * qz,
            pw * qx + px * qw + py * qz - pz * qy,
            pw * qy - px * qz + py * qw + pz * qx,
            pw * qz + px * qy - py * qx + pz * qw)


def _flatten(A: QMatrix):
    """Flat component tuples plus the denominator scale (None on floats)."""
    comps = [q.components() for q in A.entries]
    if comps and isinstance(comps[0][0], float):
        return comps, None
    scale = lcm(*(c.denominator for four in comps for c in four)) if comps else 1
    return [tuple(c.numerator * (scale // c.denominator) for c in four)
            for four in comps], scale


def _require_square(A: QMatrix) -> int:
    if A.rows != A.cols:
        raise NonSquareError(f"square matrix required, got {A.rows}x{A.cols}")
    return A.rows


def _check_anchor(index: int, n: int, what: str):
    if not 1 <= index <= n:
        raise IndexRangeError(f"{what} index {index} out of range 1..{n}")


def _gate(n: int, max_enum):
    limit = DEFAULT_MAX_ENUM if max_enum is None else max_enum
    if n > limit:
        raise EnumerationLimitError(
            f"direct enumeration of {n}! monomials refused (n={n} > max_enum={limit}); "
            "raise max_enum explicitly, or use the elimination/embedding oracles")


def _descale(acc, scale, power):
    if scale is None:
        return Quaternion(*acc)
    d = scale ** power
    return Quaternion(*(Fraction(c, d) for c in acc))


def _direct_det(A: QMatrix, anchor: int, ordering: str, max_enum) -> Quaternion:
    n = _require_square(A)
    _check_anchor(anchor, n, "row" if ordering == "left" else "column")
    _gate(n, max_enum)
    flat, scale = _flatten(A)
    paths = _monomial_paths(n, anchor, ordering)
    zero = 0.0 if scale is None else 0
    acc_w = acc_x = acc_y = acc_z = zero
    if ordering == "left":
        for sign, idxs in paths:
            prod = flat[idxs[0]]
            for t in range(1, len(idxs)):
                prod = _qmul(prod, flat[idxs[t]])
            if sign > 0:
                acc_w += prod[0]; acc_x += prod[1]; acc_y += prod[2]; acc_z += prod[3]
            else:
                acc_w -= prod[0]; acc_x -= prod[1]; acc_y -= prod[2]; acc_z -= prod[3]
    else:
        # column determinants evaluate right to left, as written
        for sign, idxs in paths:
            prod = flat[idxs[-1]]
            for t in range(len(idxs) - 2, -1, -1):
                prod = _qmul(flat[idxs[t]], prod)
            if sign > 0:
                acc_w += prod[0]; acc_x += prod[1]; acc_y += prod[2]; acc_z += prod[3]
            else:
                acc_w -= prod[0]; acc_x -= prod[1]; acc_y -= prod[2]; acc_z -= prod[3]
    return _descale((acc_w, acc_x, acc_y, acc_z), scale, n)


# -- the determinant functionals ---------------------------------------------


def rdet(A: QMatrix, i: int, *, max_enum: int | None = None) -> Quaternion:
    """The i-th row determinant by direct enumeration of all n! monomials."""
    return _direct_det(A, i, "left", max_enum)


def cdet(A: QMatrix, j: int, *, max_enum: int | None = None) -> Quaternion:
    """The j-th column determinant; monomials are read right to left."""
    return _direct_det(A, j, "right", max_enum)


def _shifted(index: int, removed: int) -> int:
    """Position of an original index after row/column ``removed`` is deleted."""
    return index - 1 if index > removed else index


def right_cofactor(A: QMatrix, i: int, j: int, *, max_enum: int | None = None) -> Quaternion:
    """R[i][j], the right cofactor: rdet_i A == sum_j a[i][j] * R[i][j]."""
    n = _require_square(A)
    _check_anchor(i, n, "row")
    _check_anchor(j, n, "column")
    if n == 1:
        raise IndexRangeError("cofactors need at least a 2x2 matrix")
    if i == j:
        k = 1 if i != 1 else 2
        return rdet(A.delete_row_col(i, i), _shifted(k, i), max_enum=max_enum)
    replaced = A.replace_column(j, A.col(i)).delete_row_col(i, i)
    return -rdet(replaced, _shifted(j, i), max_enum=max_enum)


def left_cofactor(A: QMatrix, i: int, j: int, *, max_enum: int | None = None) -> Quaternion:
    """L[i][j], the left cofactor: cdet_j A == sum_i L[i][j] * a[i][j]."""
    n = _require_square(A)
    _check_anchor(i, n, "row")
    _check_anchor(j, n, "column")
    if n == 1:
        raise IndexRangeError("cofactors need at least a 2x2 matrix")
    if i == j:
        k = 1 if j != 1 else 2
        return cdet(A.delete_row_col(j, j), _shifted(k, j), max_enum=max_enum)
    replaced = A.replace_row(i, A.row(j)).delete_row_col(j, j)
    return -cdet(replaced, _shifted(i, j), max_enum=max_enum)


def rdet_cofactor(A: QMatrix, i: int, *, max_enum: int | None = None) -> Quaternion:
    """rdet_i evaluated by cofactor expansion along row i; equals rdet exactly."""
    n = _require_square(A)
    _check_anchor(i, n, "row")
    if n == 1:
        return A[1, 1]
    total = Quaternion(0)
    for j in range(1, n + 1):
        total = total + A[i, j] * right_cofactor(A, i, j, max_enum=max_enum)
    return total


def cdet_cofactor(A: QMatrix, j: int, *, max_enum: int | None = None) -> Quaternion:
    """cdet_j evaluated by cofactor expansion along column j."""
    n = _require_square(A)
    _check_anchor(j, n, "column")
    if n == 1:
        return A[1, 1]
    total = Quaternion(0)
    for i in range(1, n + 1):
        total = total + left_cofactor(A, i, j, max_enum=max_enum) * A[i, j]
    return total


# -- Hermitian determinants ---------------------------------------------------


def _require_hermitian(A: QMatrix):
    if not A.is_hermitian():
        raise NonHermitianError("Hermitian matrix required")


def _moore_expand(rows, zero, p):
    """One level of the Moore recursion, expanding along row p (0-based).

    Each term replaces column q with column p, deletes row p and column p,
    and recurses; the diagonal term (q == p) carries sign +, all others -.
    The submatrices are not Hermitian, so the next level must expand along
    the row where the replaced column landed (first row for the diagonal
    term): that anchoring is what makes the recursion reproduce the
    anchored determinants level by level.
    """
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = (zero, zero, zero, zero)
    for q in range(n):
        a = rows[p][q]
        if a[0] == zero and a[1] == zero and a[2] == zero and a[3] == zero:
            continue
        sub = tuple(tuple(row[p] if c == q else row[c]
                          for c in range(n) if c != p)
                    for r, row in enumerate(rows) if r != p)
        nxt = 0 if q == p else (q - 1 if q > p else q)
        term = _qmul(a, _moore_expand(sub, zero, nxt))
        if q == p:
            acc = (acc[0] + term[0], acc[1] + term[1],
                   acc[2] + term[2], acc[3] + term[3])
        else:
            acc = (acc[0] - term[0], acc[1] - term[1],
                   acc[2] - term[2], acc[3] - term[3])
    return acc


def moore_det(A: QMatrix, *, max_enum: int | None = None) -> Quaternion:
    """The classical recursive determinant of a Hermitian matrix.

    Agrees with every rdet_i/cdet_j on its (Hermitian) domain, which is the
    independent recursion the test suite replays against the enumeration.
    """
    n = _require_square(A)
    _require_hermitian(A)
    _gate(n, max_enum)
    flat, scale = _flatten(A)
    rows = tuple(tuple(flat[r * n + c] for c in range(n)) for r in range(n))
    acc = _moore_expand(rows, 0.0 if scale is None else 0, 0)
    return _descale(acc, scale, n)


def _imag_small(q: Quaternion) -> bool:
    if q.is_exact:
        return q.is_real()
    return all(abs(c) <= FLOAT_HERMITIAN_TOL for c in (q.x, q.y, q.z))


def hermitian_det(A: QMatrix, *, paranoid: bool = False, max_enum: int | None = None):
    """The common value of all anchored determinants of a Hermitian matrix.

    Computes rdet_1 and returns its real part after checking the imaginary
    components vanish (a failure there is a bug, not bad input).  With
    paranoid=True all 2n anchored determinants are recomputed and compared;
    tests run paranoid, the CLI defaults to fast.
    """
    n = _require_square(A)
    _require_hermitian(A)
    value = rdet(A, 1, max_enum=max_enum)
    if not _imag_small(value):
        raise InternalCheckError(
            f"rdet_1 of a Hermitian matrix came out non-real: {value}")
    if paranoid:
        for anchor in range(1, n + 1):
            for functional in (rdet, cdet):
                other = functional(A, anchor, max_enum=max_enum)
                if value.is_exact:
                    agree = other == value
                else:
                    agree = all(abs(a - b) <= FLOAT_HERMITIAN_TOL
                                for a, b in zip(other.components(), value.components()))
                if not agree:
                    raise InternalCheckError(
                        f"anchored determinants disagree on a Hermitian matrix: "
                        f"{functional.__name__} anchor {anchor} gave {other}, expected {value}")
    return value.w


def ddet(A: QMatrix, *, paranoid: bool = False, max_enum: int | None = None):
    """The double determinant hermitian_det(A* A); real and nonnegative.

    Zero exactly when the columns of A are right linearly dependent, i.e.
    exactly when A is not invertible.  Rectangular inputs should go through
    QMatrix.corresponding_hermitian explicitly.
    """
    _require_square(A)
    return hermitian_det(A.corresponding_hermitian("left"),
                         paranoid=paranoid, max_enum=max_enum)


def double_cofactors(A: QMatrix, *, max_enum: int | None = None) -> DoubleCofactorTable:
    """Both double cofactor tables of a square matrix.

    left[i][j] is the column determinant of A*A with column j replaced by
    the i-th column of A*; right[i][j] the row determinant of AA* with row
    i replaced by the j-th row of A*.  These are the entries of the
    adjugate-style inverse, up to the ddet divisor and transposition.
    """
    n = _require_square(A)
    _gate(n, max_enum)
    astar = A.conj_transpose()
    hleft = astar @ A
    hright = A @ astar
    left = tuple(
        tuple(cdet(hleft.replace_column(j, astar.col(i)), j, max_enum=max_enum)
              for j in range(1, n + 1))
        for i in range(1, n + 1))
    right = tuple(
        tuple(rdet(hright.replace_row(i, astar.row(j)), i, max_enum=max_enum)
              for j in range(1, n + 1))
        for i in range(1, n + 1))
    return DoubleCofactorTable(n, left, right)
