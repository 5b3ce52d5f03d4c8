"""Deterministic random generators shared by the test modules.

Entry components are rationals with numerators and denominators in [-9, 9],
the same population the acceptance criteria prescribe.  Every generator
takes an explicit random.Random so each test pins its own seed.
"""

from __future__ import annotations

import random
from fractions import Fraction

from quatdet import QMatrix, Quaternion, ddet, hermitian_det


def rand_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def rand_quaternion(rng: random.Random) -> Quaternion:
    return Quaternion(*(rand_rational(rng) for _ in range(4)))


def rand_matrix(rng: random.Random, rows: int, cols: int) -> QMatrix:
    return QMatrix(rows, cols, [rand_quaternion(rng) for _ in range(rows * cols)])


def rand_hermitian(rng: random.Random, n: int) -> QMatrix:
    grid = [[None] * n for _ in range(n)]
    for i in range(n):
        grid[i][i] = Quaternion(rand_rational(rng))
        for j in range(i + 1, n):
            q = rand_quaternion(rng)
            grid[i][j] = q
            grid[j][i] = q.conj()
    return QMatrix.from_rows(grid)


def rand_nonsingular(rng: random.Random, n: int) -> QMatrix:
    while True:
        A = rand_matrix(rng, n, n)
        if ddet(A):
            return A


def rand_hermitian_nonsingular(rng: random.Random, n: int) -> QMatrix:
    while True:
        A = rand_hermitian(rng, n)
        if hermitian_det(A):
            return A


def rand_right_dependent(rng: random.Random, n: int) -> QMatrix:
    """n x n matrix with one column a right linear combination of the others."""
    assert n >= 2
    cols = [[rand_quaternion(rng) for _ in range(n)] for _ in range(n - 1)]
    coeffs = [rand_quaternion(rng) for _ in range(n - 1)]
    target = [sum((cols[l][r] * coeffs[l] for l in range(n - 1)), Quaternion(0))
              for r in range(n)]
    cols.insert(rng.randrange(n), target)
    return QMatrix(n, n, [cols[c][r] for r in range(n) for c in range(n)])


def hermitian_with_duplicate(rng: random.Random, n: int, i: int, j: int) -> QMatrix:
    """Hermitian matrix whose rows (and hence columns) i and j coincide."""
    assert i != j
    A = rand_hermitian(rng, n)
    grid = A.to_rows()
    shared_diag = Quaternion(rand_rational(rng))
    for k in range(n):
        if k + 1 in (i, j):
            continue
        q = rand_quaternion(rng)
        grid[i - 1][k] = grid[j - 1][k] = q
        grid[k][i - 1] = grid[k][j - 1] = q.conj()
    for a in (i, j):
        for b in (i, j):
            grid[a - 1][b - 1] = shared_diag
    return QMatrix.from_rows(grid)


def apply_right(A: QMatrix, x) -> list[Quaternion]:
    """A x for a column of unknowns multiplied on the right."""
    return [sum((A[i, k] * x[k - 1] for k in range(1, A.cols + 1)), Quaternion(0))
            for i in range(1, A.rows + 1)]


def apply_left(x, A: QMatrix) -> list[Quaternion]:
    """x A for a row of unknowns multiplied on the left."""
    return [sum((x[k - 1] * A[k, j] for k in range(1, A.rows + 1)), Quaternion(0))
            for j in range(1, A.cols + 1)]
