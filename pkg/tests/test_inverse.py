"""Adjugate inverses, the invertibility criterion, unimodular diagonalization."""

import random
from fractions import Fraction

import pytest

from quatdet import (CongruenceStep, I, J, AuditNote, NonHermitianError,
                     QMatrix, Quaternion, SingularMatrixError,
                     UnstablePivotError, ddet, double_cofactors,
                     elementary_unimodular, gauss_inverse, general_inverse,
                     hermitian_det, hermitian_inverse, unimodular_diagonalize)
from helpers import (rand_hermitian, rand_hermitian_nonsingular, rand_matrix,
                     rand_nonsingular, rand_quaternion, rand_right_dependent)

H2 = QMatrix.from_rows([["2", "i"], ["-i", "3"]])


def mu_product(result):
    prod = Fraction(1)
    for m in result.mu:
        prod *= m
    return prod


def as_diag(result):
    n = result.U.rows
    return QMatrix(n, n, [result.mu[r] if r == c else 0
                          for r in range(n) for c in range(n)])


class TestElementaryUnimodular:
    def test_left_multiplication_adds_scaled_row(self):
        A = rand_matrix(random.Random(51), 3, 3)
        b = Quaternion(1, -2, 0, 3)
        P = elementary_unimodular(3, 1, 2, b)
        PA = P @ A
        assert PA.row(1) == tuple(x + b * y for x, y in zip(A.row(1), A.row(2)))
        assert PA.row(2) == A.row(2)
        assert PA.row(3) == A.row(3)

    def test_zero_parameter_is_identity(self):
        assert elementary_unimodular(2, 1, 2, 0) == QMatrix.identity(2)

    def test_conj_transpose_swaps_indices(self):
        assert elementary_unimodular(2, 1, 2, I).conj_transpose() \
            == elementary_unimodular(2, 2, 1, -I)

    def test_equal_indices_rejected(self):
        with pytest.raises(ValueError):
            elementary_unimodular(2, 1, 1, I)


class TestHermitianInverse:
    def test_worked_example(self):
        inv = hermitian_inverse(H2)
        expected = QMatrix.from_rows([
            [Fraction(3, 5), Quaternion(0, Fraction(-1, 5))],
            [Quaternion(0, Fraction(1, 5)), Fraction(2, 5)]])
        assert inv == expected

    @pytest.mark.parametrize("n", range(1, 5))
    def test_identity(self, n):
        assert hermitian_inverse(QMatrix.identity(n)) == QMatrix.identity(n)

    def test_real_diagonal(self):
        assert hermitian_inverse(QMatrix.diag(2, 3)) \
            == QMatrix.diag(Fraction(1, 2), Fraction(1, 3))

    def test_two_sided_random(self):
        rng = random.Random(52)
        for _ in range(8):
            n = rng.randint(1, 4)
            A = rand_hermitian_nonsingular(rng, n)
            inv = hermitian_inverse(A)
            assert A @ inv == QMatrix.identity(n)
            assert inv @ A == QMatrix.identity(n)

    def test_singular_rejected_with_certificate(self):
        singular = QMatrix.from_rows([["1", "i"], ["-i", "1"]])
        assert hermitian_det(singular) == 0
        with pytest.raises(SingularMatrixError) as info:
            hermitian_inverse(singular)
        assert info.value.certificate == 0

    def test_non_hermitian_rejected(self):
        with pytest.raises(NonHermitianError):
            hermitian_inverse(QMatrix.from_rows([["i", "j"], ["k", "1"]]))


class TestGeneralInverse:
    def test_permutation_diagonal(self):
        A = QMatrix.from_rows([["0", "i"], ["j", "0"]])
        inv = general_inverse(A)
        assert inv == QMatrix.from_rows([["0", "-j"], ["-i", "0"]])
        assert A @ inv == QMatrix.identity(2)

    def test_unitary_diagonal(self):
        assert general_inverse(QMatrix.diag(I, J)) == QMatrix.diag(-I, -J)

    def test_both_constructions_and_oracle(self):
        rng = random.Random(53)
        for _ in range(6):
            n = rng.randint(1, 3)
            A = rand_nonsingular(rng, n)
            astar = A.conj_transpose()
            via_left = hermitian_inverse(astar @ A) @ astar
            via_right = astar @ hermitian_inverse(A @ astar)
            inv = general_inverse(A)
            assert inv == via_left == via_right
            assert inv @ A == QMatrix.identity(n)
            assert A @ inv == QMatrix.identity(n)
            assert inv == gauss_inverse(A)

    def test_entries_are_double_cofactors_over_ddet(self):
        rng = random.Random(54)
        for _ in range(4):
            n = rng.randint(1, 3)
            A = rand_nonsingular(rng, n)
            d = ddet(A)
            inv = general_inverse(A)
            table = double_cofactors(A)
            for p in range(1, n + 1):
                for q in range(1, n + 1):
                    assert inv[p, q] == table.left_at(q, p) / d
                    assert inv[p, q] == table.right_at(q, p) / d

    def test_agrees_with_hermitian_inverse(self):
        rng = random.Random(55)
        for _ in range(5):
            A = rand_hermitian_nonsingular(rng, rng.randint(1, 3))
            assert general_inverse(A) == hermitian_inverse(A)

    def test_dependent_columns_rejected(self):
        rng = random.Random(56)
        for _ in range(5):
            A = rand_right_dependent(rng, rng.randint(2, 4))
            assert ddet(A) == 0
            with pytest.raises(SingularMatrixError) as info:
                general_inverse(A)
            assert info.value.certificate == 0


class TestDiagonalization:
    def test_already_diagonal(self):
        result = unimodular_diagonalize(QMatrix.diag(2, 3))
        assert result.mu == (Fraction(2), Fraction(3))
        assert result.U == QMatrix.identity(2)

    def test_zero_pivot_case(self):
        A = QMatrix.from_rows([["0", "i"], ["-i", "0"]])
        result = unimodular_diagonalize(A)
        assert mu_product(result) == hermitian_det(A) == -1
        assert result.U @ A @ result.U.conj_transpose() == as_diag(result)

    def test_zero_matrix(self):
        result = unimodular_diagonalize(QMatrix.zeros(3, 3))
        assert result.mu == (0, 0, 0)
        assert result.U == QMatrix.identity(3)

    def test_diagonal_minus_two_repair_rescales(self):
        # the one-step repair leaves a zero pivot when the partner diagonal
        # entry is -2; the sweep must rescale and log the rejected attempt
        q = Quaternion(1, 1)
        A = QMatrix.from_rows([[Quaternion(0), q], [q.conj(), Quaternion(-2)]])
        result = unimodular_diagonalize(A)
        assert any(isinstance(s, AuditNote) and "rejected" in s.note
                   for s in result.steps)
        assert result.U @ A @ result.U.conj_transpose() == as_diag(result)
        assert mu_product(result) == hermitian_det(A)

    def test_invariants_random(self):
        rng = random.Random(57)
        for _ in range(10):
            n = rng.randint(1, 4)
            A = rand_hermitian(rng, n)
            result = unimodular_diagonalize(A)
            assert result.U @ A @ result.U.conj_transpose() == as_diag(result)
            assert mu_product(result) == hermitian_det(A)
            assert result.rebuild_u() == result.U

    def test_det_invariant_under_congruence(self):
        rng = random.Random(58)
        for _ in range(8):
            n = rng.randint(2, 4)
            A = rand_hermitian(rng, n)
            i, j = rng.sample(range(1, n + 1), 2)
            P = elementary_unimodular(n, i, j, rand_quaternion(rng))
            assert hermitian_det(P @ A @ P.conj_transpose()) == hermitian_det(A)

    def test_det_invariant_under_recorded_product(self):
        rng = random.Random(59)
        for _ in range(5):
            n = rng.randint(2, 3)
            A = rand_hermitian(rng, n)
            U = QMatrix.identity(n)
            for _ in range(4):
                i, j = rng.sample(range(1, n + 1), 2)
                U = elementary_unimodular(n, i, j, rand_quaternion(rng)) @ U
            assert hermitian_det(U @ A @ U.conj_transpose()) == hermitian_det(A)

    def test_steps_record_congruences(self):
        A = QMatrix.from_rows([["2", "i"], ["-i", "3"]])
        result = unimodular_diagonalize(A)
        congruences = [s for s in result.steps if isinstance(s, CongruenceStep)]
        assert congruences, "clearing a dense matrix must log congruence steps"

    def test_non_hermitian_rejected(self):
        with pytest.raises(NonHermitianError):
            unimodular_diagonalize(QMatrix.from_rows([["i", "j"], ["k", "1"]]))

    def test_float_backend_refuses_tiny_pivot(self):
        A = QMatrix.from_rows([
            [Quaternion(0.0), Quaternion(1.0)],
            [Quaternion(1.0), Quaternion(-2.0 - 1e-10)]])
        with pytest.raises(UnstablePivotError):
            unimodular_diagonalize(A)

    def test_float_backend_works_on_clean_pivots(self):
        A = QMatrix.from_rows([["2", "i"], ["-i", "3"]]).to_float()
        result = unimodular_diagonalize(A)
        assert abs(result.mu[0] * result.mu[1] - 5.0) < 1e-9
