"""Row/column determinants, Moore recursion, Hermitian and double determinants."""

import random
from fractions import Fraction

import pytest

from quatdet import (I, J, ONE, ZERO, EnumerationLimitError, IndexRangeError,
                     NonHermitianError, NonSquareError, QMatrix, Quaternion,
                     cdet, cdet_cofactor, ddet, double_cofactors, hermitian_det,
                     left_cofactor, moore_det, rdet, rdet_cofactor,
                     right_cofactor)
from helpers import (hermitian_with_duplicate, rand_hermitian, rand_matrix,
                     rand_quaternion)

A2 = QMatrix.from_rows([["i", "j"], ["k", "1"]])
H2 = QMatrix.from_rows([["2", "i"], ["-i", "3"]])


class TestRdet:
    def test_two_by_two_formula(self):
        # rdet_1 [[a,b],[c,d]] = a d - b c
        rng = random.Random(11)
        for _ in range(10):
            M = rand_matrix(rng, 2, 2)
            a, b, c, d = M[1, 1], M[1, 2], M[2, 1], M[2, 2]
            assert rdet(M, 1) == a * d - b * c
            assert rdet(M, 2) == d * a - c * b

    def test_anchor_dependence_example(self):
        assert rdet(A2, 1) == ZERO          # i - j k = i - i
        assert rdet(A2, 2) == Quaternion(0, 2)  # 1 i - k j = i + i

    @pytest.mark.parametrize("n", range(1, 6))
    def test_identity(self, n):
        eye = QMatrix.identity(n)
        for i in range(1, n + 1):
            assert rdet(eye, i) == ONE

    def test_real_matrix_matches_commutative_determinant(self):
        M = QMatrix.from_rows([[2, -1, 0], [3, 5, 1], [0, 7, 4]])
        # classical value: 2*(20-7) + 1*(12-0) + 0 = 38
        for anchor in range(1, 4):
            assert rdet(M, anchor) == Quaternion(38)
            assert cdet(M, anchor) == Quaternion(38)

    def test_non_square_rejected(self):
        with pytest.raises(NonSquareError):
            rdet(QMatrix.zeros(2, 3), 1)

    def test_anchor_range_checked(self):
        with pytest.raises(IndexRangeError):
            rdet(A2, 3)

    def test_enumeration_refused_above_limit(self):
        with pytest.raises(EnumerationLimitError):
            rdet(QMatrix.identity(9), 1)

    def test_max_enum_override(self):
        with pytest.raises(EnumerationLimitError):
            rdet(QMatrix.identity(3), 1, max_enum=2)
        assert rdet(QMatrix.identity(3), 1, max_enum=3) == ONE


class TestCdet:
    def test_two_by_two_formula(self):
        rng = random.Random(12)
        for _ in range(10):
            M = rand_matrix(rng, 2, 2)
            a, b, c, d = M[1, 1], M[1, 2], M[2, 1], M[2, 2]
            assert cdet(M, 1) == d * a - b * c
            assert cdet(M, 2) == a * d - c * b

    def test_worked_example(self):
        assert cdet(QMatrix.from_rows([["2", "1"], ["-i", "0"]]), 2) == I

    @pytest.mark.parametrize("n", range(1, 6))
    def test_identity(self, n):
        for j in range(1, n + 1):
            assert cdet(QMatrix.identity(n), j) == ONE


class TestCofactors:
    def test_two_by_two_right_cofactors(self):
        rng = random.Random(13)
        M = rand_matrix(rng, 2, 2)
        assert right_cofactor(M, 1, 1) == M[2, 2]
        assert right_cofactor(M, 1, 2) == -M[2, 1]
        assert right_cofactor(M, 2, 2) == M[1, 1]
        assert right_cofactor(M, 2, 1) == -M[1, 2]

    def test_expansion_matches_direct_on_example(self):
        for i in (1, 2):
            assert rdet_cofactor(A2, i) == rdet(A2, i)

    def test_base_case(self):
        q = QMatrix.from_rows([["1/2-3i"]])
        assert rdet_cofactor(q, 1) == q[1, 1]
        assert cdet_cofactor(q, 1) == q[1, 1]

    def test_expansion_matches_direct_random(self):
        rng = random.Random(14)
        for _ in range(15):
            n = rng.randint(1, 4)
            M = rand_matrix(rng, n, n)
            for anchor in range(1, n + 1):
                assert rdet_cofactor(M, anchor) == rdet(M, anchor)
                assert cdet_cofactor(M, anchor) == cdet(M, anchor)

    def test_left_cofactor_expansion_identity(self):
        rng = random.Random(15)
        M = rand_matrix(rng, 3, 3)
        for j in range(1, 4):
            total = sum((left_cofactor(M, i, j) * M[i, j] for i in range(1, 4)),
                        Quaternion(0))
            assert total == cdet(M, j)


class TestMooreDet:
    def test_worked_example(self):
        assert moore_det(H2) == Quaternion(5)

    def test_one_by_one(self):
        assert moore_det(QMatrix.from_rows([["-7/3"]])) == Quaternion(Fraction(-7, 3))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_identity(self, n):
        assert moore_det(QMatrix.identity(n)) == ONE

    def test_non_hermitian_rejected(self):
        with pytest.raises(NonHermitianError):
            moore_det(A2)

    def test_equals_row_determinant_on_hermitian(self):
        rng = random.Random(16)
        for _ in range(15):
            H = rand_hermitian(rng, rng.randint(1, 4))
            assert moore_det(H) == rdet(H, 1)


class TestHermitianDet:
    def test_worked_example(self):
        assert hermitian_det(H2) == 5
        assert hermitian_det(H2, paranoid=True) == 5

    def test_duplicate_rows_vanish(self):
        rng = random.Random(17)
        for _ in range(5):
            n = rng.randint(2, 4)
            i = rng.randint(1, n)
            j = rng.choice([t for t in range(1, n + 1) if t != i])
            assert hermitian_det(hermitian_with_duplicate(rng, n, i, j)) == 0

    def test_real_diagonal_product(self):
        D = QMatrix.diag(Fraction(3, 2), -2, 5)
        assert hermitian_det(D, paranoid=True) == -15

    def test_non_hermitian_rejected(self):
        with pytest.raises(NonHermitianError):
            hermitian_det(A2)

    def test_all_anchors_agree_and_real(self):
        rng = random.Random(18)
        for _ in range(10):
            n = rng.randint(1, 4)
            H = rand_hermitian(rng, n)
            d = hermitian_det(H, paranoid=True)
            value = Quaternion(d)
            for anchor in range(1, n + 1):
                assert rdet(H, anchor) == value
                assert cdet(H, anchor) == value


class TestDdet:
    def test_one_by_one_is_norm(self):
        q = rand_quaternion(random.Random(19))
        assert ddet(QMatrix.from_rows([[q]])) == q.norm()
        assert ddet(QMatrix.from_rows([["i"]])) == 1

    def test_unitary_diagonal(self):
        assert ddet(QMatrix.diag(I, J)) == 1

    def test_dependent_columns_vanish(self):
        assert ddet(QMatrix.from_rows([["1", "i"], ["j", "-k"]])) == 0

    def test_nonnegative(self):
        rng = random.Random(20)
        for _ in range(10):
            n = rng.randint(1, 3)
            assert ddet(rand_matrix(rng, n, n)) >= 0

    def test_equals_other_side(self):
        rng = random.Random(21)
        for _ in range(10):
            n = rng.randint(1, 3)
            A = rand_matrix(rng, n, n)
            assert hermitian_det(A.corresponding_hermitian("left")) \
                == hermitian_det(A.corresponding_hermitian("right"))

    def test_multiplicative(self):
        rng = random.Random(22)
        for _ in range(8):
            n = rng.randint(1, 3)
            A, B = rand_matrix(rng, n, n), rand_matrix(rng, n, n)
            assert ddet(A @ B) == ddet(A) * ddet(B)


class TestDoubleCofactors:
    def test_identity(self):
        table = double_cofactors(QMatrix.identity(2))
        for i in (1, 2):
            for j in (1, 2):
                expected = ONE if i == j else ZERO
                assert table.left_at(i, j) == expected
                assert table.right_at(i, j) == expected

    def test_unitary_diagonal_example(self):
        table = double_cofactors(QMatrix.diag(I, J))
        assert table.left_at(1, 1) == -I
        assert table.left_at(2, 2) == -J
        assert table.left_at(1, 2) == table.left_at(2, 1) == ZERO
        assert table.right_at(1, 1) == -I
        assert table.right_at(2, 2) == -J

    def test_expansion_sums_reproduce_ddet(self):
        rng = random.Random(23)
        for _ in range(5):
            n = rng.randint(1, 3)
            A = rand_matrix(rng, n, n)
            d = Quaternion(ddet(A))
            table = double_cofactors(A)
            for j in range(1, n + 1):
                col_sum = sum((table.left_at(i, j) * A[i, j] for i in range(1, n + 1)),
                              Quaternion(0))
                assert col_sum == d
            for i in range(1, n + 1):
                row_sum = sum((A[i, j] * table.right_at(i, j) for j in range(1, n + 1)),
                              Quaternion(0))
                assert row_sum == d


class TestGeneralProperties:
    def test_adjoint_duality(self):
        rng = random.Random(24)
        for _ in range(10):
            n = rng.randint(1, 4)
            A = rand_matrix(rng, n, n)
            astar = A.conj_transpose()
            for i in range(1, n + 1):
                assert rdet(astar, i) == cdet(A, i).conj()

    def test_zero_row_and_column(self):
        rng = random.Random(25)
        for _ in range(5):
            n = rng.randint(1, 4)
            A = rand_matrix(rng, n, n)
            t = rng.randint(1, n)
            zeroed_row = A.replace_row(t, [0] * n)
            zeroed_col = A.replace_column(t, [0] * n)
            for anchor in range(1, n + 1):
                assert rdet(zeroed_row, anchor).is_zero()
                assert cdet(zeroed_row, anchor).is_zero()
                assert rdet(zeroed_col, anchor).is_zero()
                assert cdet(zeroed_col, anchor).is_zero()

    def test_row_scaling_left(self):
        rng = random.Random(26)
        for _ in range(5):
            n = rng.randint(1, 4)
            A = rand_matrix(rng, n, n)
            b = rand_quaternion(rng)
            i = rng.randint(1, n)
            scaled = A.replace_row(i, [b * q for q in A.row(i)])
            assert rdet(scaled, i) == b * rdet(A, i)

    def test_column_scaling_right(self):
        rng = random.Random(27)
        for _ in range(5):
            n = rng.randint(1, 4)
            A = rand_matrix(rng, n, n)
            b = rand_quaternion(rng)
            j = rng.randint(1, n)
            scaled = A.replace_column(j, [q * b for q in A.col(j)])
            assert cdet(scaled, j) == cdet(A, j) * b

    def test_split_row_additivity(self):
        rng = random.Random(28)
        for _ in range(5):
            n = rng.randint(1, 4)
            A = rand_matrix(rng, n, n)
            t = rng.randint(1, n)
            b = [rand_quaternion(rng) for _ in range(n)]
            c = [A[t, k + 1] - b[k] for k in range(n)]
            for anchor in range(1, n + 1):
                assert rdet(A, anchor) \
                    == rdet(A.replace_row(t, b), anchor) + rdet(A.replace_row(t, c), anchor)
                assert cdet(A, anchor) \
                    == cdet(A.replace_row(t, b), anchor) + cdet(A.replace_row(t, c), anchor)

    def test_split_column_additivity(self):
        rng = random.Random(29)
        for _ in range(5):
            n = rng.randint(1, 4)
            A = rand_matrix(rng, n, n)
            t = rng.randint(1, n)
            b = [rand_quaternion(rng) for _ in range(n)]
            c = [A[k + 1, t] - b[k] for k in range(n)]
            for anchor in range(1, n + 1):
                assert rdet(A, anchor) \
                    == rdet(A.replace_column(t, b), anchor) + rdet(A.replace_column(t, c), anchor)
                assert cdet(A, anchor) \
                    == cdet(A.replace_column(t, b), anchor) + cdet(A.replace_column(t, c), anchor)


class TestHermitianVanishing:
    """Replacement and combination identities special to Hermitian matrices."""

    def test_six_replacement_identities(self):
        rng = random.Random(30)
        for _ in range(8):
            n = rng.randint(2, 4)
            A = rand_hermitian(rng, n)
            i, j = rng.sample(range(1, n + 1), 2)
            b = rand_quaternion(rng)
            assert rdet(A.replace_row(j, A.row(i)), j).is_zero()
            assert cdet(A.replace_column(i, A.col(j)), i).is_zero()
            assert rdet(A.replace_row(i, [b * q for q in A.row(j)]), i).is_zero()
            assert cdet(A.replace_column(j, [q * b for q in A.col(i)]), j).is_zero()
            assert rdet(A.replace_column(j, [q * b for q in A.col(i)]), j).is_zero()
            assert cdet(A.replace_row(i, [b * q for q in A.row(j)]), i).is_zero()

    def test_combination_addition_preserves_det(self):
        rng = random.Random(31)
        for _ in range(8):
            n = rng.randint(2, 4)
            A = rand_hermitian(rng, n)
            d = Quaternion(hermitian_det(A))
            i = rng.randint(1, n)
            others = [t for t in range(1, n + 1) if t != i]
            coeffs = {t: rand_quaternion(rng) for t in others}
            row = [A[i, k + 1] + sum((coeffs[t] * A[t, k + 1] for t in others),
                                     Quaternion(0)) for k in range(n)]
            edited = A.replace_row(i, row)
            assert rdet(edited, i) == d
            assert cdet(edited, i) == d
            col = [A[k + 1, i] + sum((A[k + 1, t] * coeffs[t] for t in others),
                                     Quaternion(0)) for k in range(n)]
            edited = A.replace_column(i, col)
            assert cdet(edited, i) == d
            assert rdet(edited, i) == d


class TestFloatBackend:
    def test_close_to_exact(self):
        rng = random.Random(32)
        A = rand_matrix(rng, 3, 3)
        exact = rdet(A, 2)
        approx = rdet(A.to_float(), 2)
        for e, a in zip(exact.components(), approx.components()):
            assert abs(float(e) - a) < 1e-9

    def test_hermitian_tolerance(self):
        H = H2.to_float()
        assert H.is_hermitian()
        assert abs(hermitian_det(H, paranoid=True) - 5.0) < 1e-9

    def test_float_moore(self):
        assert abs(moore_det(H2.to_float()).w - 5.0) < 1e-9
