"""Hermitian matrices: where all 2n anchored determinants agree.

On a Hermitian matrix every rdet_i and cdet_j takes the same real value,
the Moore recursion reproduces it, and det(A*A) = det(AA*) defines the
double determinant of an arbitrary square matrix, which vanishes exactly
on non-invertible input.

Run:  python demos/03_hermitian_and_double_determinant.py
"""

import random
from fractions import Fraction

from quatdet import QMatrix, Quaternion, cdet, ddet, hermitian_det, moore_det, rdet

H = QMatrix.from_rows([
    ["3", "1+i", "-j"],
    ["1-i", "-2", "1/2k"],
    ["j", "-1/2k", "1"]])
print("H =", H)
print("is_hermitian:", H.is_hermitian())

print()
print("= all 2n anchored determinants coincide and are real =")
for i in (1, 2, 3):
    print(f"rdet_{i}(H) = {rdet(H, i)}    cdet_{i}(H) = {cdet(H, i)}")
print("hermitian_det (paranoid) =", hermitian_det(H, paranoid=True))
print("moore_det via the recursive expansion =", moore_det(H))

print()
print("= duplicate rows force determinant zero =")
D = QMatrix.from_rows([["2", "i", "i"], ["-i", "3", "3"], ["-i", "3", "3"]])
print("det =", hermitian_det(D))

print()
print("= the double determinant ddet(A) = det(A*A) =")
A = QMatrix.from_rows([["i", "j"], ["k", "1"]])
print("A =", A)
print("ddet(A) =", ddet(A), "  (real, nonnegative)")
print("det(AA*) =", hermitian_det(A.corresponding_hermitian('right')),
      " = det(A*A) =", hermitian_det(A.corresponding_hermitian('left')))

print()
print("= ddet is multiplicative =")
rng = random.Random(3)

def rand_quaternion():
    return Quaternion(*(Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                        for _ in range(4)))

B = QMatrix(2, 2, [rand_quaternion() for _ in range(4)])
C = QMatrix(2, 2, [rand_quaternion() for _ in range(4)])
print("ddet(B C) =", ddet(B @ C))
print("ddet(B) * ddet(C) =", ddet(B) * ddet(C))

print()
print("= right-dependent columns mean ddet 0 =")
S = QMatrix.from_rows([["1", "i"], ["j", "-k"]])  # column 2 = column 1 * i
print("S =", S, " ddet(S) =", ddet(S))
