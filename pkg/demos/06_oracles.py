"""The two independent verification paths.

1. Complex embedding: each quaternion becomes a 2x2 block over Q(i); the
   exact (fraction-free) determinant of the 2n x 2n embedded matrix equals
   ddet of the original.
2. Quaternionic Gauss-Jordan elimination: solves right systems and builds
   two-sided inverses without any determinant machinery.

Run:  python demos/06_oracles.py
"""

import random
from fractions import Fraction

from quatdet import (QMatrix, Quaternion, complex_det, complex_embed, ddet,
                     gauss_inverse, gauss_solve_right, general_inverse,
                     solve_right)

A = QMatrix.from_rows([["i", "j"], ["k", "1"]])
E = complex_embed(A)
print("A =", A)
print("embedded size:", E.rows, "x", E.cols)
print("first block row:", [repr(E[1, c]) for c in range(1, 5)])

print()
print("= the embedding determinant equals ddet =")
print("complex_det(embed(A)) =", complex_det(E))
print("ddet(A)               =", ddet(A))

rng = random.Random(9)
def rand_quaternion():
    return Quaternion(*(Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                        for _ in range(4)))

print()
print("= agreement on random matrices =")
for n in (2, 3, 4):
    M = QMatrix(n, n, [rand_quaternion() for _ in range(n * n)])
    assert complex_det(complex_embed(M)).re == ddet(M)
    print(f"n={n}: embedding oracle and ddet agree exactly")

print()
print("= elimination cross-checks the Cramer machinery =")
B = QMatrix(3, 3, [rand_quaternion() for _ in range(9)])
y = [rand_quaternion() for _ in range(3)]
cramer = solve_right(B, y).solution
gauss = gauss_solve_right(B, y)
print("Cramer == elimination:", cramer == gauss)
print("adjugate inverse == elimination inverse:",
      general_inverse(B) == gauss_inverse(B))
