"""Cramer-rule solutions of right systems A x = y and left systems x A = y.

Run:  python demos/05_cramer_solvers.py
"""

from quatdet import (I, J, K, QMatrix, solve_left, solve_left_hermitian,
                     solve_right, solve_right_hermitian)

A = QMatrix.diag(I, J)
y = [K, 1]
print("A =", A, "  y =", [str(v) for v in y])

right = solve_right(A, y)
left = solve_left(A, y)
print()
print("right system A x = y:   x =", [str(v) for v in right.solution])
print("left system  x A = y:   x =", [str(v) for v in left.solution])
print("the two systems have different solutions over the quaternions")

print()
print("= the report keeps the Cramer certificate =")
H = QMatrix.from_rows([["2", "i"], ["-i", "3"]])
report = solve_right(H, [1, 0])
print("solution   =", [str(v) for v in report.solution])
print("numerators =", [str(v) for v in report.numerators])
print("ddet       =", report.ddet)
print("each solution component times ddet equals its numerator:",
      all(x * report.ddet == n for x, n in zip(report.solution, report.numerators)))

print()
print("= Hermitian fast paths skip forming A*A =")
fast = solve_right_hermitian(H, [1, 0])
print("fast path  =", [str(v) for v in fast.solution],
      "| divides by det(A) =", fast.ddet)
print("same solution as the general path:", fast.solution == report.solution)
fast_left = solve_left_hermitian(H, [1, 0])
general_left = solve_left(H, [1, 0])
print("left side agrees too:", fast_left.solution == general_left.solution)
