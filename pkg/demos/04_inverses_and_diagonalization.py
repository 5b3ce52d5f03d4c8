"""Cofactor-based inverses and unimodular congruence diagonalization.

Run:  python demos/04_inverses_and_diagonalization.py
"""

from fractions import Fraction

from quatdet import (CongruenceStep, QMatrix, SingularMatrixError, ddet,
                     double_cofactors, general_inverse, hermitian_det,
                     hermitian_inverse, unimodular_diagonalize)

H = QMatrix.from_rows([["2", "i"], ["-i", "3"]])
print("H =", H)
print("H^-1 via cofactor adjugates =", hermitian_inverse(H))
print("H @ H^-1 =", H @ hermitian_inverse(H))

print()
print("= general inverse through both corresponding Hermitian routes =")
A = QMatrix.from_rows([["1", "i", "0"], ["-j", "2", "k"], ["1", "1", "j"]])
inv = general_inverse(A)
print("A^-1 =", inv)
print("A @ A^-1 == I:", A @ inv == QMatrix.identity(3))
print("entries are double cofactors over ddet:")
table = double_cofactors(A)
d = ddet(A)
print("  A^-1[1,2] =", inv[1, 2], " = left_cofactor[2,1]/ddet =",
      table.left_at(2, 1) / d)

print()
print("= singular input is rejected with a zero certificate =")
S = QMatrix.from_rows([["1", "i"], ["j", "-k"]])
try:
    general_inverse(S)
except SingularMatrixError as exc:
    print("rejected:", exc, "| certificate:", exc.certificate)

print()
print("= diagonalization by elementary unimodular congruences =")
X = QMatrix.from_rows([["0", "i", "1"], ["-i", "0", "j"], ["1", "-j", "-2"]])
result = unimodular_diagonalize(X)
print("mu =", [str(m) for m in result.mu])
print("U X U* == diag(mu):",
      result.U @ X @ result.U.conj_transpose()
      == QMatrix.diag(*[Fraction(m) for m in result.mu]))
print("product(mu) =", hermitian_det(X), "= det X")
print("audit trail:")
for step in result.steps:
    if isinstance(step, CongruenceStep):
        print(f"   P[{step.i},{step.j}]({step.b}): {step.note}")
    else:
        print(f"   {step.note}")
