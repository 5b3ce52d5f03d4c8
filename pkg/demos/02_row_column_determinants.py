"""Row and column determinants: anchored functionals on square matrices.

A general quaternion matrix has no single determinant: each row anchor i
gives rdet_i and each column anchor j gives cdet_j, and these genuinely
differ.  Every monomial's factor order is pinned by an anchored cycle
normal form of its index permutation.

Run:  python demos/02_row_column_determinants.py
"""

from quatdet import QMatrix, cdet, left_ordered, parse_quaternion, rdet, right_ordered

A = QMatrix.from_rows([["i", "j"], ["k", "1"]])
print("A =", A)
print()
print("= the anchor matters on non-Hermitian input =")
for i in (1, 2):
    print(f"rdet_{i}(A) = {rdet(A, i)}    cdet_{i}(A) = {cdet(A, i)}")
print("(rdet_1 = i - jk = 0 while rdet_2 = 1i - kj = 2i)")

print()
print("= the cycle normal forms behind the monomials =")
sigma = (2, 1, 4, 3)  # the permutation swapping 1<->2 and 3<->4
for anchor in (1, 3):
    p = left_ordered(sigma, anchor)
    print(f"left-ordered,  anchor {anchor}: cycles {p.cycles}, sign {p.sign}, "
          f"factors {p.entry_path()}")
p = right_ordered(sigma, 4)
print(f"right-ordered, anchor 4: cycles {p.cycles}, sign {p.sign}, "
      f"factors {p.entry_path()}")

print()
print("= linearity in the anchored row =")
B = QMatrix.from_rows([["1", "i", "0"], ["-j", "2", "k"], ["1", "1", "j"]])
b = parse_quaternion("2-k")
scaled = B.replace_row(1, [b * q for q in B.row(1)])
print("rdet_1(B)                         =", rdet(B, 1))
print("rdet_1(B with row1 -> (2-k)*row1) =", rdet(scaled, 1))
print("(2-k) * rdet_1(B)                 =", b * rdet(B, 1))

print()
print("= a zero row kills every anchored determinant =")
Z = B.replace_row(2, [0, 0, 0])
print([str(rdet(Z, i)) for i in (1, 2, 3)], [str(cdet(Z, j)) for j in (1, 2, 3)])
