"""Exact quaternion arithmetic: units, conjugation, norms, literals.

Run:  python demos/01_quaternion_arithmetic.py
"""

from fractions import Fraction

from quatdet import I, J, K, ONE, Quaternion, format_quaternion, parse_quaternion

print("= the Hamilton relations =")
print("i*i =", I * I, "   j*j =", J * J, "   k*k =", K * K)
print("i*j =", I * J, "   j*i =", J * I, "   -> multiplication is noncommutative")

print()
print("= conjugation reverses products =")
p, q = ONE + I, parse_quaternion("2-j+k")
print("p =", p, "  q =", q)
print("conj(p*q)         =", (p * q).conj())
print("conj(q)*conj(p)   =", q.conj() * p.conj())
print("conj(p)*conj(q)   =", p.conj() * q.conj(), "  (wrong order, different value)")

print()
print("= norm and trace are real and well behaved =")
print("norm(p) * norm(q) =", p.norm() * q.norm(), " = norm(p*q) =", (p * q).norm())
print("trace(p*q) =", (p * q).trace(), " = trace(q*p) =", (q * p).trace())

print()
print("= exact inverses =")
w = Quaternion(Fraction(1, 2), -3, 1, Fraction(-7, 4))
print("w          =", w)
print("w^-1       =", w.inverse())
print("w * w^-1   =", w * w.inverse())

print()
print("= the literal grammar round-trips =")
text = "1/2-3i+j-7/4k"
print(f"parse({text!r}) -> {parse_quaternion(text)!r}")
print("format(...)  ->", format_quaternion(parse_quaternion(text)))
