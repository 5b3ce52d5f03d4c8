"""Exact quaternion arithmetic: the Hamilton algebra over rationals.

Components are `fractions.Fraction` by default, so every algebraic identity
in this package can be asserted as exact structural equality (Fraction is
always stored reduced with a positive denominator).  A float backend rides
behind the same class: construct from floats, or call :meth:`Quaternion.to_float`,
and all operations stay in floats.  Float values exist for timing and
large-n smoke runs only; never compare them for equality.

The i, j, k units obey i**2 == j**2 == k**2 == I*J*K == -1, so multiplication
is noncommutative (I*J == K but J*I == -K) and conjugation reverses products:
(p * q).conj() == q.conj() * p.conj().
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import DocumentError, ZeroDivisorError

Rational = Fraction

_REAL_TYPES = (int, Fraction)


def _coerce(w, x, y, z):
    """Normalize components to 4 Fractions, or 4 floats if any is a float."""
    parts = (w, x, y, z)
    if any(isinstance(p, float) for p in parts):
        return tuple(float(p) for p in parts)
    return tuple(p if isinstance(p, Fraction) else Fraction(p) for p in parts)


class Quaternion:
    """An immutable quaternion w + x*i + y*j + z*k.

    Treat instances as values: no method mutates, every operation returns a
    fresh quaternion, and instances are hashable.  Real scalars (int,
    Fraction, float) mix freely with ``+ - * /`` because reals are central
    in the algebra.
    """

    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w=0, x=0, y=0, z=0):
        w, x, y, z = _coerce(w, x, y, z)
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)

    def __setattr__(self, name, value):
        raise AttributeError("Quaternion is immutable")

    # -- algebra ---------------------------------------------------------

    def __add__(self, other):
        other = _as_quaternion_operand(other)
        if other is NotImplemented:
            return NotImplemented
        return Quaternion(self.w + other.w, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_quaternion_operand(other)
        if other is NotImplemented:
            return NotImplemented
        return Quaternion(self.w - other.w, self.x - other.x,
                          self.y - other.y, self.z - other.z)

    def __rsub__(self, other):
        other = _as_quaternion_operand(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __pos__(self):
        return self

    def __mul__(self, other):
        other = _as_quaternion_operand(other)
        if other is NotImplemented:
            return NotImplemented
        pw, px, py, pz = self.w, self.x, self.y, self.z
        qw, qx, qy, qz = other.w, other.x, other.y, other.z
        return Quaternion(
            pw * qw - px * qx - py * qy - pz * qz,
            pw * qx + px * qw + py * qz - pz * qy,
            pw * qy - px * qz + py * qw + pz * qx,
            pw * qz + px * qy - py * qx + pz * qw,
        )

    def __rmul__(self, other):
        # only reached for real scalars, which commute with everything
        other = _as_quaternion_operand(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self

    def __truediv__(self, other):
        """Division by a *real* scalar only; q1/q2 is ambiguous over H."""
        if isinstance(other, Quaternion):
            raise TypeError("quaternion/quaternion is ambiguous; "
                            "multiply by .inverse() on the intended side")
        if isinstance(other, (*_REAL_TYPES, float)):
            return Quaternion(self.w / other, self.x / other,
                              self.y / other, self.z / other)
        return NotImplemented

    def conj(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self):
        """w**2 + x**2 + y**2 + z**2 (real, >= 0, zero only for 0)."""
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def trace(self):
        """q + conj(q) = 2w, always real."""
        return 2 * self.w

    def inverse(self) -> "Quaternion":
        n = self.norm()
        if not n:
            raise ZeroDivisorError("the zero quaternion has no inverse")
        return Quaternion(self.w / n, -self.x / n, -self.y / n, -self.z / n)

    # -- predicates and conversions --------------------------------------

    @property
    def is_exact(self) -> bool:
        return not isinstance(self.w, float)

    def is_zero(self) -> bool:
        return not (self.w or self.x or self.y or self.z)

    def is_real(self) -> bool:
        return not (self.x or self.y or self.z)

    def components(self):
        return (self.w, self.x, self.y, self.z)

    def to_float(self) -> "Quaternion":
        return Quaternion(float(self.w), float(self.x),
                          float(self.y), float(self.z))

    # -- value semantics --------------------------------------------------

    def __eq__(self, other):
        other = _as_quaternion_operand(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.w == other.w and self.x == other.x
                and self.y == other.y and self.z == other.z)

    def __hash__(self):
        return hash((self.w, self.x, self.y, self.z))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"Quaternion({self.w!r}, {self.x!r}, {self.y!r}, {self.z!r})"

    def __str__(self):
        return format_quaternion(self)


def _as_quaternion_operand(value):
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, (*_REAL_TYPES, float)):
        return Quaternion(value)
    return NotImplemented


ZERO = Quaternion(0)
ONE = Quaternion(1)
I = Quaternion(0, 1)
J = Quaternion(0, 0, 1)
K = Quaternion(0, 0, 0, 1)


def as_quaternion(value) -> Quaternion:
    """Coerce a Quaternion, real number, or literal string to Quaternion."""
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, str):
        return parse_quaternion(value)
    if isinstance(value, (*_REAL_TYPES, float)):
        return Quaternion(value)
    raise TypeError(f"cannot interpret {type(value).__name__} as a quaternion")


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise DocumentError(f"bad rational literal {value!r}: {exc}") from None
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


# -- literal grammar -------------------------------------------------------
#
# A literal is a signed sum of terms over the units {"", i, j, k} with
# rational coefficients, e.g. "1/2-3i+j-7/4k".  An omitted coefficient means
# 1; each unit may appear at most once; a zero quaternion is written "0".

_TERM = re.compile(r"(?P<sign>[+-])?(?P<coeff>\d+/\d+|\d+\.\d+|\.\d+|\d+)?(?P<unit>[ijk])?")

_UNIT_NAMES = {"": "real", "i": "i", "j": "j", "k": "k"}


def parse_quaternion(text: str) -> Quaternion:
    """Parse a quaternion literal into an exact Quaternion.

    Raises DocumentError on empty input, stray characters, a dangling sign,
    or a duplicated term ("2+2" is rejected, not folded).
    """
    if not isinstance(text, str):
        raise DocumentError(f"quaternion literal must be a string, got {type(text).__name__}")
    s = text.replace(" ", "")
    if not s:
        raise DocumentError("empty quaternion literal")
    seen: dict[str, Fraction] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, coeff, unit = m.group("sign"), m.group("coeff"), m.group("unit")
        if coeff is None and unit is None:
            loc = f"column {pos + 1}"
            if sign is not None:
                raise DocumentError(f"dangling sign in {text!r}", loc)
            raise DocumentError(f"unexpected character {s[pos]!r} in {text!r}", loc)
        if sign is None and pos > 0:
            raise DocumentError(f"missing sign before term at column {pos + 1} in {text!r}")
        unit = unit or ""
        if unit in seen:
            raise DocumentError(f"duplicate {_UNIT_NAMES[unit]} term in {text!r}")
        value = Fraction(coeff) if coeff is not None else Fraction(1)
        if sign == "-":
            value = -value
        seen[unit] = value
        pos = m.end()
    return Quaternion(seen.get("", 0), seen.get("i", 0),
                      seen.get("j", 0), seen.get("k", 0))


def _format_component(value, unit: str, first: bool) -> str:
    if isinstance(value, float):
        body = f"{abs(value):.17g}"
    else:
        body = str(abs(value))
        if abs(value) == 1 and unit:
            body = ""
    sign = "-" if value < 0 else ("" if first else "+")
    return f"{sign}{body}{unit}"


def format_quaternion(q: Quaternion) -> str:
    """Canonical literal: terms in w, i, j, k order, zeros omitted.

    Exact components print as reduced fractions ("1/5i"); float components
    print with 17 significant digits.
    """
    parts = []
    for value, unit in zip(q.components(), ("", "i", "j", "k")):
        if value == 0:
            continue
        parts.append(_format_component(value, unit, first=not parts))
    return "".join(parts) if parts else "0"
