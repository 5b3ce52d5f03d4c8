"""Exception types shared by the whole package.

Everything derives from QuatError so callers can catch domain failures with
one except clause; each class also subclasses the closest builtin so that
generic code (``except ValueError``) keeps working.
"""


class QuatError(Exception):
    """Base class for all errors raised by this package."""


class ShapeMismatchError(QuatError, ValueError):
    """Operand shapes are incompatible (matmul, replacement length, rhs size)."""


class NonSquareError(ShapeMismatchError):
    """A square matrix was required."""


class IndexRangeError(QuatError, IndexError):
    """A 1-based row/column index is outside the matrix."""


class NonHermitianError(QuatError, ValueError):
    """A Hermitian matrix was required."""


class SingularMatrixError(QuatError, ValueError):
    """Determinant certificate is zero; inverse/solve is impossible.

    The offending certificate value (det or ddet) is kept in ``certificate``.
    """

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class ZeroDivisorError(QuatError, ZeroDivisionError):
    """Inverse of the zero quaternion."""


class EnumerationLimitError(QuatError, ValueError):
    """n! enumeration refused because n exceeds the configured max_enum."""


class UnstablePivotError(QuatError, ArithmeticError):
    """Float backend refused a pivot too close to zero to divide safely."""


class InternalCheckError(QuatError, AssertionError):
    """A self-consistency assertion failed; this signals a bug, not bad input."""


class DocumentError(QuatError, ValueError):
    """Malformed matrix document or quaternion literal.

    ``location`` is a human-readable position ("line 3 column 7" or
    "data[2][1]") when one is known.
    """

    def __init__(self, message, location=None):
        if location:
            message = f"{message} ({location})"
        super().__init__(message)
        self.location = location
