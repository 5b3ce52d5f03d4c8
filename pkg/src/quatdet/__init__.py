"""Exact noncommutative determinants over the quaternion skew field.

Row/column determinants with explicit anchors, the Moore and double
determinants, cofactor-based inverses, unimodular diagonalization, and
Cramer-rule solvers for left and right quaternionic linear systems, all
over arbitrary-precision rational arithmetic and cross-checkable against
a complex-embedding determinant oracle and quaternionic elimination.
"""

from .det import (DetValue, DoubleCofactorTable, cdet, cdet_cofactor, ddet,
                  double_cofactors, hermitian_det, left_cofactor, moore_det,
                  rdet, rdet_cofactor, right_cofactor)
from .errors import (DocumentError, EnumerationLimitError, IndexRangeError,
                     InternalCheckError, NonHermitianError, NonSquareError,
                     QuatError, ShapeMismatchError, SingularMatrixError,
                     UnstablePivotError, ZeroDivisorError)
from .inverse import (AuditNote, CongruenceStep, DiagonalizationResult,
                      elementary_unimodular, general_inverse,
                      hermitian_inverse, unimodular_diagonalize)
from .matrix import QMatrix
from .oracle import (CMatrix, GaussianRational, complex_det, complex_embed,
                     gauss_inverse, gauss_solve_right)
from .perm import (DEFAULT_MAX_ENUM, CyclePermutation, enumerate_permutations,
                   left_ordered, right_ordered, sign_exponent)
from .scalar import (ONE, ZERO, I, J, K, Quaternion, Rational, as_quaternion,
                     as_rational, format_quaternion, parse_quaternion)
from .solve import (SolveReport, solve_left, solve_left_hermitian,
                    solve_right, solve_right_hermitian)

__version__ = "0.1.0"

__all__ = [
    "Quaternion", "Rational", "QMatrix", "CyclePermutation",
    "DetValue", "DoubleCofactorTable", "DiagonalizationResult",
    "CongruenceStep", "AuditNote", "SolveReport",
    "CMatrix", "GaussianRational",
    "parse_quaternion", "format_quaternion", "as_quaternion", "as_rational",
    "ZERO", "ONE", "I", "J", "K",
    "enumerate_permutations", "left_ordered", "right_ordered", "sign_exponent",
    "DEFAULT_MAX_ENUM",
    "rdet", "cdet", "rdet_cofactor", "cdet_cofactor",
    "right_cofactor", "left_cofactor",
    "moore_det", "hermitian_det", "ddet", "double_cofactors",
    "elementary_unimodular", "hermitian_inverse", "general_inverse",
    "unimodular_diagonalize",
    "solve_right", "solve_left", "solve_right_hermitian", "solve_left_hermitian",
    "complex_embed", "complex_det", "gauss_solve_right", "gauss_inverse",
    "QuatError", "ShapeMismatchError", "NonSquareError", "IndexRangeError",
    "NonHermitianError", "SingularMatrixError", "ZeroDivisorError",
    "EnumerationLimitError", "UnstablePivotError", "InternalCheckError",
    "DocumentError",
]
