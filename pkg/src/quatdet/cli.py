"""Command-line front end: parse matrix documents, compute, emit JSON.

Documents are JSON objects ``{"rows": m, "cols": n, "data": [[...]]}`` whose
entries are quaternion literal strings ("1/2-3i+j-7/4k"); a 4-element array
form ``[w, x, y, z]`` of rational strings or numbers is accepted on input.
Results are printed as JSON with exact literal values on the rational
backend; ``--float`` switches to the approximate backend and prints 17
significant digits.

Exit codes: 0 success, 1 mathematical failure (singular system,
non-Hermitian input where one is required, refused enumeration), 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import det as _det
from . import __version__
from .errors import DocumentError, QuatError
from .inverse import (CongruenceStep, elementary_unimodular, general_inverse,
                      unimodular_diagonalize)
from .matrix import QMatrix
from .oracle import complex_det, complex_embed, gauss_inverse, gauss_solve_right
from .scalar import Quaternion, as_rational, format_quaternion, parse_quaternion
from .solve import solve_left, solve_right


@dataclass(frozen=True)
class MatrixDocument:
    """The on-disk shape of a matrix: literal strings in a rows x cols grid."""

    rows: int
    cols: int
    data: tuple[tuple[str, ...], ...]

    def to_json_obj(self) -> dict:
        return {"rows": self.rows, "cols": self.cols,
                "data": [list(row) for row in self.data]}


def matrix_document(A: QMatrix) -> MatrixDocument:
    return MatrixDocument(
        A.rows, A.cols,
        tuple(tuple(format_quaternion(q) for q in A.row(i))
              for i in range(1, A.rows + 1)))


def _entry_to_quaternion(value, where: str) -> Quaternion:
    if isinstance(value, str):
        try:
            return parse_quaternion(value)
        except DocumentError as exc:
            raise DocumentError(str(exc), location=where) from None
    if isinstance(value, (list, tuple)):
        if len(value) != 4:
            raise DocumentError(
                f"component form needs exactly 4 values, got {len(value)}", location=where)
        comps = []
        for v in value:
            if isinstance(v, bool) or not isinstance(v, (int, str, Fraction)):
                raise DocumentError(
                    f"bad component {v!r}; use integers or rational strings", location=where)
            comps.append(as_rational(v))
        return Quaternion(*comps)
    raise DocumentError(
        f"entry must be a literal string or a 4-component array, got "
        f"{type(value).__name__}", location=where)


def parse_matrix(source) -> QMatrix:
    """Build an exact matrix from a document: a file path, JSON text, or dict."""
    if isinstance(source, Path) or (isinstance(source, str) and "\n" not in source
                                    and not source.lstrip().startswith("{")):
        path = Path(source)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise DocumentError(f"cannot read matrix file {source!r}: {exc}") from None
    elif isinstance(source, str):
        text = source
    else:
        return _matrix_from_obj(source)
    try:
        obj = json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc.msg}",
                            location=f"line {exc.lineno} column {exc.colno}") from None
    return _matrix_from_obj(obj)


def _matrix_from_obj(obj) -> QMatrix:
    if not isinstance(obj, dict):
        raise DocumentError(f"matrix document must be a JSON object, got "
                            f"{type(obj).__name__}")
    for key in ("rows", "cols", "data"):
        if key not in obj:
            raise DocumentError(f"matrix document is missing {key!r}")
    rows, cols, data = obj["rows"], obj["cols"], obj["data"]
    if not (isinstance(rows, int) and isinstance(cols, int) and rows > 0 and cols > 0):
        raise DocumentError(f"rows/cols must be positive integers, got {rows!r}/{cols!r}")
    if not isinstance(data, list) or len(data) != rows:
        raise DocumentError(f"data must be a list of {rows} rows")
    entries = []
    for i, row in enumerate(data, start=1):
        if not isinstance(row, list) or len(row) != cols:
            raise DocumentError(f"row {i} must be a list of {cols} entries")
        for j, value in enumerate(row, start=1):
            entries.append(_entry_to_quaternion(value, f"data[{i}][{j}]"))
    return QMatrix(rows, cols, entries)


def _fmt_real(value) -> str:
    if isinstance(value, float):
        return f"{value:.17g}"
    return str(value)


def _fmt_rows(A: QMatrix) -> list[list[str]]:
    return matrix_document(A).to_json_obj()["data"]


def _emit(obj) -> int:
    print(json.dumps(obj))
    return 0


# -- subcommand handlers -------------------------------------------------------


def _load(args, attr="file") -> QMatrix:
    A = parse_matrix(getattr(args, attr))
    if args.float:
        A = A.to_float()
    return A


def _emit_det(record: _det.DetValue) -> int:
    return _emit({"value": format_quaternion(record.value)})


def _cmd_rdet(args):
    value = _det.rdet(_load(args), args.row, max_enum=args.max_enum)
    return _emit_det(_det.DetValue(value, "direct", args.row))


def _cmd_cdet(args):
    value = _det.cdet(_load(args), args.col, max_enum=args.max_enum)
    return _emit_det(_det.DetValue(value, "direct", args.col))


def _cmd_det(args):
    value = _det.hermitian_det(_load(args), paranoid=args.paranoid,
                               max_enum=args.max_enum)
    return _emit({"value": _fmt_real(value)})


def _cmd_moore(args):
    value = _det.moore_det(_load(args), max_enum=args.max_enum)
    return _emit_det(_det.DetValue(value, "moore", 1))


def _cmd_ddet(args):
    value = _det.ddet(_load(args), paranoid=args.paranoid, max_enum=args.max_enum)
    return _emit({"value": _fmt_real(value), "singular": not value})


def _cmd_cofactors(args):
    table = _det.double_cofactors(_load(args), max_enum=args.max_enum)
    return _emit({
        "n": table.n,
        "left": [[format_quaternion(q) for q in row] for row in table.left],
        "right": [[format_quaternion(q) for q in row] for row in table.right],
    })


def _cmd_inv(args):
    A = _load(args)
    inv = general_inverse(A, max_enum=args.max_enum)
    return _emit({"inverse": _fmt_rows(inv),
                  "ddet": _fmt_real(_det.ddet(A, max_enum=args.max_enum))})


def _render_step(step) -> str:
    if isinstance(step, CongruenceStep):
        return f"P[{step.i},{step.j}]({format_quaternion(step.b)}): {step.note}"
    return step.note


def _cmd_diag(args):
    result = unimodular_diagonalize(_load(args))
    return _emit({
        "mu": [_fmt_real(m) for m in result.mu],
        "U": _fmt_rows(result.U),
        "steps": [_render_step(s) for s in result.steps],
    })


def _cmd_solve(args):
    A = parse_matrix(args.matrix)
    y = parse_matrix(args.rhs)
    if args.float:
        A, y = A.to_float(), y.to_float()
    if 1 not in (y.rows, y.cols):
        raise DocumentError(f"rhs must be a vector document, got {y.rows}x{y.cols}")
    solver = solve_right if args.side == "right" else solve_left
    report = solver(A, y.entries, max_enum=args.max_enum)
    return _emit({
        "solution": [format_quaternion(q) for q in report.solution],
        "ddet": _fmt_real(report.ddet),
        "numerators": [format_quaternion(q) for q in report.numerators],
        "side": report.side,
        "hermitian_fast_path": report.hermitian_fast_path,
    })


def _cmd_oracle(args):
    A = _load(args)
    d = _det.ddet(A, max_enum=args.max_enum)
    s = complex_det(complex_embed(A))
    return _emit({
        "ddet": _fmt_real(d),
        "embedding_det": _fmt_real(s.re) if not s.im else
        f"{_fmt_real(s.re)}+{_fmt_real(s.im)}i",
        "match": s.im == 0 and s.re == d,
    })


def _cmd_check(args):
    A = parse_matrix(args.file)  # checks are exact equalities; --float is ignored
    results = run_checks(A, max_enum=args.max_enum)
    ok = all(r["status"] != "fail" for r in results)
    _emit({"checks": results, "ok": ok})
    return 0 if ok else 1


def _random_rational(rng) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def _random_quaternion(rng) -> Quaternion:
    return Quaternion(*(_random_rational(rng) for _ in range(4)))


def _cmd_random(args):
    rows = args.rows
    cols = args.cols if args.cols is not None else rows
    rng = random.Random(args.seed)
    if args.hermitian:
        if rows != cols:
            raise DocumentError("a Hermitian matrix must be square")
        grid = [[None] * cols for _ in range(rows)]
        for i in range(rows):
            grid[i][i] = Quaternion(_random_rational(rng))
            for j in range(i + 1, cols):
                q = _random_quaternion(rng)
                grid[i][j] = q
                grid[j][i] = q.conj()
        A = QMatrix.from_rows(grid)
    else:
        A = QMatrix(rows, cols,
                    [_random_quaternion(rng) for _ in range(rows * cols)])
    return _emit(matrix_document(A).to_json_obj())


# -- the invariant suite (check subcommand) ------------------------------------

_B = Quaternion(1, 2, 0, -1)   # fixed generic multipliers for the identity checks
_C = Quaternion(0, 1, -1, 2)


def _check_entry(name, func):
    try:
        detail = func()
    except (QuatError, AssertionError) as exc:
        return {"name": name, "status": "fail", "detail": str(exc)}
    entry = {"name": name, "status": "pass"}
    if detail:
        entry["detail"] = detail
    return entry


def _skip(name, why):
    return {"name": name, "status": "skip", "detail": why}


def run_checks(A: QMatrix, max_enum: int | None = None) -> list[dict]:
    """Exercise the library's named identities on one concrete matrix.

    Returns one pass/fail/skip record per named identity; checks that do
    not apply to the given shape (non-square, too large to enumerate,
    singular) are reported as skipped, never silently dropped.
    """
    limit = _det.DEFAULT_MAX_ENUM if max_enum is None else max_enum
    results = []
    astar = A.conj_transpose()

    def add(name, func):
        results.append(_check_entry(name, func))

    add("conj-transpose-involution",
        lambda: _expect(astar.conj_transpose() == A, "(A*)* != A"))
    add("corresponding-hermitian-sides", lambda: _expect(
        A.corresponding_hermitian("left").is_hermitian()
        and A.corresponding_hermitian("right").is_hermitian(),
        "A*A or AA* failed the hermiticity test"))
    add("embedding-respects-adjoint", lambda: _expect(
        complex_embed(astar) == complex_embed(A).conj_transpose(),
        "embed(A*) != embed(A)*"))
    add("embedding-respects-product", lambda: _expect(
        complex_embed(A @ astar) == complex_embed(A) @ complex_embed(astar),
        "embed(A A*) != embed(A) embed(A*)"))

    if A.rows != A.cols:
        results.append(_skip("anchored-determinants", "matrix is not square"))
        return results
    n = A.rows
    if n > limit:
        results.append(_skip("anchored-determinants",
                             f"n={n} exceeds max_enum={limit}"))
        return results

    anchors = range(1, n + 1)
    add("adjoint-duality", lambda: _expect(
        all(_det.rdet(astar, i, max_enum=limit)
            == _det.cdet(A, i, max_enum=limit).conj() for i in anchors),
        "rdet_i(A*) != conj(cdet_i(A))"))
    add("cofactor-expansion", lambda: _expect(
        all(_det.rdet_cofactor(A, i, max_enum=limit) == _det.rdet(A, i, max_enum=limit)
            and _det.cdet_cofactor(A, i, max_enum=limit) == _det.cdet(A, i, max_enum=limit)
            for i in anchors),
        "cofactor expansion disagrees with direct enumeration"))
    add("double-det-symmetry", lambda: _expect(
        _det.hermitian_det(A @ astar, max_enum=limit)
        == _det.hermitian_det(astar @ A, max_enum=limit),
        "det(AA*) != det(A*A)"))
    add("embedding-determinant", lambda: _expect_oracle(A, limit))
    add("row-scaling", lambda: _expect(
        _det.rdet(A.replace_row(1, [_B * q for q in A.row(1)]), 1, max_enum=limit)
        == _B * _det.rdet(A, 1, max_enum=limit),
        "left-scaled row did not factor out"))
    add("column-scaling", lambda: _expect(
        _det.cdet(A.replace_column(1, [q * _B for q in A.col(1)]), 1, max_enum=limit)
        == _det.cdet(A, 1, max_enum=limit) * _B,
        "right-scaled column did not factor out"))
    add("split-additivity", lambda: _expect_additivity(A, limit))
    add("zero-row-vanishing", lambda: _expect(
        all(_det.rdet(A.replace_row(1, [0] * n), i, max_enum=limit).is_zero()
            and _det.cdet(A.replace_row(1, [0] * n), i, max_enum=limit).is_zero()
            for i in anchors),
        "determinant of a matrix with a zero row is not 0"))

    if A.is_hermitian():
        add("hermitian-consensus", lambda: _fmt_real(
            _det.hermitian_det(A, paranoid=True, max_enum=limit)))
        add("moore-equivalence", lambda: _expect(
            _det.moore_det(A, max_enum=limit)
            == Quaternion(_det.hermitian_det(A, max_enum=limit)),
            "Moore recursion disagrees with the anchored determinants"))
        if n >= 2:
            add("replacement-vanishing", lambda: _expect_vanishing(A, limit))
            add("combination-preservation", lambda: _expect_combination(A, limit))
        add("unimodular-invariance", lambda: _expect_congruence(A, limit))
        add("diagonalization", lambda: _expect_diagonalization(A, limit))

    d = _det.ddet(A, max_enum=limit)
    if not d:
        results.append(_skip("inverse-and-solve", "matrix is singular (ddet 0)"))
        return results
    add("general-inverse", lambda: _expect_inverse(A, limit))
    add("cramer-right", lambda: _expect_cramer(A, limit, "right"))
    add("cramer-left", lambda: _expect_cramer(A, limit, "left"))
    return results


def _expect(condition, message):
    if not condition:
        raise AssertionError(message)
    return None


def _expect_oracle(A, limit):
    d = _det.ddet(A, max_enum=limit)
    s = complex_det(complex_embed(A))
    _expect(s.im == 0 and s.re == d, f"embedding determinant {s!r} != ddet {d}")
    return None


def _expect_additivity(A, limit):
    n = A.rows
    ones = [Quaternion(1)] * n
    rest = [q - 1 for q in A.row(1)]
    for i in range(1, n + 1):
        lhs = _det.rdet(A, i, max_enum=limit)
        parts = (_det.rdet(A.replace_row(1, ones), i, max_enum=limit)
                 + _det.rdet(A.replace_row(1, rest), i, max_enum=limit))
        _expect(lhs == parts, f"row split additivity failed at anchor {i}")
        lhs = _det.cdet(A, i, max_enum=limit)
        parts = (_det.cdet(A.replace_row(1, ones), i, max_enum=limit)
                 + _det.cdet(A.replace_row(1, rest), i, max_enum=limit))
        _expect(lhs == parts, f"column-functional split additivity failed at anchor {i}")
    return None


def _expect_vanishing(A, limit):
    i, j = 1, 2
    checks = [
        ("row copy", _det.rdet(A.replace_row(j, A.row(i)), j, max_enum=limit)),
        ("column copy", _det.cdet(A.replace_column(i, A.col(j)), i, max_enum=limit)),
        ("scaled row (rdet)",
         _det.rdet(A.replace_row(i, [_B * q for q in A.row(j)]), i, max_enum=limit)),
        ("scaled column (cdet)",
         _det.cdet(A.replace_column(j, [q * _B for q in A.col(i)]), j, max_enum=limit)),
        ("scaled column (rdet)",
         _det.rdet(A.replace_column(j, [q * _B for q in A.col(i)]), j, max_enum=limit)),
        ("scaled row (cdet)",
         _det.cdet(A.replace_row(i, [_B * q for q in A.row(j)]), i, max_enum=limit)),
    ]
    for label, value in checks:
        _expect(value.is_zero(), f"{label} replacement determinant is {value}, not 0")
    return None


def _expect_combination(A, limit):
    n = A.rows
    d = Quaternion(_det.hermitian_det(A, max_enum=limit))
    combo_row = [a + _B * b for a, b in zip(A.row(1), A.row(2))]
    if n >= 3:
        combo_row = [a + _C * c for a, c in zip(combo_row, A.row(3))]
    edited = A.replace_row(1, combo_row)
    _expect(_det.rdet(edited, 1, max_enum=limit) == d
            and _det.cdet(edited, 1, max_enum=limit) == d,
            "adding a left combination of other rows changed the determinant")
    combo_col = [a + b * _B for a, b in zip(A.col(1), A.col(2))]
    if n >= 3:
        combo_col = [a + c * _C for a, c in zip(combo_col, A.col(3))]
    edited = A.replace_column(1, combo_col)
    _expect(_det.cdet(edited, 1, max_enum=limit) == d
            and _det.rdet(edited, 1, max_enum=limit) == d,
            "adding a right combination of other columns changed the determinant")
    return None


def _expect_congruence(A, limit):
    n = A.rows
    if n < 2:
        return "needs n >= 2"
    p = elementary_unimodular(n, 1, 2, _B)
    before = _det.hermitian_det(A, max_enum=limit)
    after = _det.hermitian_det(p @ A @ p.conj_transpose(), max_enum=limit)
    _expect(before == after, f"det changed under congruence: {before} -> {after}")
    return None


def _expect_diagonalization(A, limit):
    result = unimodular_diagonalize(A)
    n = A.rows
    transformed = result.U @ A @ result.U.conj_transpose()
    _expect(transformed == QMatrix(n, n, [
        result.mu[r] if r == c else 0 for r in range(n) for c in range(n)]),
        "U A U* is not the reported diagonal")
    product = Fraction(1)
    for m in result.mu:
        product *= m
    _expect(product == _det.hermitian_det(A, max_enum=limit),
            "product of diagonal values != det A")
    _expect(result.rebuild_u() == result.U,
            "step log does not rebuild U")
    return None


def _expect_inverse(A, limit):
    n = A.rows
    inv = general_inverse(A, max_enum=limit)
    eye = QMatrix.identity(n)
    _expect(A @ inv == eye and inv @ A == eye, "A A^-1 or A^-1 A is not the identity")
    _expect(inv == gauss_inverse(A), "adjugate inverse disagrees with elimination")
    return None


def _units_vector(n):
    units = [Quaternion(1), Quaternion(0, 1), Quaternion(0, 0, 1), Quaternion(0, 0, 0, 1)]
    return [units[t % 4] + t for t in range(n)]


def _expect_cramer(A, limit, side):
    n = A.rows
    y = _units_vector(n)
    if side == "right":
        report = solve_right(A, y, max_enum=limit)
        residual_ok = all(
            sum((A[i, k] * report.solution[k - 1] for k in range(1, n + 1)), Quaternion(0)) == y[i - 1]
            for i in range(1, n + 1))
        _expect(residual_ok, "A x != y")
        _expect(tuple(gauss_solve_right(A, y)) == report.solution,
                "Cramer solution disagrees with elimination")
    else:
        report = solve_left(A, y, max_enum=limit)
        residual_ok = all(
            sum((report.solution[k - 1] * A[k, j] for k in range(1, n + 1)), Quaternion(0)) == y[j - 1]
            for j in range(1, n + 1))
        _expect(residual_ok, "x A != y")
    return None


# -- argument parsing -----------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--float", action="store_true",
                        help="use the approximate float backend (17-digit output)")
    shared.add_argument("--paranoid", action="store_true",
                        help="verify all 2n anchored determinants where applicable")
    shared.add_argument("--max-enum", type=int, default=None, dest="max_enum",
                        metavar="N", help="largest n for n! enumeration (default 8)")

    parser = argparse.ArgumentParser(
        prog="quatdet",
        description="Exact determinants, inverses and Cramer solvers for "
                    "quaternion matrices.",
        parents=[shared])
    parser.add_argument("--version", action="version", version=f"quatdet {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def command(name, handler, help_text, **kwargs):
        p = sub.add_parser(name, parents=[shared], help=help_text, **kwargs)
        p.set_defaults(handler=handler)
        return p

    p = command("rdet", _cmd_rdet, "row determinant at an explicit anchor")
    p.add_argument("--row", type=int, required=True, metavar="I")
    p.add_argument("file")

    p = command("cdet", _cmd_cdet, "column determinant at an explicit anchor")
    p.add_argument("--col", type=int, required=True, metavar="J")
    p.add_argument("file")

    p = command("det", _cmd_det, "determinant of a Hermitian matrix")
    p.add_argument("file")

    p = command("moore", _cmd_moore, "Moore recursion on a Hermitian matrix")
    p.add_argument("file")

    p = command("ddet", _cmd_ddet, "double determinant det(A*A)")
    p.add_argument("file")

    p = command("cofactors", _cmd_cofactors, "left/right double cofactor tables")
    p.add_argument("file")

    p = command("inv", _cmd_inv, "inverse matrix (requires ddet != 0)")
    p.add_argument("file")

    p = command("diag", _cmd_diag, "unimodular congruence diagonalization")
    p.add_argument("file")

    p = command("solve", _cmd_solve, "Cramer solution of a linear system")
    p.add_argument("--side", choices=("right", "left"), required=True)
    p.add_argument("--matrix", required=True)
    p.add_argument("--rhs", required=True)

    p = command("check", _cmd_check,
                "run the invariant suite on a matrix (always exact)")
    p.add_argument("file")

    p = command("oracle", _cmd_oracle, "cross-check ddet against the complex embedding")
    p.add_argument("file")

    p = command("random", _cmd_random, "emit a reproducible random matrix document")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--rows", type=int, default=3)
    p.add_argument("--cols", type=int, default=None)
    p.add_argument("--hermitian", action="store_true")

    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except DocumentError as exc:
        print(f"quatdet: {exc}", file=sys.stderr)
        return 2
    except QuatError as exc:
        print(f"quatdet: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
