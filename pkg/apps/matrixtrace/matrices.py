"""
MultiPoly 성분을 갖는 3x3 행렬.

수치 평가도 항상 poly_subst 를 거칩니다 (행렬 성분은 숫자가 아닌 다항식).
"""

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction

from apps.exactpoly.polynomial import MultiPoly, poly_subst, poly_sum
from apps.exactpoly.registry import matrix_var

from .exceptions import EmptyWordError, MatrixShapeError, NonTracelessMatrixError

logger = logging.getLogger(__name__)

N = 3


@dataclass(frozen=True)
class GenericMatrix:
    entries: tuple[tuple[MultiPoly, ...], ...]

    def __post_init__(self):
        if len(self.entries) != N or any(len(row) != N for row in self.entries):
            raise MatrixShapeError(len(self.entries))

    def entry(self, row: int, col: int) -> MultiPoly:
        """행/열 번호는 1부터."""
        return self.entries[row - 1][col - 1]

    def __add__(self, other: "GenericMatrix") -> "GenericMatrix":
        return mat_add(self, other)

    def __sub__(self, other: "GenericMatrix") -> "GenericMatrix":
        return mat_add(self, mat_scale(other, -1))

    def __mul__(self, other):
        if isinstance(other, GenericMatrix):
            return mat_mul(self, other)
        return mat_scale(self, other)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def __str__(self) -> str:
        return "\n".join(" | ".join(str(e) for e in row) for row in self.entries)


def _from_rows(rows: Sequence[Sequence]) -> GenericMatrix:
    return GenericMatrix(
        tuple(tuple(e if isinstance(e, MultiPoly) else MultiPoly.constant(e) for e in row) for row in rows)
    )


def numeric_matrix(rows: Sequence[Sequence]) -> GenericMatrix:
    """정수/유리수 또는 다항식 행 목록으로 행렬을 만듭니다."""
    if len(rows) != N:
        raise MatrixShapeError(len(rows))
    return _from_rows(rows)


def identity_matrix() -> GenericMatrix:
    return _from_rows([[Fraction(int(i == j)) for j in range(N)] for i in range(N)])


def generic_matrix(prefix: str) -> GenericMatrix:
    """9개의 독립 변수를 갖는 일반 행렬 (Cayley-Hamilton 검사용)."""
    return _from_rows(
        [[MultiPoly.var(matrix_var(prefix, i, j)) for j in range(1, N + 1)] for i in range(1, N + 1)]
    )


def generic_traceless(prefix: str) -> GenericMatrix:
    """8개의 독립 변수, (3,3) 성분은 -(p11 + p22)."""
    rows = [[MultiPoly.var(matrix_var(prefix, i, j)) for j in range(1, N + 1)] for i in range(1, N + 1)]
    rows[2][2] = -(rows[0][0] + rows[1][1])
    return _from_rows(rows)


def generic_traceless_y() -> GenericMatrix:
    return generic_traceless("y")


def generic_traceless_x() -> GenericMatrix:
    return generic_traceless("x")


def diagonal_traceless_x() -> GenericMatrix:
    """diag(x1, x2, -(x1 + x2))."""
    x1, x2 = MultiPoly.var("x1"), MultiPoly.var("x2")
    return _from_rows([[x1, 0, 0], [0, x2, 0], [0, 0, -(x1 + x2)]])


def mat_add(a: GenericMatrix, b: GenericMatrix) -> GenericMatrix:
    return _from_rows([[a.entries[i][j] + b.entries[i][j] for j in range(N)] for i in range(N)])


def mat_scale(a: GenericMatrix, factor) -> GenericMatrix:
    return _from_rows([[a.entries[i][j] * factor for j in range(N)] for i in range(N)])


def mat_mul(a: GenericMatrix, b: GenericMatrix) -> GenericMatrix:
    rows = []
    for i in range(N):
        row = []
        for j in range(N):
            # 0 성분은 건너뛰어 대각 행렬과의 곱을 가볍게 유지
            row.append(
                poly_sum(
                    a.entries[i][k] * b.entries[k][j]
                    for k in range(N)
                    if a.entries[i][k] and b.entries[k][j]
                )
            )
        rows.append(row)
    return _from_rows(rows)


def mat_subst(a: GenericMatrix, assignment: Mapping) -> GenericMatrix:
    return _from_rows([[poly_subst(e, assignment) for e in row] for row in a.entries])


def trace(a: GenericMatrix) -> MultiPoly:
    return poly_sum(a.entries[i][i] for i in range(N))


def trace_word(word: Sequence[GenericMatrix]) -> MultiPoly:
    """tr(a1 a2 ... ak). 마지막 곱은 대각 성분만 계산합니다."""
    if not word:
        raise EmptyWordError()
    if len(word) == 1:
        return trace(word[0])
    prefix = word[0]
    for m in word[1:-1]:
        prefix = mat_mul(prefix, m)
    last = word[-1]
    return poly_sum(
        prefix.entries[i][k] * last.entries[k][i]
        for i in range(N)
        for k in range(N)
        if prefix.entries[i][k] and last.entries[k][i]
    )


def newton_elementary(p1, p2, p3) -> tuple[MultiPoly, MultiPoly, MultiPoly]:
    """
    거듭제곱 합 p1, p2, p3 로부터 기본 대칭 함수 e1, e2, e3 (Newton 공식).
    """
    p1, p2, p3 = (p if isinstance(p, MultiPoly) else MultiPoly.constant(p) for p in (p1, p2, p3))
    e1 = p1
    e2 = (p1 * p1 - p2) / 2
    e3 = (2 * p3 - 3 * p1 * p2 + p1 * p1 * p1) / 6
    return e1, e2, e3


def cayley_hamilton_residual(z: GenericMatrix) -> GenericMatrix:
    """z^3 - e1 z^2 + e2 z - e3 e. 모든 3x3 행렬에서 영행렬이어야 합니다."""
    z2 = mat_mul(z, z)
    z3 = mat_mul(z2, z)
    e1, e2, e3 = newton_elementary(trace(z), trace(z2), trace(z3))
    return z3 - z2 * e1 + z * e2 - identity_matrix() * e3


def traceless_ch_matrix_residual(z: GenericMatrix) -> GenericMatrix:
    """tr(z)=0 일 때 z^3 - 1/2 tr(z^2) z - 1/3 tr(z^3) e."""
    _require_traceless(z)
    z2 = mat_mul(z, z)
    z3 = mat_mul(z2, z)
    return z3 - z * (trace(z2) / 2) - identity_matrix() * (trace(z3) / 3)


def ch_traceless_identity(z: GenericMatrix) -> MultiPoly:
    """tr(z^4) - 1/2 tr^2(z^2). 일반 무대각합 행렬에서 영다항식입니다."""
    _require_traceless(z)
    z2 = mat_mul(z, z)
    t2 = trace(z2)
    residual = trace_word([z2, z2]) - t2 * t2 / 2
    logger.debug(f"ch_traceless_identity residual terms: {len(residual)}")
    return residual


def _require_traceless(z: GenericMatrix) -> None:
    t = trace(z)
    if not t.is_zero():
        raise NonTracelessMatrixError(str(t))
