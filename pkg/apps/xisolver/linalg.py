"""
유리수 위의 정확한 선형대수.

소거는 fraction-free (Bareiss) 방식으로 정수 행렬 위에서 진행하고,
기약 행 사다리꼴(RREF)로 옮길 때만 Fraction 으로 나눕니다.
피벗은 열 순서로 처음 만나는 0 이 아닌 성분입니다 (크기 비교 없음).
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from django.db import models
from django.utils.translation import gettext_lazy as _

from apps.exactpoly.serialization import format_rational

from .exceptions import RaggedSystemError

logger = logging.getLogger(__name__)

Vector = list[Fraction]


class SolutionStatus(models.TextChoices):
    UNIQUE = "unique", _("유일해")
    PARAMETRIC = "parametric", _("매개변수 해")
    INCONSISTENT = "inconsistent", _("모순")


@dataclass
class LinearSystem:
    """
    각 행은 (계수 벡터, 우변) 입니다. labels 는 미지수 이름.
    """

    labels: list[str]
    rows: list[tuple[Vector, Fraction]] = field(default_factory=list)

    def __post_init__(self):
        self.rows = [self._checked(coeffs, rhs) for coeffs, rhs in self.rows]

    def _checked(self, coeffs: Sequence, rhs) -> tuple[Vector, Fraction]:
        if len(coeffs) != len(self.labels):
            raise RaggedSystemError(f"expected {len(self.labels)} columns, got {len(coeffs)}")
        return [Fraction(c) for c in coeffs], Fraction(rhs)

    @property
    def width(self) -> int:
        return len(self.labels)

    def add_row(self, coeffs: Sequence, rhs=0) -> None:
        self.rows.append(self._checked(coeffs, rhs))

    def augmented(self) -> list[Vector]:
        return [coeffs + [rhs] for coeffs, rhs in self.rows]

    def __str__(self) -> str:
        return "\n".join(format_equation(self.labels, coeffs, rhs) for coeffs, rhs in self.rows)


@dataclass
class Solution:
    status: str
    labels: list[str]
    particular: Vector | None = None
    nullspace: list[Vector] = field(default_factory=list)
    pivots: list[int] = field(default_factory=list)

    @property
    def free(self) -> list[str]:
        return [self.labels[i] for i in range(len(self.labels)) if i not in self.pivots]

    def as_dict(self) -> dict:
        return {
            "status": str(self.status),
            "labels": self.labels,
            "particular": None if self.particular is None else [format_rational(v) for v in self.particular],
            "nullspace": [[format_rational(v) for v in vec] for vec in self.nullspace],
        }

    def __str__(self) -> str:
        if self.status == SolutionStatus.INCONSISTENT:
            return "inconsistent"
        lines = []
        for i, label in enumerate(self.labels):
            parts = [format_rational(self.particular[i])]
            for vec, free_label in zip(self.nullspace, self.free, strict=True):
                if vec[i]:
                    parts.append(f"{format_rational(vec[i])}*{free_label}")
            lines.append(f"{label} = " + " + ".join(parts))
        return "\n".join(lines)


def format_equation(labels: Sequence[str], coeffs: Sequence, rhs) -> str:
    terms = [f"{format_rational(c)}*{label}" for c, label in zip(coeffs, labels, strict=True) if c]
    left = " + ".join(terms) if terms else "0"
    return f"{left} = {format_rational(rhs)}"


def format_matrix(matrix: Sequence[Sequence]) -> str:
    cells = [[format_rational(v) for v in row] for row in matrix]
    if not cells:
        return ""
    width = max(len(c) for row in cells for c in row)
    return "\n".join("[" + " ".join(c.rjust(width) for c in row) + "]" for row in cells)


def _integer_rows(matrix: Sequence[Sequence]) -> list[list[int]]:
    """행마다 분모의 최소공배수를 곱해 정수 행으로 바꿉니다 (행 공간은 그대로)."""
    out = []
    for row in matrix:
        values = [Fraction(v) for v in row]
        scale = lcm(*(v.denominator for v in values)) if values else 1
        out.append([int(v * scale) for v in values])
    return out


def bareiss_echelon(matrix: Sequence[Sequence], ncols: int | None = None) -> tuple[list[list[int]], list[int]]:
    """
    fraction-free 전진 소거. (사다리꼴 정수 행렬, 피벗 열 목록) 을 돌려줍니다.
    ncols 가 주어지면 그 앞쪽 열에서만 피벗을 고릅니다 (첨가 행렬의 우변 열 제외용).
    """
    rows = _integer_rows(matrix)
    if not rows:
        return rows, []
    width = len(rows[0])
    limit = width if ncols is None else ncols
    pivots: list[int] = []
    previous = 1
    r = 0
    for c in range(limit):
        found = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if found is None:
            continue
        if found != r:
            rows[r], rows[found] = rows[found], rows[r]
        pivot = rows[r][c]
        for i in range(r + 1, len(rows)):
            factor = rows[i][c]
            row_i = rows[i]
            row_r = rows[r]
            # Sylvester 항등식에 의해 나눗셈은 항상 정확합니다
            rows[i] = [(pivot * row_i[j] - factor * row_r[j]) // previous for j in range(width)]
        previous = pivot
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rref(matrix: Sequence[Sequence], ncols: int | None = None) -> tuple[list[Vector], list[int]]:
    """기약 행 사다리꼴과 피벗 열 목록. 영행은 제거됩니다."""
    echelon, pivots = bareiss_echelon(matrix, ncols)
    reduced = [[Fraction(v) for v in echelon[i]] for i in range(len(pivots))]
    for i, c in enumerate(pivots):
        head = reduced[i][c]
        reduced[i] = [v / head for v in reduced[i]]
    for i in range(len(pivots) - 1, -1, -1):
        c = pivots[i]
        for k in range(i):
            factor = reduced[k][c]
            if factor:
                reduced[k] = [a - factor * b for a, b in zip(reduced[k], reduced[i], strict=True)]
    # ncols 밖에서 피벗이 나오는 행(모순 행)은 echelon 에서 그대로 남깁니다
    extra = [[Fraction(v) for v in row] for row in echelon[len(pivots) :] if any(row)]
    return reduced + extra, pivots


def rank(matrix: Sequence[Sequence]) -> int:
    return len(bareiss_echelon(matrix)[1])


def _null_vectors(reduced: list[Vector], pivots: list[int], ncols: int) -> list[Vector]:
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for i, c in enumerate(pivots):
            vec[c] = -reduced[i][f]
        basis.append(vec)
    return basis


def normalize_leading(vec: Vector) -> Vector:
    """첫 번째 0 이 아닌 좌표를 1 로 맞춥니다."""
    head = next((v for v in vec if v), None)
    if head is None:
        return list(vec)
    return [v / head for v in vec]


def nullspace(matrix: Sequence[Sequence], ncols: int | None = None, normalize: bool = True) -> list[Vector]:
    """
    동차 연립방정식의 해공간 기저.
    normalize=True 이면 각 기저 벡터의 첫 0 이 아닌 좌표를 1 로 둡니다.
    """
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    if not matrix:
        basis = [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    else:
        reduced, pivots = rref(matrix)
        basis = _null_vectors(reduced, pivots, ncols)
    return [normalize_leading(v) for v in basis] if normalize else basis


def solve_exact(system: LinearSystem) -> Solution:
    """유일해 / 매개변수 해 / 모순 세 가지를 구분해 돌려줍니다."""
    n = system.width
    if not system.rows:
        return Solution(
            status=SolutionStatus.PARAMETRIC if n else SolutionStatus.UNIQUE,
            labels=system.labels,
            particular=[Fraction(0)] * n,
            nullspace=nullspace([], ncols=n, normalize=False),
        )
    reduced, pivots = rref(system.augmented(), ncols=n)
    # 계수가 모두 0 인데 우변이 0 이 아닌 행이 있으면 모순
    for row in reduced:
        if not any(row[:n]) and row[n]:
            logger.debug(f"solve_exact: inconsistent row rhs={row[n]}")
            return Solution(status=SolutionStatus.INCONSISTENT, labels=system.labels, pivots=pivots)
    particular = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        particular[c] = reduced[i][n]
    basis = _null_vectors([row[:n] for row in reduced], pivots, n)
    status = SolutionStatus.UNIQUE if not basis else SolutionStatus.PARAMETRIC
    logger.debug(f"solve_exact: {len(system.rows)} rows, rank {len(pivots)}, status {status}")
    return Solution(status=status, labels=system.labels, particular=particular, nullspace=basis, pivots=pivots)
