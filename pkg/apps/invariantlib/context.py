"""
불변식 계산 컨텍스트.

x, y 두 무대각합 행렬과 대각합 단어 캐시를 묶습니다.
기본은 x 대각 (x1, x2), y 일반 무대각합 (자유 변수 8개) 입니다.
"""

import logging
from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from apps.exactpoly.polynomial import MultiPoly, poly_diff, poly_sum
from apps.matrixtrace.matrices import (
    GenericMatrix,
    diagonal_traceless_x,
    generic_traceless_x,
    generic_traceless_y,
    mat_subst,
    numeric_matrix,
    trace_word,
)
from apps.traceword.words import FormalTraceCombo
from utils.cache_keys import get_element_cache_key, get_trace_cache_key

from .exceptions import DerivationUnavailableError

logger = logging.getLogger(__name__)

Y_FREE = ("y11", "y12", "y13", "y21", "y22", "y23", "y31", "y32")
X_FREE = ("x11", "x12", "x13", "x21", "x22", "x23", "x31", "x32")

# 생성원과 w_i 에 쓰이는 단어 (길이 2, 3, 4, 6)
WARM_UP_WORDS = ("xx", "xy", "yy", "xxx", "xxy", "xyy", "yyy", "xxyy", "xyxy", "xxyyxy", "yyxxyx")


@dataclass
class InvariantContext:
    """
    delta_images: 자유 y 변수 -> delta 상 (x 의 대응 성분).
    비어 있으면 (수치 특수화) delta 를 쓸 수 없습니다.
    """

    label: str
    x: GenericMatrix
    y: GenericMatrix
    x_vars: tuple[str, ...] = ()
    y_vars: tuple[str, ...] = ()
    delta_images: dict[str, MultiPoly] = field(default_factory=dict)
    _cache: dict[str, MultiPoly] = field(default_factory=dict, repr=False)

    @classmethod
    def diagonal(cls) -> "InvariantContext":
        x1, x2 = MultiPoly.var("x1"), MultiPoly.var("x2")
        return cls(
            label="diagonal",
            x=diagonal_traceless_x(),
            y=generic_traceless_y(),
            x_vars=("x1", "x2"),
            y_vars=Y_FREE,
            delta_images={"y11": x1, "y22": x2},
        )

    @classmethod
    def generic(cls) -> "InvariantContext":
        return cls(
            label="generic",
            x=generic_traceless_x(),
            y=generic_traceless_y(),
            x_vars=X_FREE,
            y_vars=Y_FREE,
            delta_images={y: MultiPoly.var(x) for y, x in zip(Y_FREE, X_FREE, strict=True)},
        )

    @classmethod
    def specialized(cls, y_rows: Sequence[Sequence], x_values: Mapping | None = None) -> "InvariantContext":
        """x 는 대각 (x_values 로 x1, x2 를 대입 가능), y 는 주어진 행렬."""
        x = diagonal_traceless_x()
        if x_values:
            x = mat_subst(x, x_values)
        x_vars = tuple(v for v in ("x1", "x2") if not x_values or v not in x_values)
        return cls(label="specialized", x=x, y=numeric_matrix(y_rows), x_vars=x_vars)

    def swapped(self) -> "InvariantContext":
        """x, y 의 역할을 바꾼 컨텍스트 (캐시는 새로)."""
        return InvariantContext(
            label=f"{self.label}-swapped", x=self.y, y=self.x, x_vars=self.y_vars, y_vars=self.x_vars
        )

    def trace(self, word: str) -> MultiPoly:
        """소문자 x, y 로 된 단어의 대각합. 회전 동치 단어는 캐시를 공유합니다."""
        key = get_trace_cache_key(word)
        value = self._cache.get(key)
        if value is None:
            matrices = {"x": self.x, "y": self.y}
            value = trace_word([matrices[c] for c in word.lower()])
            self._cache[key] = value
            logger.debug(f"[{self.label}] {key}: {len(value)} terms")
        return value

    def remember(self, name: str, build: Callable[[], MultiPoly], **params) -> MultiPoly:
        key = get_element_cache_key(name, **params)
        value = self._cache.get(key)
        if value is None:
            value = build()
            self._cache[key] = value
        return value

    def warm_up(self) -> None:
        for word in WARM_UP_WORDS:
            self.trace(word)
        logger.info(f"[{self.label}] trace cache warmed: {len(self._cache)} entries")

    def evaluate(self, combo: FormalTraceCombo) -> MultiPoly:
        """형식적 대각합 결합을 x, y 에서 평가합니다."""
        pieces = []
        for key, coeff in combo.items():
            value = MultiPoly.constant(coeff)
            for factor in key:
                value = value * self.trace(factor.word)
            pieces.append(value)
        return poly_sum(pieces)

    def bidegree_groups(self) -> list[list[str]]:
        return [list(self.x_vars), list(self.y_vars)]


def delta(ctx: InvariantContext, p: MultiPoly) -> MultiPoly:
    """
    delta(x) = 0, delta(y) = x 인 미분.
    자유 y 변수에 대한 연쇄법칙: sum_v delta(v) * dp/dv.
    """
    if not ctx.delta_images:
        raise DerivationUnavailableError(ctx.label)
    return poly_sum(image * poly_diff(p, var) for var, image in ctx.delta_images.items())


def delta_power(ctx: InvariantContext, p: MultiPoly, times: int) -> MultiPoly:
    for _ in range(times):
        if p.is_zero():
            break
        p = delta(ctx, p)
    return p


def as_fraction_tuple(values: Sequence) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)
