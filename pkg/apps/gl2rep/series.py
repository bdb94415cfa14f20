"""
t1, t2 두 변수의 절단 멱급수.

계수는 Fraction, 키는 (t1 차수, t2 차수) 이고 전체 차수가 bound 를 넘는 항은
저장하지 않습니다. 유리함수 전개는 분모 인수 (1 - t1^a t2^b) 로 하나씩 나누는
점화식으로 계산합니다.
"""

import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from apps.exactpoly.serialization import format_rational

from .exceptions import InvalidBoundError, InvalidFactorError, ZeroDenominatorError

logger = logging.getLogger(__name__)

Exponent = tuple[int, int]


@dataclass
class TruncatedSeries:
    bound: int
    coeffs: dict[Exponent, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if not isinstance(self.bound, int) or self.bound < 0:
            raise InvalidBoundError(self.bound)
        cleaned = {}
        for (a, b), c in self.coeffs.items():
            if a < 0 or b < 0:
                raise InvalidFactorError((a, b))
            if a + b > self.bound or not c:
                continue
            cleaned[(a, b)] = Fraction(c)
        self.coeffs = cleaned

    @classmethod
    def one(cls, bound: int) -> "TruncatedSeries":
        return cls(bound, {(0, 0): 1})

    @classmethod
    def monomial(cls, a: int, b: int, bound: int, coeff=1) -> "TruncatedSeries":
        return cls(bound, {(a, b): coeff})

    @classmethod
    def from_terms(cls, terms: Mapping[Exponent, object] | Iterable[Exponent], bound: int) -> "TruncatedSeries":
        """{(a, b): c} 또는 지수 목록(계수 1)으로부터."""
        if isinstance(terms, Mapping):
            return cls(bound, dict(terms))
        out: dict[Exponent, Fraction] = {}
        for exponent in terms:
            out[exponent] = out.get(exponent, Fraction(0)) + 1
        return cls(bound, out)

    def coeff(self, a: int, b: int) -> Fraction:
        return self.coeffs.get((a, b), Fraction(0))

    def items(self) -> list[tuple[Exponent, Fraction]]:
        """전체 차수 오름차순, 같은 차수 안에서는 t1 차수 내림차순."""
        return sorted(self.coeffs.items(), key=lambda item: (sum(item[0]), -item[0][0]))

    def is_zero(self) -> bool:
        return not self.coeffs

    def truncate(self, bound: int) -> "TruncatedSeries":
        return TruncatedSeries(min(bound, self.bound), self.coeffs)

    def slice(self, degree: int) -> "TruncatedSeries":
        """전체 차수가 degree 인 부분만 (동차 성분)."""
        return TruncatedSeries(self.bound, {k: c for k, c in self.coeffs.items() if sum(k) == degree})

    def _combine(self, other: "TruncatedSeries", sign: int) -> "TruncatedSeries":
        bound = min(self.bound, other.bound)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + sign * c
        return TruncatedSeries(bound, out)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self._combine(other, 1)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self._combine(other, -1)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.bound, {k: -c for k, c in self.coeffs.items()})

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries(self.bound, {k: c * other for k, c in self.coeffs.items()})
        bound = min(self.bound, other.bound)
        out: dict[Exponent, Fraction] = {}
        for (a, b), c in self.coeffs.items():
            for (d, e), f in other.coeffs.items():
                if a + b + d + e > bound:
                    continue
                key = (a + d, b + e)
                out[key] = out.get(key, Fraction(0)) + c * f
        return TruncatedSeries(bound, out)

    def __rmul__(self, other) -> "TruncatedSeries":
        return self * other

    def __eq__(self, other) -> bool:
        # bound 가 다르면 공통 범위에서만 비교
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        bound = min(self.bound, other.bound)
        return self.truncate(bound).coeffs == other.truncate(bound).coeffs

    __hash__ = None

    def divide_by_factor(self, a: int, b: int) -> "TruncatedSeries":
        """self / (1 - t1^a t2^b). 점화식 r(i,j) = s(i,j) + r(i-a, j-b)."""
        check_factor((a, b))
        out: dict[Exponent, Fraction] = {}
        for i in range(self.bound + 1):
            for j in range(self.bound + 1 - i):
                value = self.coeffs.get((i, j), Fraction(0))
                if i >= a and j >= b:
                    value += out.get((i - a, j - b), Fraction(0))
                if value:
                    out[(i, j)] = value
        return TruncatedSeries(self.bound, out)

    def as_dict(self) -> dict[str, str]:
        return {f"({a},{b})": format_rational(c) for (a, b), c in self.items()}

    def __str__(self) -> str:
        return "\n".join(f"({a},{b}): {format_rational(c)}" for (a, b), c in self.items())


def check_factor(factor: Exponent) -> Exponent:
    a, b = factor
    if (a, b) == (0, 0):
        raise ZeroDenominatorError(factor)
    if a < 0 or b < 0:
        raise InvalidFactorError(factor)
    return a, b


def expand_rational(
    numerator: TruncatedSeries | Mapping[Exponent, object] | Iterable[Exponent],
    factors: Iterable[Exponent],
    bound: int,
) -> TruncatedSeries:
    """
    numerator / prod (1 - t1^a t2^b) 를 전체 차수 bound 까지 전개합니다.
    numerator 는 절단 급수, {(a, b): c}, 또는 지수 목록입니다.
    """
    factors = [check_factor(f) for f in factors]
    if isinstance(numerator, TruncatedSeries):
        series = TruncatedSeries(bound, numerator.coeffs)
    else:
        series = TruncatedSeries.from_terms(numerator, bound)
    for a, b in factors:
        series = series.divide_by_factor(a, b)
    logger.debug(f"expand_rational: {len(factors)} factors, {len(series.coeffs)} terms up to degree {bound}")
    return series


def first_difference(left: TruncatedSeries, right: TruncatedSeries) -> tuple[Exponent, Fraction, Fraction] | None:
    """공통 범위에서 처음으로 다른 계수 (차수 오름차순)."""
    bound = min(left.bound, right.bound)
    keys = set(left.truncate(bound).coeffs) | set(right.truncate(bound).coeffs)
    for key in sorted(keys, key=lambda k: (sum(k), -k[0])):
        if left.coeff(*key) != right.coeff(*key):
            return key, left.coeff(*key), right.coeff(*key)
    return None
