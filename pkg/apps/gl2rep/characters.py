"""
GL2 의 다항식 표현: 분할 (lambda1, lambda2), 슈어 함수, 중복도 분해와
Littlewood-Richardson 규칙.
"""

import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from .exceptions import InvalidPartitionError, NotACharacterError
from .series import TruncatedSeries

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Partition2:
    lambda1: int
    lambda2: int = 0

    def __post_init__(self):
        if not (isinstance(self.lambda1, int) and isinstance(self.lambda2, int)):
            raise InvalidPartitionError((self.lambda1, self.lambda2))
        if not self.lambda1 >= self.lambda2 >= 0:
            raise InvalidPartitionError((self.lambda1, self.lambda2))

    @classmethod
    def of(cls, value) -> "Partition2":
        if isinstance(value, Partition2):
            return value
        if isinstance(value, int):
            return cls(value, 0)
        parts = tuple(value)
        if not 1 <= len(parts) <= 2:
            raise InvalidPartitionError(value)
        return cls(*parts)

    @property
    def size(self) -> int:
        return self.lambda1 + self.lambda2

    @property
    def width(self) -> int:
        """lambda1 - lambda2."""
        return self.lambda1 - self.lambda2

    def as_tuple(self) -> tuple[int, int]:
        return self.lambda1, self.lambda2

    def __str__(self) -> str:
        return f"({self.lambda1},{self.lambda2})"


def schur(p, bound: int | None = None) -> TruncatedSeries:
    """S_(a+b,b) = (t1 t2)^b (t1^a + t1^(a-1) t2 + ... + t2^a)."""
    p = Partition2.of(p)
    bound = p.size if bound is None else bound
    b = p.lambda2
    return TruncatedSeries(bound, {(p.width - i + b, i + b): 1 for i in range(p.width + 1)})


@dataclass
class Decomposition:
    """W2(lambda) 들의 직합. 중복도 0 은 저장하지 않습니다."""

    multiplicities: dict[Partition2, int] = field(default_factory=dict)

    def __post_init__(self):
        cleaned: dict[Partition2, int] = {}
        for key, m in self.multiplicities.items():
            if m < 0 or int(m) != m:
                raise NotACharacterError(f"{key}: {m}")
            if m:
                cleaned[Partition2.of(key)] = int(m)
        self.multiplicities = cleaned

    @classmethod
    def of(cls, data: Mapping | Iterable) -> "Decomposition":
        if isinstance(data, Decomposition):
            return data
        if isinstance(data, Mapping):
            return cls(dict(data))
        out: dict[Partition2, int] = {}
        for key in data:
            p = Partition2.of(key)
            out[p] = out.get(p, 0) + 1
        return cls(out)

    def multiplicity(self, p) -> int:
        return self.multiplicities.get(Partition2.of(p), 0)

    def items(self) -> list[tuple[Partition2, int]]:
        return sorted(self.multiplicities.items(), key=lambda item: (item[0].size, -item[0].lambda1))

    def total(self) -> int:
        return sum(self.multiplicities.values())

    def dimension(self) -> int:
        return sum(m * (p.width + 1) for p, m in self.multiplicities.items())

    def __add__(self, other: "Decomposition") -> "Decomposition":
        out = dict(self.multiplicities)
        for p, m in other.multiplicities.items():
            out[p] = out.get(p, 0) + m
        return Decomposition(out)

    def tensor(self, other: "Decomposition") -> "Decomposition":
        out: dict[Partition2, int] = {}
        for p, m in self.multiplicities.items():
            for q, n in other.multiplicities.items():
                for r, k in lr_tensor(p, q).multiplicities.items():
                    out[r] = out.get(r, 0) + m * n * k
        return Decomposition(out)

    def __eq__(self, other) -> bool:
        if isinstance(other, Mapping):
            other = Decomposition.of(other)
        if not isinstance(other, Decomposition):
            return NotImplemented
        return self.multiplicities == other.multiplicities

    __hash__ = None

    def as_dict(self) -> dict[str, int]:
        return {str(p): m for p, m in self.items()}

    def __str__(self) -> str:
        return "\n".join(f"{p}: {m}" for p, m in self.items())


def series_of(decomposition: Decomposition | Mapping, bound: int) -> TruncatedSeries:
    """sum m(lambda) S_lambda."""
    decomposition = Decomposition.of(decomposition)
    total = TruncatedSeries(bound)
    for p, m in decomposition.multiplicities.items():
        total = total + schur(p, bound) * m
    return total


def extract_multiplicities(s: TruncatedSeries) -> Decomposition:
    """
    m(a, b) = c(a, b) - c(a+1, b-1), c(., -1) = 0.
    결과가 음수 / 비정수이거나 재구성이 s 와 다르면 NotACharacterError.
    """
    out: dict[Partition2, int] = {}
    for (a, b), c in s.coeffs.items():
        if a < b:
            continue
        m = c - (s.coeff(a + 1, b - 1) if b > 0 else Fraction(0))
        if m < 0 or m.denominator != 1:
            logger.warning(f"extract_multiplicities: m({a},{b}) = {m}")
            raise NotACharacterError(f"m({a},{b}) = {m}")
        if m:
            out[Partition2(a, b)] = int(m)
    decomposition = Decomposition(out)
    if series_of(decomposition, s.bound) != s:
        raise NotACharacterError("reconstruction differs from the series")
    return decomposition


def lr_tensor(p, q) -> Decomposition:
    """
    W2(a+b, b) x W2(c+d, d) = sum_{k=0..c} W2(a+b+d+k, b+d+c-k), a >= c.
    """
    p, q = Partition2.of(p), Partition2.of(q)
    if p.width < q.width:
        p, q = q, p
    a, b = p.width, p.lambda2
    c, d = q.width, q.lambda2
    return Decomposition({Partition2(a + b + d + k, b + d + c - k): 1 for k in range(c + 1)})
