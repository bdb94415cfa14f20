"""
{X, Y} 위의 형식적 대각합 단어.

단어는 회전 동치류의 대표(사전식 최소 회전, X < Y)로 저장합니다.
FormalTraceCombo 의 키는 단어들의 정렬된 튜플(대각합의 곱)입니다.
"""

import logging
from collections import Counter
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from apps.exactpoly.serialization import format_rational
from apps.xisolver.linalg import LinearSystem, nullspace

from .exceptions import InvalidDegreeError, InvalidWordError

logger = logging.getLogger(__name__)

ALPHABET = "XY"


def canonical_rotation(word: str) -> str:
    """사전식으로 가장 작은 회전."""
    if not word or any(c not in ALPHABET for c in word):
        raise InvalidWordError(word)
    return min(word[i:] + word[:i] for i in range(len(word)))


@dataclass(frozen=True, order=True)
class TraceWord:
    word: str

    def __post_init__(self):
        if canonical_rotation(self.word) != self.word:
            raise InvalidWordError(f"{self.word} is not canonical")

    @classmethod
    def of(cls, word: str) -> "TraceWord":
        return cls(canonical_rotation(word.upper()))

    @property
    def multidegree(self) -> tuple[int, int]:
        return self.word.count("X"), self.word.count("Y")

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return f"tr({self.word})"


def canonicalize(word: str | Sequence[str]) -> TraceWord:
    return TraceWord.of("".join(word))


TraceProduct = tuple[TraceWord, ...]


def _product_key(words: Iterable[TraceWord]) -> TraceProduct:
    return tuple(sorted(words))


def product_multidegree(key: TraceProduct) -> tuple[int, int]:
    return sum(w.multidegree[0] for w in key), sum(w.multidegree[1] for w in key)


def format_product(key: TraceProduct) -> str:
    if not key:
        return "1"
    counts = Counter(key)
    factors = []
    for w in sorted(counts):
        factors.append(str(w) if counts[w] == 1 else f"{w}^{counts[w]}")
    return "*".join(factors)


class FormalTraceCombo:
    """
    대각합 단어(또는 그 곱)의 유리수 계수 일차결합.
    계수가 0 인 항은 저장하지 않습니다.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | None = None):
        clean: dict[TraceProduct, Fraction] = {}
        for key, coeff in (terms or {}).items():
            key = _normalize_key(key)
            clean[key] = clean.get(key, Fraction(0)) + Fraction(coeff)
        self._terms = {k: c for k, c in clean.items() if c}

    @classmethod
    def word(cls, word: str, coeff=1) -> "FormalTraceCombo":
        return cls({(TraceWord.of(word),): coeff})

    @classmethod
    def product(cls, words: Iterable[str], coeff=1) -> "FormalTraceCombo":
        return cls({tuple(TraceWord.of(w) for w in words): coeff})

    def items(self):
        return self._terms.items()

    def coeff(self, key) -> Fraction:
        return self._terms.get(_normalize_key(key), Fraction(0))

    def keys(self) -> list[TraceProduct]:
        return sorted(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def multidegrees(self) -> set[tuple[int, int]]:
        return {product_multidegree(k) for k in self._terms}

    def __add__(self, other: "FormalTraceCombo") -> "FormalTraceCombo":
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return FormalTraceCombo(out)

    def __neg__(self) -> "FormalTraceCombo":
        return FormalTraceCombo({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "FormalTraceCombo") -> "FormalTraceCombo":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, FormalTraceCombo):
            out: dict[TraceProduct, Fraction] = {}
            for ka, ca in self._terms.items():
                for kb, cb in other._terms.items():
                    key = _product_key(ka + kb)
                    out[key] = out.get(key, Fraction(0)) + ca * cb
            return FormalTraceCombo(out)
        factor = Fraction(other)
        return FormalTraceCombo({k: c * factor for k, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalTraceCombo):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for key in sorted(self._terms):
            c = self._terms[key]
            magnitude = abs(c)
            body = format_product(key) if magnitude == 1 else f"{format_rational(magnitude)}*{format_product(key)}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"FormalTraceCombo({str(self)!r})"


def _normalize_key(key) -> TraceProduct:
    if isinstance(key, TraceWord):
        return (key,)
    if isinstance(key, str):
        return (TraceWord.of(key),)
    return _product_key(w if isinstance(w, TraceWord) else TraceWord.of(w) for w in key)


def enumerate_basis(k: int) -> list[TraceWord]:
    """길이 k 인 2-문자 목걸이 전체 (정렬)."""
    if k < 1:
        raise InvalidDegreeError(k)
    return sorted({TraceWord.of("".join(letters)) for letters in product(ALPHABET, repeat=k)})


def bidegree_counts(k: int) -> dict[tuple[int, int], int]:
    """U_k 의 이중차수별 차원 (X 개수, Y 개수)."""
    return dict(Counter(w.multidegree for w in enumerate_basis(k)))


def words_of_degree(degree: tuple[int, int]) -> list[TraceWord]:
    d1, d2 = degree
    if d1 < 0 or d2 < 0 or d1 + d2 == 0:
        raise InvalidDegreeError(degree)
    return [w for w in enumerate_basis(d1 + d2) if w.multidegree == (d1, d2)]


def products_of_degree(degree: tuple[int, int], factor_lengths: Sequence[int]) -> list[TraceProduct]:
    """길이가 factor_lengths 인 대각합들의 곱 중 이중차수가 degree 인 것 (중복 없이, 정렬)."""
    if not factor_lengths or any(n < 1 for n in factor_lengths) or sum(factor_lengths) != sum(degree):
        raise InvalidDegreeError(f"{degree} / {tuple(factor_lengths)}")
    pools = [enumerate_basis(n) for n in sorted(factor_lengths)]
    found = {_product_key(choice) for choice in product(*pools)}
    return sorted(key for key in found if product_multidegree(key) == tuple(degree))


def _linearize_word(word: TraceWord) -> Counter:
    out: Counter = Counter()
    for i, letter in enumerate(word.word):
        if letter == "Y":
            out[TraceWord.of(word.word[:i] + "X" + word.word[i + 1 :])] += 1
    return out


def linearize(combo: FormalTraceCombo) -> FormalTraceCombo:
    """
    부분 선형화 f(X|Y,X): Y 를 하나씩 X 로 바꿔 더합니다.
    곱에는 Leibniz 규칙을 적용합니다 (미분 Delta 의 형식적 상).
    """
    out: dict[TraceProduct, Fraction] = {}
    for key, coeff in combo.items():
        for position, factor in enumerate(key):
            rest = key[:position] + key[position + 1 :]
            for image, count in _linearize_word(factor).items():
                new_key = _product_key(rest + (image,))
                out[new_key] = out.get(new_key, Fraction(0)) + coeff * count
    return FormalTraceCombo(out)


@dataclass
class HwvSearch:
    """최고 무게 벡터 탐색에서 만든 η-연립방정식과 그 해."""

    degree: tuple[int, int]
    candidates: list[TraceProduct]
    targets: list[TraceProduct]
    system: LinearSystem
    basis: list[FormalTraceCombo]

    @property
    def dimension(self) -> int:
        return len(self.basis)


def hwv_system(degree: tuple[int, int], factor_lengths: Sequence[int] | None = None) -> tuple[list, list, LinearSystem]:
    """
    후보 (단일 단어 또는 곱) 의 선형화 계수로 η-연립방정식을 만듭니다.
    행은 선형화 결과에 나타나는 항, 열은 후보입니다.
    """
    if factor_lengths:
        candidates = products_of_degree(degree, factor_lengths)
    else:
        candidates = [(w,) for w in words_of_degree(degree)]
    images = [linearize(FormalTraceCombo({key: 1})) for key in candidates]
    targets = sorted({k for image in images for k, _ in image.items()})
    labels = [f"eta{i + 1}" for i in range(len(candidates))]
    system = LinearSystem(labels=labels)
    for target in targets:
        system.add_row([image.coeff(target) for image in images], 0)
    return candidates, targets, system


def hwv_solve(degree: tuple[int, int], factor_lengths: Sequence[int] | None = None) -> HwvSearch:
    """
    linearize 의 핵 = 주어진 이중차수의 최고 무게 벡터 공간.
    기저 벡터는 정렬된 후보 순서에서 첫 0 이 아닌 계수가 1 이 되도록 맞춥니다.
    """
    degree = tuple(degree)
    candidates, targets, system = hwv_system(degree, factor_lengths)
    if not candidates:
        return HwvSearch(degree, [], targets, system, [])
    matrix = [coeffs for coeffs, _ in system.rows]
    vectors = nullspace(matrix, ncols=len(candidates))
    basis = [FormalTraceCombo(dict(zip(candidates, vec, strict=True))) for vec in vectors]
    logger.info(
        f"hwv_solve{degree} factors={tuple(factor_lengths or ())}: "
        f"{len(candidates)} candidates, {len(targets)} equations, dim {len(basis)}"
    )
    return HwvSearch(degree, candidates, targets, system, basis)
