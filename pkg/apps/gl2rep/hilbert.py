"""
불변식 대수와 관련 대칭대수들의 힐베르트 급수.

q2 = (1-t1^2)(1-t1t2)(1-t2^2), q3 = (1-t1^3)(1-t1^2t2)(1-t1t2^2)(1-t2^3).
"""

import logging
from dataclasses import dataclass
from itertools import product

from django.conf import settings

from apps.traceword.words import bidegree_counts

from .characters import Decomposition, extract_multiplicities
from .exceptions import InvalidBoundError, InvalidFactorError
from .series import Exponent, TruncatedSeries, expand_rational, first_difference

logger = logging.getLogger(__name__)

Q2: tuple[Exponent, ...] = ((2, 0), (1, 1), (0, 2))
Q3: tuple[Exponent, ...] = ((3, 0), (2, 1), (1, 2), (0, 3))
SQUARE_FACTOR: tuple[Exponent, ...] = ((2, 2),)

INVARIANT_NUMERATOR: tuple[Exponent, ...] = ((0, 0), (3, 3))
INVARIANT_FACTORS: tuple[Exponent, ...] = ((1, 0), (0, 1)) + Q2 + Q3 + SQUARE_FACTOR

# 생성원 열한 개의 이중차수: tr(X), tr(Y), 2차 셋, 3차 넷, v, w
GENERATOR_BIDEGREES: tuple[Exponent, ...] = ((1, 0), (0, 1)) + Q2 + Q3 + ((2, 2), (3, 3))
# 관계식 f = w^2 - ... 의 이중차수
RELATION_BIDEGREE: Exponent = (6, 6)

# S = K[W2(2)] x K[W2(3)] x K[W2(2^2)] 의 각 성분이 사는 전체 차수의 배수
S_FACTORS = {"W2(2)": (Q2, 2), "W2(3)": (Q3, 3), "W2(2^2)": (SQUARE_FACTOR, 4)}

U_SPACES = {"U2": 2, "U3": 3, "U4": 4, "U6": 6}

# 음성 대조에서 지수를 올릴 수 있는 변수
MUTATION_VARIABLES = ("t1", "t2")


def default_bound() -> int:
    return int(getattr(settings, "SERIES_MAX_DEGREE", 16))


def invariant_series(bound: int | None = None) -> TruncatedSeries:
    """(1 + t1^3t2^3) / [(1-t1)(1-t2) q2 q3 (1-t1^2t2^2)]."""
    bound = default_bound() if bound is None else bound
    return expand_rational(INVARIANT_NUMERATOR, INVARIANT_FACTORS, bound)


def presentation_factors(mutate_factor: int | None = None, mutate_variable: str = "t1") -> list[Exponent]:
    """생성원 이중차수 목록. mutate_factor 번째 인수는 mutate_variable 지수를 하나 올립니다 (음성 대조용)."""
    factors = list(GENERATOR_BIDEGREES)
    if mutate_factor is not None:
        if not 0 <= mutate_factor < len(factors):
            raise InvalidFactorError(f"mutate_factor {mutate_factor} not in 0..{len(factors) - 1}")
        if mutate_variable not in MUTATION_VARIABLES:
            raise InvalidFactorError(f"mutate_variable {mutate_variable}")
        a, b = factors[mutate_factor]
        factors[mutate_factor] = (a + 1, b) if mutate_variable == "t1" else (a, b + 1)
    return factors


def presentation_series(
    bound: int | None = None, mutate_factor: int | None = None, mutate_variable: str = "t1"
) -> TruncatedSeries:
    """
    생성원 열한 개의 자유 대수를 관계식 하나로 나눈 몫의 급수:
    (1 - t1^6 t2^6) / prod (1 - t^deg g).
    """
    bound = default_bound() if bound is None else bound
    numerator = TruncatedSeries(bound, {(0, 0): 1, RELATION_BIDEGREE: -1})
    return expand_rational(numerator, presentation_factors(mutate_factor, mutate_variable), bound)


def symmetric_algebra_series(weights, bound: int | None = None) -> TruncatedSeries:
    """무게가 weights 인 기저를 갖는 공간의 대칭대수 K[V]."""
    bound = default_bound() if bound is None else bound
    return expand_rational([(0, 0)], weights, bound)


def s_series(bound: int | None = None) -> TruncatedSeries:
    """H(S) = 1 / (q2 q3 (1 - t1^2 t2^2))."""
    return symmetric_algebra_series(Q2 + Q3 + SQUARE_FACTOR, bound)


def u_series(k: int) -> TruncatedSeries:
    """길이 k 대각합 단어가 생성하는 공간 U_k 의 지표."""
    return TruncatedSeries(k, dict(bidegree_counts(k)))


def space_series(space: str, bound: int | None = None) -> TruncatedSeries:
    if space in U_SPACES:
        return u_series(U_SPACES[space])
    if space == "S":
        return s_series(bound)
    raise InvalidFactorError(f"unknown space {space}")


def decompose(space: str, degree: int | None = None, bound: int | None = None) -> Decomposition:
    """
    U2, U3, U4, U6 또는 S (의 전체 차수 degree 성분) 를 기약 표현으로 분해합니다.
    """
    for value in (degree, bound):
        if value is not None and value < 0:
            raise InvalidBoundError(value)
    if degree is not None and bound is None:
        bound = degree
    series = space_series(space, bound)
    if degree is not None:
        series = series.slice(degree)
    decomposition = extract_multiplicities(series)
    logger.info(f"decompose {space} degree={degree}: {decomposition.total()} irreducible summands")
    return decomposition


@dataclass(frozen=True)
class SComponent:
    """S 의 한 성분 K[W2(2)]^(i) x K[W2(3)]^(j) x K[W2(2^2)]^(k)."""

    degrees: tuple[int, int, int]
    decomposition: Decomposition

    def __str__(self) -> str:
        i, j, k = self.degrees
        return f"K[W2(2)]^({i}) x K[W2(3)]^({j}) x K[W2(2^2)]^({k})"


def s_component_decompositions(total: int = 12) -> list[SComponent]:
    """전체 차수 total 인 S 의 성분들과 각각의 분해. 큰 K[W2(2)] 차수부터."""
    slices = {}
    for name, (weights, step) in S_FACTORS.items():
        series = symmetric_algebra_series(weights, total)
        slices[name] = {d: extract_multiplicities(series.slice(d)) for d in range(0, total + 1, step)}
    components = []
    for i, j, k in product(*(sorted(s, reverse=True) for s in slices.values())):
        if i + j + k != total:
            continue
        parts = [slices[name][d] for name, d in zip(S_FACTORS, (i, j, k), strict=True)]
        decomposition = parts[0].tensor(parts[1]).tensor(parts[2])
        components.append(SComponent((i, j, k), decomposition))
    components.sort(key=lambda c: (-c.degrees[0], -c.degrees[1]))
    return components


def verify_theorem_series(
    bound: int | None = None, mutate_factor: int | None = None, mutate_variable: str = "t1"
) -> bool:
    """
    닫힌 형태의 불변식 대수 급수와 생성원/관계식 표시의 급수가 같은지, 그리고
    S 의 차수 6 성분이 2 W2(6) + 3 W2(4,2) 인지 확인합니다.
    """
    bound = default_bound() if bound is None else bound
    expected = invariant_series(bound)
    presented = presentation_series(bound, mutate_factor, mutate_variable)
    difference = first_difference(expected, presented)
    if difference is not None:
        key, left, right = difference
        logger.warning(f"verify_theorem_series: coefficient {key} differs ({left} != {right})")
        return False
    sextic = extract_multiplicities(s_series(bound).slice(6)) if bound >= 6 else None
    if sextic is not None and sextic != {(6, 0): 2, (4, 2): 3}:
        logger.warning(f"verify_theorem_series: S^(6) = {sextic.as_dict()}")
        return False
    logger.info(f"verify_theorem_series: equal up to degree {bound}")
    return True
