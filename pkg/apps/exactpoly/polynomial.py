"""
유리수 계수 희소 다변수 다항식.

단항식은 하나의 정수 키로 압축됩니다. 변수마다 16비트 필드를 두고 가장 위에
전체 차수 필드를 둡니다. 따라서
  - 단항식 곱셈은 키의 덧셈이고,
  - 키의 정수 비교가 곧 graded lex 순서 (인덱스가 작은 변수가 강함) 입니다.
전체 차수는 FIELD_LIMIT 미만이어야 하며 곱셈 전에 검사합니다.
"""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import ExponentOverflowError
from .registry import NUM_VARS, VarId, var_index

Rational = Fraction

FIELD_BITS = 16
FIELD_MASK = (1 << FIELD_BITS) - 1
FIELD_LIMIT = 1 << FIELD_BITS
DEG_SHIFT = FIELD_BITS * NUM_VARS

_SHIFTS: tuple[int, ...] = tuple(FIELD_BITS * (NUM_VARS - 1 - i) for i in range(NUM_VARS))
_UNITS: tuple[int, ...] = tuple((1 << DEG_SHIFT) | (1 << shift) for shift in _SHIFTS)


def _key_degree(key: int) -> int:
    return key >> DEG_SHIFT


def _key_exponent(key: int, index: VarId) -> int:
    return (key >> _SHIFTS[index]) & FIELD_MASK


def _key_from_exponents(exponents: Mapping) -> int:
    key = 0
    total = 0
    for var, e in exponents.items():
        if e < 0:
            raise ExponentOverflowError(f"{var}^{e}")
        if e == 0:
            continue
        key += e * _UNITS[var_index(var)]
        total += e
    if total >= FIELD_LIMIT:
        raise ExponentOverflowError(total)
    return key


@dataclass(frozen=True, slots=True)
class Monomial:
    """VarId -> 양의 지수 희소 맵. 내부적으로는 압축 키 하나."""

    key: int = 0

    @classmethod
    def from_exponents(cls, exponents: Mapping) -> "Monomial":
        return cls(_key_from_exponents(exponents))

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        from .serialization import parse_monomial

        return parse_monomial(text)

    @property
    def degree(self) -> int:
        return _key_degree(self.key)

    def exponent(self, var) -> int:
        return _key_exponent(self.key, var_index(var))

    def __mul__(self, other: "Monomial") -> "Monomial":
        if self.degree + other.degree >= FIELD_LIMIT:
            raise ExponentOverflowError(self.degree + other.degree)
        return Monomial(self.key + other.key)

    def __str__(self) -> str:
        from .serialization import format_monomial

        return format_monomial(self.key)


class MultiPoly:
    """
    0 이 아닌 계수만 저장하는 불변 다항식.
    영다항식은 빈 항 맵입니다.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | None = None):
        clean: dict[int, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                key = mono.key if isinstance(mono, Monomial) else mono
                c = Fraction(coeff)
                if c:
                    clean[key] = clean.get(key, 0) + c
            clean = {k: c for k, c in clean.items() if c}
        self._terms = clean

    @classmethod
    def _wrap(cls, terms: dict[int, Fraction]) -> "MultiPoly":
        # terms 는 이미 정규형 (0 계수 없음)
        poly = cls.__new__(cls)
        poly._terms = terms
        return poly

    # --- 생성자 ---
    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls._wrap({})

    @classmethod
    def constant(cls, value) -> "MultiPoly":
        c = Fraction(value)
        return cls._wrap({0: c} if c else {})

    @classmethod
    def one(cls) -> "MultiPoly":
        return cls.constant(1)

    @classmethod
    def var(cls, name_or_index) -> "MultiPoly":
        return cls._wrap({_UNITS[var_index(name_or_index)]: Fraction(1)})

    @classmethod
    def monomial(cls, exponents: Mapping, coeff=1) -> "MultiPoly":
        return cls({_key_from_exponents(exponents): coeff})

    @classmethod
    def parse(cls, text: str) -> "MultiPoly":
        from .serialization import parse_poly

        return parse_poly(text)

    # --- 조회 ---
    def terms(self) -> dict[Monomial, Fraction]:
        return {Monomial(k): c for k, c in self._terms.items()}

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def constant_value(self) -> Fraction:
        return self._terms.get(0, Fraction(0))

    def total_degree(self) -> int:
        # 영다항식의 차수는 -1 로 둡니다
        if not self._terms:
            return -1
        return _key_degree(max(self._terms))

    def variables(self) -> set[VarId]:
        combined = 0
        for key in self._terms:
            combined |= key
        return {i for i, shift in enumerate(_SHIFTS) if (combined >> shift) & FIELD_MASK}

    # --- 연산자 ---
    def __add__(self, other):
        return poly_add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return poly_sub(self, _coerce(other))

    def __rsub__(self, other):
        return poly_sub(_coerce(other), self)

    def __neg__(self):
        return poly_neg(self)

    def __mul__(self, other):
        if isinstance(other, int | Fraction):
            return poly_scale(self, other)
        return poly_mul(self, other)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        return poly_scale(self, 1 / Fraction(other))

    def __pow__(self, exponent: int):
        return poly_pow(self, exponent)

    def __eq__(self, other) -> bool:
        if isinstance(other, int | Fraction):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        from .serialization import format_poly

        return format_poly(self)

    def __repr__(self) -> str:
        return f"MultiPoly({str(self)!r})"


def _coerce(value) -> MultiPoly:
    if isinstance(value, MultiPoly):
        return value
    return MultiPoly.constant(value)


def poly_add(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    if len(a._terms) < len(b._terms):
        a, b = b, a
    out = dict(a._terms)
    for key, c in b._terms.items():
        s = out.get(key, 0) + c
        if s:
            out[key] = s
        else:
            del out[key]
    return MultiPoly._wrap(out)


def poly_neg(a: MultiPoly) -> MultiPoly:
    return MultiPoly._wrap({k: -c for k, c in a._terms.items()})


def poly_sub(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return poly_add(a, poly_neg(b))


def poly_scale(a: MultiPoly, factor) -> MultiPoly:
    f = Fraction(factor)
    if not f:
        return MultiPoly.zero()
    return MultiPoly._wrap({k: c * f for k, c in a._terms.items()})


def poly_mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    if not a._terms or not b._terms:
        return MultiPoly.zero()
    if a.total_degree() + b.total_degree() >= FIELD_LIMIT:
        raise ExponentOverflowError(a.total_degree() + b.total_degree())
    if len(a._terms) > len(b._terms):
        a, b = b, a
    out: dict[int, Fraction] = {}
    get = out.get
    inner = list(b._terms.items())
    for ka, ca in a._terms.items():
        for kb, cb in inner:
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
    return MultiPoly._wrap({k: c for k, c in out.items() if c})


def poly_pow(a: MultiPoly, exponent: int) -> MultiPoly:
    if exponent < 0:
        raise ExponentOverflowError(exponent)
    result = MultiPoly.one()
    base = a
    while exponent:
        if exponent & 1:
            result = poly_mul(result, base)
        exponent >>= 1
        if exponent:
            base = poly_mul(base, base)
    return result


def poly_sum(polys: Iterable[MultiPoly]) -> MultiPoly:
    out: dict[int, Fraction] = {}
    get = out.get
    for p in polys:
        for k, c in p._terms.items():
            out[k] = get(k, 0) + c
    return MultiPoly._wrap({k: c for k, c in out.items() if c})


def poly_diff(p: MultiPoly, v) -> MultiPoly:
    """형식적 편미분 dp/dv."""
    index = var_index(v)
    shift = _SHIFTS[index]
    unit = _UNITS[index]
    out = {}
    for key, c in p._terms.items():
        e = (key >> shift) & FIELD_MASK
        if e:
            out[key - unit] = c * e
    return MultiPoly._wrap(out)


def poly_subst(p: MultiPoly, assignment: Mapping) -> MultiPoly:
    """
    동시 대입. assignment 에 없는 변수는 그대로 통과합니다.
    값으로는 MultiPoly, int, Fraction 을 받습니다.
    """
    images: dict[VarId, MultiPoly] = {var_index(v): _coerce(img) for v, img in assignment.items()}
    if not images or not p._terms:
        return p
    assigned_mask = 0
    for index in images:
        assigned_mask |= FIELD_MASK << _SHIFTS[index]
    # 대입되는 부분이 같은 항들은 한 번만 전개합니다
    grouped: dict[int, dict[int, Fraction]] = {}
    for key, c in p._terms.items():
        fields = key & assigned_mask
        rest = key & ~assigned_mask & ((1 << DEG_SHIFT) - 1)
        rest_key = rest + (_fields_degree(rest) << DEG_SHIFT)
        grouped.setdefault(fields, {})[rest_key] = c
    powers: dict[tuple[VarId, int], MultiPoly] = {}
    pieces = []
    for fields, rest_terms in grouped.items():
        image = MultiPoly.one()
        for index, img in images.items():
            e = (fields >> _SHIFTS[index]) & FIELD_MASK
            if not e:
                continue
            power = powers.get((index, e))
            if power is None:
                power = poly_pow(img, e)
                powers[(index, e)] = power
            image = poly_mul(image, power)
            if not image:
                break
        if image:
            pieces.append(poly_mul(image, MultiPoly._wrap(rest_terms)))
    return poly_sum(pieces)


def _fields_degree(fields: int) -> int:
    total = 0
    while fields:
        total += fields & FIELD_MASK
        fields >>= FIELD_BITS
    return total


def coeff_of(p: MultiPoly, m) -> Fraction:
    """단항식 m 의 정확한 계수 (없으면 0)."""
    if isinstance(m, str):
        m = Monomial.parse(m)
    elif isinstance(m, Mapping):
        m = Monomial.from_exponents(m)
    return p._terms.get(m.key, Fraction(0))


def group_degree(key: int, group: Iterable[VarId]) -> int:
    return sum((key >> _SHIFTS[i]) & FIELD_MASK for i in group)


def homogeneous_component(p: MultiPoly, variables: Iterable, degree: int) -> MultiPoly:
    """variables 에 대한 차수가 degree 인 항만 남깁니다."""
    group = [var_index(v) for v in variables]
    return MultiPoly._wrap({k: c for k, c in p._terms.items() if group_degree(k, group) == degree})


def multidegrees(p: MultiPoly, groups: Iterable[Iterable]) -> set[tuple[int, ...]]:
    """각 변수 묶음에 대한 차수 튜플의 집합. 동차이면 원소가 하나입니다."""
    resolved = [[var_index(v) for v in group] for group in groups]
    return {tuple(group_degree(k, g) for g in resolved) for k in p._terms}
