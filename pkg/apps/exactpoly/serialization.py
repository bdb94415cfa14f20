"""
텍스트 직렬화.

문법 (파서 입력 형식과 동일):
    poly     := "0" | ["-"] term ((" + " | " - ") term)*
    term     := coeff | [coeff "*"] monomial
    coeff    := int ["/" int]
    monomial := factor ("*" factor)*
    factor   := name ["^" int]

항은 graded lex (인덱스가 작은 변수가 강함) 내림차순으로 출력합니다.
"""

import re
from fractions import Fraction

from .exceptions import PolynomialParseError
from .polynomial import _SHIFTS, FIELD_MASK, Monomial, MultiPoly
from .registry import VAR_NAMES, var_index

_COEFF_RE = re.compile(r"^\d+(/\d+)?$")
_FACTOR_RE = re.compile(r"^([a-z]+\d*)(\^(\d+))?$")
_SPLIT_RE = re.compile(r"\s*([+-])\s*")


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_monomial(key: int) -> str:
    if key == 0:
        return "1"
    factors = []
    for index, shift in enumerate(_SHIFTS):
        e = (key >> shift) & FIELD_MASK
        if e == 1:
            factors.append(VAR_NAMES[index])
        elif e:
            factors.append(f"{VAR_NAMES[index]}^{e}")
    return "*".join(factors)


def format_poly(p: MultiPoly) -> str:
    if p.is_zero():
        return "0"
    terms = dict(p.items())
    parts = []
    for key in sorted(terms, reverse=True):
        c = terms[key]
        magnitude = abs(c)
        if key == 0:
            body = format_rational(magnitude)
        elif magnitude == 1:
            body = format_monomial(key)
        else:
            body = f"{format_rational(magnitude)}*{format_monomial(key)}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(parts)


def parse_monomial(text: str) -> Monomial:
    text = text.strip()
    if text == "1":
        return Monomial(0)
    exponents: dict[int, int] = {}
    for factor in text.split("*"):
        match = _FACTOR_RE.match(factor.strip())
        if not match:
            raise PolynomialParseError(text)
        index = var_index(match.group(1))
        exponents[index] = exponents.get(index, 0) + int(match.group(3) or 1)
    return Monomial.from_exponents(exponents)


def _parse_term(text: str) -> tuple[Monomial, Fraction]:
    pieces = text.split("*", 1)
    head = pieces[0].strip()
    if _COEFF_RE.match(head):
        try:
            coeff = Fraction(head)
        except ZeroDivisionError as exc:
            raise PolynomialParseError(text) from exc
        if len(pieces) == 1:
            return Monomial(0), coeff
        return parse_monomial(pieces[1]), coeff
    return parse_monomial(text), Fraction(1)


def parse_poly(text: str) -> MultiPoly:
    text = text.strip()
    if not text:
        raise PolynomialParseError(text)
    tokens = _SPLIT_RE.split(text)
    # split 결과: [첫 항, 부호, 항, 부호, 항, ...]; 첫 항이 비면 선행 부호
    sign = 1
    if tokens[0] == "":
        if len(tokens) < 3:
            raise PolynomialParseError(text)
        sign = -1 if tokens[1] == "-" else 1
        tokens = tokens[2:]
    terms: dict[int, Fraction] = {}
    expect_term = True
    for token in tokens:
        if expect_term:
            if not token:
                raise PolynomialParseError(text)
            mono, coeff = _parse_term(token)
            terms[mono.key] = terms.get(mono.key, 0) + sign * coeff
        else:
            sign = -1 if token == "-" else 1
        expect_term = not expect_term
    if expect_term:
        raise PolynomialParseError(text)
    return MultiPoly(terms)
