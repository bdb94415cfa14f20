"""
생성원 u, v, w 와 차수 (6,6) 의 최고 무게 벡터 w1 .. w7, 그리고 관계식 다항식.

모든 원소는 컨텍스트의 캐시된 대각합으로 만들어지며 컨텍스트에 저장됩니다.
"""

import logging
from collections.abc import Sequence
from fractions import Fraction

from apps.exactpoly.polynomial import MultiPoly, poly_sum
from apps.xisolver.linalg import rank

from .context import InvariantContext, as_fraction_tuple, delta, delta_power
from .exceptions import XiVectorError

logger = logging.getLogger(__name__)

W_LABELS = ("w1", "w2", "w3p", "w3pp", "w4", "w5", "w6", "w7")
XI_LABELS = ("xi1", "xi2", "xi3p", "xi3pp", "xi4", "xi5", "xi6", "xi7")

# w^2 = sum xi_i w_i 의 계수
DEFINING_XI: tuple[Fraction, ...] = (
    Fraction(1, 27),
    Fraction(-2, 9),
    Fraction(4, 15),
    Fraction(1, 90),
    Fraction(1, 3),
    Fraction(-2, 3),
    Fraction(-1, 3),
    Fraction(-4, 27),
)


def det2(a, b, c, d) -> MultiPoly:
    """| a b ; c d |"""
    return a * d - b * c


def det3(rows: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def build_u(ctx: InvariantContext) -> MultiPoly:
    t = ctx.trace
    return ctx.remember("u", lambda: det2(t("xx"), t("xy"), t("xy"), t("yy")))


def build_v(ctx: InvariantContext) -> MultiPoly:
    t = ctx.trace
    return ctx.remember("v", lambda: t("xxyy") - t("xyxy"))


def build_w(ctx: InvariantContext) -> MultiPoly:
    t = ctx.trace
    return ctx.remember("w", lambda: t("xxyyxy") - t("yyxxyx"))


def cubic_determinant(ctx: InvariantContext) -> MultiPoly:
    """w3' 과 w5 가 공유하는 3x3 행렬식 (이중차수 (4,4))."""
    t = ctx.trace
    return ctx.remember(
        "det3",
        lambda: det3(
            [
                [t("xx"), t("xy"), t("yy")],
                [t("xxx"), t("xxy"), t("xyy")],
                [t("xxy"), t("xyy"), t("yyy")],
            ]
        ),
    )


def build_w1(ctx: InvariantContext) -> MultiPoly:
    return ctx.remember("w1", lambda: build_u(ctx) ** 3)


def build_w2(ctx: InvariantContext) -> MultiPoly:
    return ctx.remember("w2", lambda: build_u(ctx) ** 2 * build_v(ctx))


def build_w3p(ctx: InvariantContext) -> MultiPoly:
    return ctx.remember("w3p", lambda: build_u(ctx) * cubic_determinant(ctx))


def build_w3pp_explicit(ctx: InvariantContext) -> MultiPoly:
    t = ctx.trace

    def build():
        xx, xy, yy = t("xx"), t("xy"), t("yy")
        xxx, xxy, xyy, yyy = t("xxx"), t("xxy"), t("xyy"), t("yyy")
        part1 = 5 * (yy**3 * xxx**2 + xx**3 * yyy**2)
        part2 = -30 * (yy**2 * xy * xxy * xxx + xx**2 * xy * yyy * xyy)
        part3 = 3 * (
            (4 * yy * xy**2 + yy**2 * xx) * (3 * xxy**2 + 2 * xyy * xxx)
            + (4 * xy**2 * xx + xx**2 * yy) * (3 * xyy**2 + 2 * xxy * yyy)
        )
        part4 = -2 * (2 * xy**3 + 3 * xx * xy * yy) * (9 * xyy * xxy + xxx * yyy)
        return poly_sum([part1, part2, part3, part4])

    return ctx.remember("w3pp", build)


def build_w3pp_via_delta(ctx: InvariantContext) -> MultiPoly:
    """(1/144) sum_{i=0..6} (-1)^i delta^i(tr^3(y^2)) delta^(6-i)(tr^2(y^3))."""

    def build():
        a = ctx.trace("yy") ** 3
        b = ctx.trace("yyy") ** 2
        a_powers = [a]
        b_powers = [b]
        for _ in range(6):
            a_powers.append(delta(ctx, a_powers[-1]))
            b_powers.append(delta(ctx, b_powers[-1]))
        terms = [a_powers[i] * b_powers[6 - i] * (-1) ** i for i in range(7)]
        return poly_sum(terms) / 144

    return ctx.remember("w3pp_delta", build)


def build_w4(ctx: InvariantContext) -> MultiPoly:
    return ctx.remember("w4", lambda: build_u(ctx) * build_v(ctx) ** 2)


def build_w5(ctx: InvariantContext) -> MultiPoly:
    return ctx.remember("w5", lambda: build_v(ctx) * cubic_determinant(ctx))


def build_w6(ctx: InvariantContext) -> MultiPoly:
    t = ctx.trace

    def build():
        xxx, xxy, xyy, yyy = t("xxx"), t("xxy"), t("xyy"), t("yyy")
        first = det2(xxx, xyy, xxy, yyy)
        second = det2(yyy, xyy, xyy, xxy)
        third = det2(xxx, xxy, xxy, xyy)
        return first**2 - 4 * second * third

    return ctx.remember("w6", build)


def build_w7(ctx: InvariantContext) -> MultiPoly:
    return ctx.remember("w7", lambda: build_v(ctx) ** 3)


_BUILDERS = {
    "w1": build_w1,
    "w2": build_w2,
    "w3p": build_w3p,
    "w3pp": build_w3pp_explicit,
    "w4": build_w4,
    "w5": build_w5,
    "w6": build_w6,
    "w7": build_w7,
}


def w_elements(ctx: InvariantContext) -> dict[str, MultiPoly]:
    """W_LABELS 순서의 w_i."""
    return {label: _BUILDERS[label](ctx) for label in W_LABELS}


def generators(ctx: InvariantContext) -> dict[str, MultiPoly]:
    """
    열한 개의 생성원. tr(X), tr(Y) 는 무대각합 부분과 무관하므로
    보조 변수 t1, t2 로 둡니다.
    """
    t = ctx.trace
    return {
        "tr(X)": MultiPoly.var("t1"),
        "tr(Y)": MultiPoly.var("t2"),
        "tr(x^2)": t("xx"),
        "tr(xy)": t("xy"),
        "tr(y^2)": t("yy"),
        "tr(x^3)": t("xxx"),
        "tr(x^2y)": t("xxy"),
        "tr(xy^2)": t("xyy"),
        "tr(y^3)": t("yyy"),
        "v": build_v(ctx),
        "w": build_w(ctx),
    }


def check_xi(xi: Sequence) -> tuple[Fraction, ...]:
    if len(xi) != len(W_LABELS):
        raise XiVectorError(len(xi))
    return as_fraction_tuple(xi)


def relation_polynomial(ctx: InvariantContext, xi: Sequence = DEFINING_XI) -> MultiPoly:
    """w^2 - sum xi_i w_i."""
    xi = check_xi(xi)
    w = build_w(ctx)
    square = ctx.remember("w_squared", lambda: w * w)
    elements = w_elements(ctx)
    combination = poly_sum(elements[label] * c for label, c in zip(W_LABELS, xi, strict=True) if c)
    residual = square - combination
    logger.info(f"[{ctx.label}] relation residual: {len(residual)} terms")
    return residual


def verify_lemma1(ctx: InvariantContext) -> tuple[MultiPoly, MultiPoly]:
    """
    tr(x^2y^2) 와 tr(x^2y^2xy) 를 v, w 와 나머지 생성원으로 쓴 두 식의 잔차.
    """
    t = ctx.trace
    v, w = build_v(ctx), build_w(ctx)
    xx, xy, yy = t("xx"), t("xy"), t("yy")
    residual_quartic = t("xxyy") - (v / 3 + xx * yy / 6 + xy * xy / 3)
    residual_sextic = t("xxyyxy") - (
        w / 2
        + xy * v / 6
        + xx * xy * yy / 12
        + xy**3 / 6
        - t("xxx") * t("yyy") / 6
        + t("xxy") * t("xyy") / 2
    )
    return residual_quartic, residual_sextic


def bihomogeneous_ch_component(ctx: InvariantContext) -> MultiPoly:
    """4tr(x^2y^2) + 2tr(xyxy) - tr(x^2)tr(y^2) - 2tr^2(xy); 0 이어야 합니다."""
    t = ctx.trace
    return 4 * t("xxyy") + 2 * t("xyxy") - t("xx") * t("yy") - 2 * t("xy") ** 2


def hwv_residuals(ctx: InvariantContext) -> dict[str, MultiPoly]:
    """v, w 와 모든 w_i 에 대한 delta."""
    out = {"v": delta(ctx, build_v(ctx)), "w": delta(ctx, build_w(ctx))}
    for label, element in w_elements(ctx).items():
        out[label] = delta(ctx, element)
    return out


def delta_nilpotency(ctx: InvariantContext) -> tuple[MultiPoly, MultiPoly]:
    """delta^7(tr^3(y^2)), delta^7(tr^2(y^3))."""
    return (
        delta_power(ctx, ctx.trace("yy") ** 3, 7),
        delta_power(ctx, ctx.trace("yyy") ** 2, 7),
    )


def independence_rank(ctx: InvariantContext) -> int:
    """w_i 계수 벡터들의 정확한 계수(rank). 8 이면 일차독립."""
    coefficients = [dict(element.items()) for element in w_elements(ctx).values()]
    monomials = sorted({key for terms in coefficients for key in terms})
    matrix = [[terms.get(key, 0) for key in monomials] for terms in coefficients]
    result = rank(matrix)
    logger.info(f"[{ctx.label}] w_i rank {result} over {len(monomials)} monomials")
    return result
