from fractions import Fraction

import pytest

from apps.exactpoly.polynomial import MultiPoly, multidegrees, poly_subst
from apps.invariantlib.context import Y_FREE, InvariantContext, delta
from apps.invariantlib.elements import (
    DEFINING_XI,
    W_LABELS,
    bihomogeneous_ch_component,
    build_u,
    build_v,
    build_w,
    build_w1,
    build_w2,
    build_w3pp_explicit,
    build_w3pp_via_delta,
    build_w4,
    build_w6,
    build_w7,
    cubic_determinant,
    delta_nilpotency,
    generators,
    hwv_residuals,
    independence_rank,
    relation_polynomial,
    verify_lemma1,
    w_elements,
)
from apps.invariantlib.exceptions import DerivationUnavailableError, XiVectorError
from apps.matrixtrace.matrices import trace_word
from apps.traceword.words import FormalTraceCombo, enumerate_basis, hwv_solve, linearize
from apps.xisolver.pipeline import CIRCULANT_Y, SYMMETRIC_Y

x1 = MultiPoly.var("x1")
x2 = MultiPoly.var("x2")

# y -> x (x 대각): y11 -> x1, y22 -> x2, 나머지 자유 y 변수 -> 0
Y_TO_X = {name: 0 for name in Y_FREE} | {"y11": x1, "y22": x2}


def bidegree(ctx, p):
    return multidegrees(p, ctx.bidegree_groups())


@pytest.fixture(scope="module")
def circulant_ctx():
    return InvariantContext.specialized(CIRCULANT_Y)


class TestContext:
    def test_cache_matches_recomputation(self, diagonal_ctx):
        for word in ("xxyy", "xyxy", "xxyyxy"):
            matrices = [diagonal_ctx.x if c == "x" else diagonal_ctx.y for c in word]
            assert diagonal_ctx.trace(word) == trace_word(matrices)

    def test_rotations_share_cache_entry(self, diagonal_ctx):
        assert diagonal_ctx.trace("yxxy") is diagonal_ctx.trace("xxyy")

    def test_evaluate_formal_combo(self, diagonal_ctx):
        combo = FormalTraceCombo.product(["XX", "YY"]) - FormalTraceCombo.word("XY", 2)
        expected = diagonal_ctx.trace("xx") * diagonal_ctx.trace("yy") - 2 * diagonal_ctx.trace("xy")
        assert diagonal_ctx.evaluate(combo) == expected

    def test_specialized_has_no_derivation(self, circulant_ctx):
        with pytest.raises(DerivationUnavailableError):
            delta(circulant_ctx, circulant_ctx.trace("xy"))

    def test_generators(self, diagonal_ctx):
        gens = generators(diagonal_ctx)
        assert len(gens) == 11
        assert gens["tr(X)"] == MultiPoly.var("t1")
        assert gens["v"] == build_v(diagonal_ctx)


class TestV:
    def test_y_equals_x(self, diagonal_ctx):
        assert poly_subst(build_v(diagonal_ctx), Y_TO_X).is_zero()

    def test_circulant_value(self, circulant_ctx):
        # 순환 행렬에서는 u, v 모두 0 이 되어 1단계에 w, w3'', w6 만 남습니다
        assert build_v(circulant_ctx).is_zero()
        assert build_u(circulant_ctx).is_zero()

    def test_bidegree(self, diagonal_ctx):
        assert bidegree(diagonal_ctx, build_v(diagonal_ctx)) == {(2, 2)}

    def test_swap_symmetric(self, diagonal_ctx):
        assert build_v(diagonal_ctx.swapped()) == build_v(diagonal_ctx)


class TestW:
    def test_y_equals_x(self, diagonal_ctx):
        assert poly_subst(build_w(diagonal_ctx), Y_TO_X).is_zero()

    def test_diagonal_pair(self):
        ctx = InvariantContext.specialized(((0, 0, 0), (0, 1, 0), (0, 0, -1)))
        assert build_w(ctx).is_zero()

    def test_symmetric_y(self):
        assert build_w(InvariantContext.specialized(SYMMETRIC_Y)).is_zero()

    def test_circulant_nonzero(self, circulant_ctx):
        assert not build_w(circulant_ctx).is_zero()

    def test_bidegree(self, diagonal_ctx):
        assert bidegree(diagonal_ctx, build_w(diagonal_ctx)) == {(3, 3)}

    def test_swap_antisymmetric(self, diagonal_ctx):
        assert build_w(diagonal_ctx.swapped()) == -build_w(diagonal_ctx)


class TestDelta:
    def test_trace_x2y(self, diagonal_ctx):
        assert delta(diagonal_ctx, diagonal_ctx.trace("xxy")) == diagonal_ctx.trace("xxx")

    def test_v_and_w_annihilated(self, diagonal_ctx):
        assert delta(diagonal_ctx, build_v(diagonal_ctx)).is_zero()
        assert delta(diagonal_ctx, build_w(diagonal_ctx)).is_zero()

    def test_generic_x_v_annihilated(self, generic_ctx):
        assert delta(generic_ctx, build_v(generic_ctx)).is_zero()

    def test_generic_x_image_of_y(self, generic_ctx):
        assert delta(generic_ctx, generic_ctx.trace("xy")) == generic_ctx.trace("xx")

    def test_nilpotency(self, diagonal_ctx):
        first, second = delta_nilpotency(diagonal_ctx)
        assert first.is_zero()
        assert second.is_zero()

    @pytest.mark.parametrize("length", [2, 3, 4, 5, 6])
    def test_linearize_commutes_with_evaluation(self, diagonal_ctx, length):
        for word in enumerate_basis(length):
            combo = FormalTraceCombo({word: 1})
            assert diagonal_ctx.evaluate(linearize(combo)) == delta(diagonal_ctx, diagonal_ctx.evaluate(combo))


class TestHighestWeightSearch:
    def test_degree_two_two_is_v(self, diagonal_ctx):
        assert diagonal_ctx.evaluate(hwv_solve((2, 2)).basis[0]) == build_v(diagonal_ctx)

    def test_degree_three_three_is_w_up_to_sign(self, diagonal_ctx):
        assert diagonal_ctx.evaluate(hwv_solve((3, 3)).basis[0]) == -build_w(diagonal_ctx)

    def test_products_give_cubic_determinant(self, diagonal_ctx):
        combo = hwv_solve((4, 4), [2, 3, 3]).basis[0]
        assert diagonal_ctx.evaluate(combo) == cubic_determinant(diagonal_ctx)

    def test_four_cubics_give_w6(self, diagonal_ctx):
        combo = hwv_solve((6, 6), [3, 3, 3, 3]).basis[0]
        assert diagonal_ctx.evaluate(combo) == build_w6(diagonal_ctx)


class TestLemma1:
    def test_quartic_residual(self, diagonal_ctx):
        residual_quartic, _ = verify_lemma1(diagonal_ctx)
        assert residual_quartic.is_zero()

    def test_sextic_residual(self, diagonal_ctx):
        _, residual_sextic = verify_lemma1(diagonal_ctx)
        assert residual_sextic.is_zero()

    def test_generic_x_quartic_residual(self, generic_ctx):
        residual_quartic, _ = verify_lemma1(generic_ctx)
        assert residual_quartic.is_zero()

    @pytest.mark.slow
    def test_generic_x_sextic_residual(self, generic_ctx):
        _, residual_sextic = verify_lemma1(generic_ctx)
        assert residual_sextic.is_zero()

    def test_bihomogeneous_ch_component(self, diagonal_ctx):
        assert bihomogeneous_ch_component(diagonal_ctx).is_zero()


class TestElements:
    def test_w1_vanishes_on_y_equals_x(self, diagonal_ctx):
        assert poly_subst(build_u(diagonal_ctx), Y_TO_X).is_zero()
        assert poly_subst(build_w1(diagonal_ctx), Y_TO_X).is_zero()

    def test_algebraic_identities(self, diagonal_ctx):
        v = build_v(diagonal_ctx)
        assert build_w7(diagonal_ctx) == v**3
        assert build_w2(diagonal_ctx) * build_w4(diagonal_ctx) == build_w1(diagonal_ctx) * build_w7(diagonal_ctx)

    @pytest.mark.slow
    def test_all_bidegree_six_six(self, diagonal_ctx):
        for label, element in w_elements(diagonal_ctx).items():
            assert bidegree(diagonal_ctx, element) == {(6, 6)}, label

    @pytest.mark.slow
    def test_w3pp_delta_form_matches_explicit(self, diagonal_ctx):
        assert build_w3pp_via_delta(diagonal_ctx) - build_w3pp_explicit(diagonal_ctx) == 0

    def test_w3pp_vanishes_on_y_equals_x(self, diagonal_ctx):
        assert poly_subst(build_w3pp_explicit(diagonal_ctx), Y_TO_X).is_zero()

    @pytest.mark.slow
    def test_highest_weight_vectors(self, diagonal_ctx):
        for label, residual in hwv_residuals(diagonal_ctx).items():
            assert residual.is_zero(), label

    @pytest.mark.slow
    def test_highest_weight_vectors_generic_x(self, generic_ctx):
        for label, residual in hwv_residuals(generic_ctx).items():
            assert residual.is_zero(), label

    @pytest.mark.slow
    def test_linearly_independent(self, diagonal_ctx):
        assert independence_rank(diagonal_ctx) == 8


class TestRelation:
    @pytest.mark.slow
    def test_defining_relation_vanishes(self, diagonal_ctx):
        assert relation_polynomial(diagonal_ctx, DEFINING_XI).is_zero()

    @pytest.mark.slow
    def test_defining_relation_vanishes_generic_x(self, generic_ctx):
        assert relation_polynomial(generic_ctx, DEFINING_XI).is_zero()

    @pytest.mark.slow
    def test_zero_xi_gives_w_squared(self, diagonal_ctx):
        residual = relation_polynomial(diagonal_ctx, [0] * 8)
        assert residual == build_w(diagonal_ctx) ** 2
        assert bidegree(diagonal_ctx, residual) == {(6, 6)}

    @pytest.mark.slow
    @pytest.mark.parametrize("index", range(8))
    def test_perturbed_xi_fails(self, diagonal_ctx, index):
        xi = list(DEFINING_XI)
        xi[index] += 1
        residual = relation_polynomial(diagonal_ctx, xi)
        assert not residual.is_zero()
        assert residual == -w_elements(diagonal_ctx)[W_LABELS[index]]

    def test_wrong_length_rejected(self, diagonal_ctx):
        with pytest.raises(XiVectorError):
            relation_polynomial(diagonal_ctx, [Fraction(1)] * 7)
