from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from apps.exactpoly.exceptions import PolynomialParseError, UnknownVariableError
from apps.exactpoly.polynomial import (
    Monomial,
    MultiPoly,
    coeff_of,
    homogeneous_component,
    multidegrees,
    poly_add,
    poly_diff,
    poly_mul,
    poly_subst,
)
from apps.exactpoly.registry import NUM_VARS, VAR_NAMES, var_index

x1 = MultiPoly.var("x1")
x2 = MultiPoly.var("x2")
y11 = MultiPoly.var("y11")

# 속성 테스트용 작은 다항식: 변수 4개, 지수 0~3, 항 0~5개
SMALL_VARS = ["x1", "x2", "y11", "y12"]

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=7)
monomials = st.dictionaries(st.sampled_from(SMALL_VARS), st.integers(min_value=0, max_value=3), max_size=3)
polys = st.lists(st.tuples(monomials, rationals), max_size=5).map(
    lambda pairs: sum((MultiPoly.monomial(m, c) for m, c in pairs), MultiPoly.zero())
)


class TestRegistry:
    def test_registry_is_bijective(self):
        assert len(VAR_NAMES) == len(set(VAR_NAMES)) == NUM_VARS
        for index, name in enumerate(VAR_NAMES):
            assert var_index(name) == index

    def test_unknown_variable_rejected(self):
        with pytest.raises(UnknownVariableError):
            MultiPoly.var("w9")


class TestPolyAdd:
    def test_additive_identity(self):
        p = x1 * x1 + 3 * x2
        assert poly_add(MultiPoly.zero(), p) == p

    def test_cancellation(self):
        assert (x1 + x2) + (x1 - x2) == 2 * x1

    def test_inverse_is_empty_term_map(self):
        p = x1 * y11 - Fraction(1, 3)
        result = p + (-p)
        assert result.is_zero()
        assert len(result) == 0


class TestPolyMul:
    def test_multiplicative_identity(self):
        p = x1 * x2 - 5
        assert poly_mul(MultiPoly.one(), p) == p

    def test_binomial(self):
        assert (x1 + x2) ** 2 == x1 * x1 + 2 * x1 * x2 + x2 * x2

    def test_difference_of_squares(self):
        assert (x1 - x2) * (x1 + x2) == x1**2 - x2**2

    def test_matches_sympy_expansion(self):
        a, b = sympy.symbols("x1 x2")
        expected = sympy.Poly(sympy.expand((a + 2 * b - sympy.Rational(1, 3)) ** 4), a, b)
        ours = (x1 + 2 * x2 - Fraction(1, 3)) ** 4
        for (i, j), c in zip(expected.monoms(), expected.coeffs(), strict=True):
            assert coeff_of(ours, {"x1": i, "x2": j}) == Fraction(int(c.p), int(c.q))
        assert len(ours) == len(expected.monoms())


class TestPolyDiff:
    def test_power_rule(self):
        assert poly_diff(x1**3, "x1") == 3 * x1**2

    def test_mixed(self):
        assert poly_diff(x1 * y11, "y11") == x1

    def test_constant(self):
        assert poly_diff(MultiPoly.constant(7), "x2").is_zero()


class TestPolySubst:
    def test_partial_assignment(self):
        assert poly_subst(x1**2 + x2, {"x1": 0}) == x2

    def test_variable_to_variable(self):
        assert poly_subst(y11, {"y11": x1}) == x1

    def test_vanishing(self):
        assert poly_subst((x1 + x2) ** 2, {"x2": -x1}).is_zero()

    def test_unassigned_variables_pass_through(self):
        p = x1 * y11 + x2
        assert poly_subst(p, {"y11": 2}) == 2 * x1 + x2

    def test_simultaneous(self):
        # x1 -> x2, x2 -> x1 을 동시에 적용
        assert poly_subst(x1 - 2 * x2, {"x1": x2, "x2": x1}) == x2 - 2 * x1


class TestCoeffOf:
    def test_present(self):
        assert coeff_of(2 * x1 * x2, "x1*x2") == 2

    def test_zero_polynomial(self):
        assert coeff_of(MultiPoly.zero(), "x1^5*y11") == 0

    def test_binomial_coefficient(self):
        assert coeff_of((x1 + x2) ** 3, Monomial.parse("x1^2*x2")) == 3


class TestSerialization:
    def test_format(self):
        p = Fraction(1, 2) * x1**2 * y11 - x2 + 3
        assert str(p) == "1/2*x1^2*y11 - x2 + 3"

    def test_zero(self):
        assert str(MultiPoly.zero()) == "0"

    def test_leading_minus(self):
        assert str(-x1 - Fraction(2, 3) * x2) == "-x1 - 2/3*x2"

    def test_graded_order_lowest_index_strongest(self):
        assert str(x2**2 + x1 * x2 + x1**2 + x1) == "x1^2 + x1*x2 + x2^2 + x1"

    def test_parse(self):
        assert MultiPoly.parse("-x1^2*y11 + 1/3*x2 - 4") == -(x1**2) * y11 + Fraction(1, 3) * x2 - 4

    @pytest.mark.parametrize("text", ["", "x1 +", "2*", "x1^^2", "q7"])
    def test_parse_rejects_malformed(self, text):
        with pytest.raises((PolynomialParseError, UnknownVariableError)):
            MultiPoly.parse(text)

    @pytest.mark.parametrize("text", ["2/0*x1", "1/0", "x1 - 3/0*x2"])
    def test_zero_denominator_is_parse_error(self, text):
        with pytest.raises(PolynomialParseError):
            MultiPoly.parse(text)

    @given(polys)
    def test_round_trip(self, p):
        assert MultiPoly.parse(str(p)) == p


class TestBihomogeneous:
    def test_component_and_multidegree(self):
        p = x1**2 * y11 + x1 * y11**2 + x2
        assert homogeneous_component(p, ["x1", "x2"], 2) == x1**2 * y11
        assert multidegrees(p, [["x1", "x2"], ["y11"]]) == {(2, 1), (1, 2), (1, 0)}


class TestRingAxioms:
    @settings(max_examples=60)
    @given(polys, polys, polys)
    def test_associativity(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)

    @settings(max_examples=60)
    @given(polys, polys)
    def test_commutativity(self, a, b):
        assert a + b == b + a
        assert a * b == b * a

    @settings(max_examples=60)
    @given(polys, polys, polys)
    def test_distributivity(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @settings(max_examples=60)
    @given(polys, polys, st.sampled_from(SMALL_VARS))
    def test_diff_is_derivation(self, a, b, v):
        assert poly_diff(a * b, v) == poly_diff(a, v) * b + a * poly_diff(b, v)

    @settings(max_examples=60)
    @given(polys, polys, polys, rationals)
    def test_subst_is_homomorphism(self, a, b, image, value):
        assignment = {"x1": image, "y12": value}
        assert poly_subst(a * b, assignment) == poly_subst(a, assignment) * poly_subst(b, assignment)
        assert poly_subst(a + b, assignment) == poly_subst(a, assignment) + poly_subst(b, assignment)
