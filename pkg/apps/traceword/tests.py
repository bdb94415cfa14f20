from fractions import Fraction

import pytest
import sympy

from apps.traceword.exceptions import InvalidDegreeError, InvalidWordError
from apps.traceword.words import (
    FormalTraceCombo,
    TraceWord,
    bidegree_counts,
    canonicalize,
    enumerate_basis,
    hwv_solve,
    hwv_system,
    linearize,
    products_of_degree,
)

W = FormalTraceCombo.word


def necklace_count(k):
    return sum(sympy.totient(d) * 2 ** (k // d) for d in sympy.divisors(k)) // k


class TestCanonicalize:
    def test_least_rotation(self):
        assert canonicalize("YXX") == TraceWord("XXY")

    def test_already_minimal(self):
        assert canonicalize("XYXY").word == "XYXY"

    def test_rotations_agree(self):
        assert canonicalize("XXYYXY") == canonicalize("YXXYYX")

    def test_empty_rejected(self):
        with pytest.raises(InvalidWordError):
            canonicalize("")

    def test_foreign_letter_rejected(self):
        with pytest.raises(InvalidWordError):
            canonicalize("XZY")

    def test_non_canonical_construction_rejected(self):
        with pytest.raises(InvalidWordError):
            TraceWord("YX")


class TestEnumerateBasis:
    def test_length_two(self):
        assert [w.word for w in enumerate_basis(2)] == ["XX", "XY", "YY"]

    def test_length_four(self):
        assert [w.word for w in enumerate_basis(4)] == ["XXXX", "XXXY", "XXYY", "XYXY", "XYYY", "YYYY"]

    def test_length_six_ends_with_y6(self):
        basis = enumerate_basis(6)
        assert len(basis) == 14
        assert basis[-1].word == "YYYYYY"

    @pytest.mark.parametrize("k, expected", [(2, 3), (3, 4), (4, 6), (6, 14)])
    def test_necklace_counts(self, k, expected):
        assert len(enumerate_basis(k)) == expected == necklace_count(k)

    @pytest.mark.parametrize("k", range(1, 11))
    def test_matches_totient_formula(self, k):
        assert len(enumerate_basis(k)) == necklace_count(k)

    def test_bidegree_counts_length_six(self):
        assert bidegree_counts(6) == {(6, 0): 1, (5, 1): 1, (4, 2): 3, (3, 3): 4, (2, 4): 3, (1, 5): 1, (0, 6): 1}

    def test_zero_length_rejected(self):
        with pytest.raises(InvalidDegreeError):
            enumerate_basis(0)


class TestLinearize:
    def test_x3y3(self):
        assert linearize(W("XXXYYY")) == 2 * W("XXXXYY") + W("XXXYXY")

    def test_xyxyxy(self):
        assert linearize(W("XYXYXY")) == 3 * W("XXXYXY")

    def test_x2y2xy(self):
        assert linearize(W("XXYYXY")) == W("XXXXYY") + W("XXXYXY") + W("XXYXXY")

    def test_y2x2yx_matches(self):
        assert linearize(W("YYXXYX")) == linearize(W("XXYYXY"))

    def test_v_is_annihilated(self):
        assert linearize(W("XXYY") - W("XYXY")).is_zero()

    def test_pure_x_word(self):
        assert linearize(W("XXX")).is_zero()

    def test_leibniz_on_products(self):
        combo = FormalTraceCombo.product(["XY", "XY"])
        assert linearize(combo) == 2 * FormalTraceCombo.product(["XX", "XY"])

    def test_serialization(self):
        assert str(W("XXYYXY") - W("YYXXYX")) == "-tr(XXYXYY) + tr(XXYYXY)"
        assert str(Fraction(1, 2) * FormalTraceCombo.product(["XXY", "XXY", "YY"])) == "1/2*tr(XXY)^2*tr(YY)"


class TestHwvSolve:
    def test_eta_system(self):
        candidates, targets, system = hwv_system((3, 3))
        assert [c[0].word for c in candidates] == ["XXXYYY", "XXYXYY", "XXYYXY", "XYXYXY"]
        assert [t[0].word for t in targets] == ["XXXXYY", "XXXYXY", "XXYXXY"]
        assert [coeffs for coeffs, _ in system.rows] == [[2, 1, 1, 0], [1, 1, 1, 3], [0, 1, 1, 0]]

    def test_degree_three_three(self):
        result = hwv_solve((3, 3))
        assert result.dimension == 1
        assert result.basis[0] == W("YYXXYX") - W("XXYYXY")

    def test_degree_two_two(self):
        result = hwv_solve((2, 2))
        assert result.basis == [W("XXYY") - W("XYXY")]

    def test_degree_one_one(self):
        assert hwv_solve((1, 1)).dimension == 0

    def test_pure_x_degree_is_highest(self):
        assert hwv_solve((3, 0)).basis == [W("XXX")]

    @pytest.mark.parametrize("degree", [(2, 2), (3, 3), (4, 2), (4, 4)])
    def test_basis_is_annihilated(self, degree):
        for combo in hwv_solve(degree).basis:
            assert linearize(combo).is_zero()

    def test_products_two_three_three(self):
        candidates = products_of_degree((4, 4), [2, 3, 3])
        assert len(candidates) == 6
        result = hwv_solve((4, 4), [2, 3, 3])
        assert result.dimension == 1
        assert linearize(result.basis[0]).is_zero()

    def test_products_four_cubics(self):
        result = hwv_solve((6, 6), [3, 3, 3, 3])
        assert result.dimension == 1
        assert linearize(result.basis[0]).is_zero()

    def test_bad_factor_lengths(self):
        with pytest.raises(InvalidDegreeError):
            hwv_solve((4, 4), [2, 3])
