from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from apps.gl2rep.characters import (
    Decomposition,
    Partition2,
    extract_multiplicities,
    lr_tensor,
    schur,
    series_of,
)
from apps.gl2rep.exceptions import (
    InvalidBoundError,
    InvalidFactorError,
    InvalidPartitionError,
    NotACharacterError,
    ZeroDenominatorError,
)
from apps.gl2rep.hilbert import (
    GENERATOR_BIDEGREES,
    MUTATION_VARIABLES,
    Q2,
    Q3,
    SQUARE_FACTOR,
    decompose,
    invariant_series,
    presentation_factors,
    presentation_series,
    s_component_decompositions,
    s_series,
    symmetric_algebra_series,
    u_series,
    verify_theorem_series,
)
from apps.gl2rep.series import TruncatedSeries, expand_rational, first_difference

SMALL_PARTITIONS = [Partition2(a, b) for a in range(9) for b in range(a + 1)]

partitions = st.builds(
    lambda a, b: Partition2(a, min(a, b)),
    st.integers(min_value=0, max_value=6),
    st.integers(min_value=0, max_value=6),
)


class TestTruncatedSeries:
    def test_drops_terms_above_bound(self):
        s = TruncatedSeries(2, {(0, 0): 1, (1, 1): 2, (2, 1): 5})
        assert s.coeffs == {(0, 0): 1, (1, 1): 2}

    def test_product_is_truncated(self):
        s = TruncatedSeries(3, {(1, 0): 1, (0, 1): 1})
        square = s * s * s * s
        assert square.is_zero()
        assert (s * s).coeffs == {(2, 0): 1, (1, 1): 2, (0, 2): 1}

    def test_geometric_series(self):
        s = expand_rational([(0, 0)], [(1, 0)], 7)
        assert s.coeffs == {(k, 0): 1 for k in range(8)}

    def test_division_inverts_multiplication(self):
        factor = TruncatedSeries(10, {(0, 0): 1, (2, 1): -1})
        assert (expand_rational([(0, 0)], [(2, 1)], 10) * factor) == TruncatedSeries.one(10)

    def test_zero_denominator(self):
        with pytest.raises(ZeroDenominatorError):
            expand_rational([(0, 0)], [(0, 0)], 4)

    def test_negative_factor(self):
        with pytest.raises(InvalidFactorError):
            expand_rational([(0, 0)], [(-1, 2)], 4)

    def test_printable(self):
        s = TruncatedSeries(2, {(0, 0): 1, (0, 2): Fraction(1, 2), (2, 0): 3})
        assert str(s) == "(0,0): 1\n(2,0): 3\n(0,2): 1/2"

    def test_first_difference(self):
        left = TruncatedSeries(4, {(0, 0): 1, (1, 1): 2})
        right = TruncatedSeries(4, {(0, 0): 1, (1, 1): 3})
        assert first_difference(left, right) == ((1, 1), 2, 3)
        assert first_difference(left, left) is None


class TestSchur:
    def test_two(self):
        assert schur((2, 0)).coeffs == {(2, 0): 1, (1, 1): 1, (0, 2): 1}

    @pytest.mark.parametrize("b", [0, 1, 3, 6])
    def test_rectangular(self, b):
        assert schur((b, b)).coeffs == {(b, b): 1}

    def test_invalid_partition(self):
        with pytest.raises(InvalidPartitionError):
            Partition2(1, 2)
        with pytest.raises(InvalidPartitionError):
            Partition2.of((3, -1))


class TestExtractMultiplicities:
    @pytest.mark.parametrize("p", SMALL_PARTITIONS, ids=str)
    def test_single_schur(self, p):
        assert extract_multiplicities(schur(p, 16)) == {p: 1}

    def test_rejects_negative_multiplicity(self):
        with pytest.raises(NotACharacterError):
            extract_multiplicities(schur((1, 1)) - schur((2, 0)))

    def test_rejects_asymmetric_series(self):
        with pytest.raises(NotACharacterError):
            extract_multiplicities(TruncatedSeries(1, {(1, 0): 1}))

    def test_rejects_fractional_multiplicity(self):
        with pytest.raises(NotACharacterError):
            extract_multiplicities(schur((2, 0)) * Fraction(1, 2))

    @settings(max_examples=60, deadline=None)
    @given(st.dictionaries(partitions, st.integers(min_value=0, max_value=3), max_size=6))
    def test_round_trip(self, multiplicities):
        decomposition = Decomposition(multiplicities)
        assert extract_multiplicities(series_of(decomposition, 12)) == decomposition


class TestLittlewoodRichardson:
    def test_two_by_square(self):
        assert lr_tensor((2, 0), (2, 2)) == {(4, 2): 1}

    def test_argument_order(self):
        assert lr_tensor((2, 2), (3, 0)) == lr_tensor((3, 0), (2, 2))

    def test_contains_six_six(self):
        assert lr_tensor((4, 2), (4, 2)).multiplicity((6, 6)) == 1
        assert lr_tensor((6, 0), (6, 0)).multiplicity((6, 6)) == 1
        assert lr_tensor((6, 0), (4, 2)).multiplicity((6, 6)) == 0

    @pytest.mark.parametrize("p", SMALL_PARTITIONS, ids=str)
    def test_matches_character_product(self, p):
        for q in SMALL_PARTITIONS:
            bound = p.size + q.size
            assert extract_multiplicities(schur(p, bound) * schur(q, bound)) == lr_tensor(p, q), (p, q)

    def test_dimensions_multiply(self):
        for p in SMALL_PARTITIONS[:15]:
            for q in SMALL_PARTITIONS[:15]:
                assert lr_tensor(p, q).dimension() == (p.width + 1) * (q.width + 1)


class TestTraceWordSpaces:
    def test_u6_series(self):
        s = u_series(6)
        assert [s.coeff(6 - j, j) for j in range(4)] == [1, 1, 3, 4]

    @pytest.mark.parametrize(
        ("space", "expected"),
        [
            ("U2", {(2, 0): 1}),
            ("U3", {(3, 0): 1}),
            ("U4", {(4, 0): 1, (2, 2): 1}),
            ("U6", {(6, 0): 1, (4, 2): 2, (3, 3): 1}),
        ],
    )
    def test_decompositions(self, space, expected):
        assert decompose(space) == expected


class TestSymmetricAlgebras:
    def test_even_partitions(self):
        expected = {(2 * i, 2 * j): 1 for i in range(7) for j in range(i + 1) if i + j <= 6}
        assert extract_multiplicities(symmetric_algebra_series(Q2, 12)) == expected

    def test_square_factor(self):
        s = symmetric_algebra_series(SQUARE_FACTOR, 16)
        assert s.coeffs == {(2 * b, 2 * b): 1 for b in range(5)}

    def test_cubic_degree_six(self):
        sextic = symmetric_algebra_series(Q3, 6).slice(6)
        assert extract_multiplicities(sextic) == {(6, 0): 1, (4, 2): 1}

    def test_cubic_degree_twelve(self):
        twelfth = symmetric_algebra_series(Q3, 12).slice(12)
        assert extract_multiplicities(twelfth) == {(12, 0): 1, (10, 2): 1, (9, 3): 1, (8, 4): 1, (6, 6): 1}


class TestAlgebraS:
    def test_degree_six(self):
        assert decompose("S", degree=6) == {(6, 0): 2, (4, 2): 3}

    def test_square_multiplicities(self):
        decomposition = extract_multiplicities(s_series(12))
        assert decomposition.multiplicity((3, 3)) == 0
        assert decomposition.multiplicity((6, 6)) == 8

    def test_components_of_degree_twelve(self):
        components = s_component_decompositions(12)
        assert [c.degrees for c in components] == [
            (12, 0, 0),
            (8, 0, 4),
            (6, 6, 0),
            (4, 0, 8),
            (2, 6, 4),
            (0, 12, 0),
            (0, 0, 12),
        ]
        assert [c.decomposition.multiplicity((6, 6)) for c in components] == [1, 1, 2, 1, 1, 1, 1]

    def test_components_sum_to_slice(self):
        total = Decomposition()
        for component in s_component_decompositions(12):
            total = total + component.decomposition
        assert total == decompose("S", degree=12)


class TestInvariantSeries:
    def test_low_coefficients(self):
        s = invariant_series(4)
        assert s.coeff(0, 0) == 1
        assert s.coeff(1, 1) == 2
        assert s.coeff(2, 2) == 9

    def test_presentation_matches(self):
        assert presentation_series(16) == invariant_series(16)

    def test_verify(self):
        assert verify_theorem_series(16)

    @pytest.mark.parametrize("variable", MUTATION_VARIABLES)
    @pytest.mark.parametrize("index", range(len(GENERATOR_BIDEGREES)))
    def test_mutation_detected(self, index, variable):
        assert not verify_theorem_series(16, mutate_factor=index, mutate_variable=variable)

    def test_mutation_bumps_chosen_variable(self):
        assert presentation_factors(10, "t1")[10] == (4, 3)
        assert presentation_factors(10, "t2")[10] == (3, 4)
        assert presentation_factors(0, "t2")[0] == (1, 1)

    def test_unknown_mutation_variable(self):
        with pytest.raises(InvalidFactorError):
            presentation_factors(0, "t3")

    def test_negative_bound_rejected(self):
        with pytest.raises(InvalidBoundError):
            invariant_series(-1)
        with pytest.raises(InvalidBoundError):
            decompose("U6", bound=-1)
        with pytest.raises(InvalidBoundError):
            decompose("S", degree=-2)

    def test_mutation_index_checked(self):
        with pytest.raises(InvalidFactorError):
            presentation_series(8, mutate_factor=len(GENERATOR_BIDEGREES))

    def test_s_series_times_parameters(self):
        # H(C32) = H(S) (1 + t1^3 t2^3) / ((1-t1)(1-t2))
        expected = expand_rational(s_series(12), [(1, 0), (0, 1)], 12) * TruncatedSeries(12, {(0, 0): 1, (3, 3): 1})
        assert expected == invariant_series(12)
