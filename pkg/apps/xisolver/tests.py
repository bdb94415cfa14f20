from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from apps.invariantlib.elements import DEFINING_XI, relation_polynomial
from apps.xisolver.exceptions import InconsistentSystemError, RaggedSystemError
from apps.xisolver.linalg import (
    LinearSystem,
    SolutionStatus,
    format_matrix,
    nullspace,
    rank,
    rref,
    solve_exact,
)
from apps.xisolver.pipeline import (
    XiEquation,
    deduplicate,
    reduced_equations,
    xi_pipeline,
    xi_step_equations,
)

ETA = ["eta1", "eta2", "eta3", "eta4"]

rationals = st.fractions(min_value=-9, max_value=9, max_denominator=5)


def square_matrices(n):
    return st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n)


def det_by_permutations(m):
    n = len(m)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction((-1) ** inversions)
        for i in range(n):
            term *= m[i][perm[i]]
        total += term
    return total


def cofactor_inverse(m):
    n = len(m)
    det = det_by_permutations(m)
    if n == 1:
        return [[1 / det]]
    inverse = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1 :] for k, row in enumerate(m) if k != i]
            inverse[j][i] = (-1) ** (i + j) * det_by_permutations(minor) / det
    return inverse


class TestLinearSystem:
    def test_ragged_rows_rejected(self):
        system = LinearSystem(labels=["a", "b"])
        with pytest.raises(RaggedSystemError):
            system.add_row([1, 2, 3], 0)

    def test_printable(self):
        system = LinearSystem(labels=["a", "b"], rows=[([1, Fraction(-1, 2)], 3)])
        assert str(system) == "1*a + -1/2*b = 3"
        assert format_matrix([[1, Fraction(1, 2)], [0, -3]]) == "[  1 1/2]\n[  0  -3]"


class TestSolveExact:
    def test_eta_system(self):
        # tr(X^3Y^3), tr(X^2Y^2XY), tr(Y^2X^2YX), tr(XYXYXY) 의 선형화 계수
        system = LinearSystem(labels=ETA, rows=[([2, 1, 1, 0], 0), ([1, 1, 1, 3], 0), ([0, 1, 1, 0], 0)])
        solution = solve_exact(system)
        assert solution.status == SolutionStatus.PARAMETRIC
        assert solution.free == ["eta3"]
        assert solution.nullspace == [[0, -1, 1, 0]]
        assert solution.particular == [0, 0, 0, 0]

    def test_identity(self):
        system = LinearSystem(labels=["a", "b", "c"], rows=[([1, 0, 0], 0), ([0, 1, 0], 0), ([0, 0, 1], 0)])
        solution = solve_exact(system)
        assert solution.status == SolutionStatus.UNIQUE
        assert solution.particular == [0, 0, 0]

    def test_inconsistent(self):
        system = LinearSystem(labels=["a"], rows=[([0], 1)])
        assert solve_exact(system).status == SolutionStatus.INCONSISTENT

    def test_inconsistent_pair(self):
        system = LinearSystem(labels=["a", "b"], rows=[([1, 1], 1), ([2, 2], 3)])
        assert solve_exact(system).status == SolutionStatus.INCONSISTENT

    def test_rational_unique(self):
        system = LinearSystem(labels=["a", "b"], rows=[([Fraction(1, 2), 1], 2), ([3, Fraction(-1, 3)], 1)])
        solution = solve_exact(system)
        a, b = solution.particular
        assert a / 2 + b == 2
        assert 3 * a - b / 3 == 1

    def test_first_nonzero_pivoting(self):
        reduced, pivots = rref([[0, 2, 4], [3, 0, 3]])
        assert pivots == [0, 1]
        assert reduced == [[1, 0, 1], [0, 1, 2]]

    def test_rank_and_nullspace(self):
        m = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
        assert rank(m) == 2
        (vec,) = nullspace(m)
        assert vec == [1, 1, -1]
        for row in m:
            assert sum(a * b for a, b in zip(row, vec, strict=True)) == 0

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=1, max_value=6).flatmap(lambda n: st.tuples(square_matrices(n), st.lists(rationals, min_size=n, max_size=n))))
    def test_matches_cofactor_inverse(self, data):
        m, b = data
        assume(det_by_permutations(m) != 0)
        solution = solve_exact(LinearSystem(labels=[f"v{i}" for i in range(len(m))], rows=list(zip(m, b, strict=True))))
        assert solution.status == SolutionStatus.UNIQUE
        inverse = cofactor_inverse(m)
        expected = [sum(inverse[i][j] * b[j] for j in range(len(b))) for i in range(len(b))]
        assert solution.particular == expected


class TestEquationHandling:
    def test_deduplicate_scaled_rows(self):
        a = XiEquation((Fraction(2), Fraction(4)), Fraction(6))
        b = XiEquation((Fraction(1), Fraction(2)), Fraction(3))
        c = XiEquation((Fraction(1), Fraction(2)), Fraction(4))
        assert deduplicate([a, b, c]) == [a, c]

    def test_residual_text(self):
        equation = XiEquation((0, 0, 0, Fraction(360), 0, 0, 0, 0), Fraction(4))
        assert equation.residual_text() == "4 - (360*xi3pp) = 0"


class TestPipelineSteps:
    def test_step1_named_coefficients(self):
        equations = {e.monomial: e for e in xi_step_equations("step1")}
        sextic = equations["x1^6"]
        assert sextic.coeffs == (0, 0, 0, 360, 0, 0, 0, 0)
        assert sextic.rhs == 4
        mixed = equations["x1^4*x2^2"]
        assert mixed.coeffs == (0, 0, 0, 2160, 0, 0, 81, 0)
        assert mixed.rhs == -3

    def test_step1_only_w3pp_and_w6(self):
        for equation in xi_step_equations("step1"):
            assert [i for i, c in enumerate(equation.coeffs) if c] in ([3], [6], [3, 6])

    def test_step2_single_equation(self):
        (equation,) = xi_step_equations("step2")
        assert equation.coeffs == (27, 0, -9, 36, 0, 0, -3, 0)
        assert equation.rhs == 0

    def test_step3_sextic_coefficient(self):
        equations = {e.monomial: e for e in xi_step_equations("step3")}
        sextic = equations["x1^6"]
        assert sextic.coeffs == (64, 16, -8, 72, 4, -2, 0, 1)
        assert sextic.rhs == 0


class TestPipelineAbort:
    def test_contradiction_names_step(self, contradiction_at_step2):
        with pytest.raises(InconsistentSystemError) as excinfo:
            xi_pipeline()
        assert excinfo.value.detail == "step2"

    def test_later_steps_not_reached(self, contradiction_at_step2):
        with pytest.raises(InconsistentSystemError):
            xi_pipeline()
        assert contradiction_at_step2 == ["step1", "step2"]


@pytest.mark.slow
class TestPipeline:
    @pytest.fixture(scope="class")
    def transcript(self, diagonal_ctx):
        return xi_pipeline(diagonal_ctx)

    def test_final_xi(self, transcript):
        assert transcript.xi == DEFINING_XI

    def test_family_after_step3(self, transcript):
        family = transcript.step("step3").solution
        assert family.status == SolutionStatus.PARAMETRIC
        assert family.free == ["xi4", "xi7"]
        third = Fraction(1, 3)
        assert family.particular == [Fraction(-1, 54), Fraction(1, 54), Fraction(1, 10), Fraction(1, 90), 0, Fraction(-4, 9), -third, 0]
        assert family.nullspace == [
            [Fraction(1, 2), Fraction(-3, 2), Fraction(3, 2), 0, 1, 0, 0, 0],
            [Fraction(3, 4), Fraction(-7, 4), Fraction(9, 4), 0, 0, Fraction(3, 2), 0, 1],
        ]

    def test_step4_reduced_equations(self, transcript):
        first, second = transcript.step("step4").reduced
        assert first.free == ("xi4", "xi7")
        assert first.coeffs == (-27, Fraction(-81, 2))
        assert first.constant == 3
        assert second.coeffs == (-36, -90)
        assert second.constant == Fraction(-4, 3)

    def test_closes_the_loop(self, transcript, diagonal_ctx):
        assert relation_polynomial(diagonal_ctx, transcript.xi).is_zero()

    def test_transcript_text(self, transcript):
        text = str(transcript)
        assert "== step1" in text
        assert text.endswith("xi = (1/27, -2/9, 4/15, 1/90, 1/3, -2/3, -1/3, -4/27)")

    def test_discover_mode_agrees(self, diagonal_ctx):
        transcript = xi_pipeline(diagonal_ctx, discover=True)
        assert transcript.xi == DEFINING_XI
        assert len(transcript.step("step4").equations) > 2

    def test_reduced_equations_vanish_at_solution(self, transcript):
        for equation in transcript.step("step4").reduced:
            xi4, xi7 = DEFINING_XI[4], DEFINING_XI[7]
            assert equation.constant + equation.coeffs[0] * xi4 + equation.coeffs[1] * xi7 == 0

    def test_constant_row_reduces_to_itself(self, transcript):
        family = transcript.step("step3").solution
        (reduced,) = reduced_equations([XiEquation((Fraction(0),) * 8, Fraction(1), "1", "step4")], family)
        assert reduced.constant == 1
        assert reduced.coeffs == (0, 0)
