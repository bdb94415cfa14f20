from fractions import Fraction
from itertools import product

import pytest

from apps.exactpoly.polynomial import MultiPoly, homogeneous_component
from apps.matrixtrace.exceptions import EmptyWordError, NonTracelessMatrixError
from apps.matrixtrace.matrices import (
    cayley_hamilton_residual,
    ch_traceless_identity,
    diagonal_traceless_x,
    generic_matrix,
    generic_traceless_x,
    generic_traceless_y,
    identity_matrix,
    mat_mul,
    mat_subst,
    newton_elementary,
    trace,
    trace_word,
    traceless_ch_matrix_residual,
)

x1 = MultiPoly.var("x1")
x2 = MultiPoly.var("x2")


@pytest.fixture(scope="module")
def x():
    return diagonal_traceless_x()


@pytest.fixture(scope="module")
def y():
    return generic_traceless_y()


class TestConstructors:
    def test_generic_traceless_y(self, y):
        assert trace(y).is_zero()
        assert y.entry(3, 3) == -MultiPoly.var("y11") - MultiPoly.var("y22")
        assert y.entry(1, 2) == MultiPoly.var("y12")
        assert len(trace(y).variables()) == 0
        free = set()
        for row in y.entries:
            for e in row:
                free |= e.variables()
        assert len(free) == 8

    def test_diagonal_traceless_x(self, x):
        assert trace(x).is_zero()
        assert x.entry(3, 3) == -x1 - x2
        assert x.entry(1, 2).is_zero()

    def test_generic_matrix_has_nine_variables(self):
        z = generic_matrix("x")
        assert not trace(z).is_zero()
        assert len(trace(z).variables()) == 3


class TestTraceWord:
    def test_traceless_single(self, x):
        assert trace_word([x]).is_zero()

    def test_square(self, x):
        assert trace_word([x, x]) == x1**2 + x2**2 + (x1 + x2) ** 2

    def test_cyclic_pair(self, x, y):
        assert (trace_word([x, y]) - trace_word([y, x])).is_zero()

    def test_empty_word_rejected(self):
        with pytest.raises(EmptyWordError):
            trace_word([])

    @pytest.mark.parametrize("length", [2, 3, 4, 5, 6])
    def test_cyclic_invariance_all_rotations(self, x, y, length):
        mats = {"x": x, "y": y}
        for letters in product("xy", repeat=length):
            value = trace_word([mats[c] for c in letters])
            for shift in range(1, length):
                rotated = letters[shift:] + letters[:shift]
                assert trace_word([mats[c] for c in rotated]) == value


class TestNewton:
    def test_traceless(self):
        p2, p3 = MultiPoly.var("z1"), MultiPoly.var("z2")
        e1, e2, e3 = newton_elementary(0, p2, p3)
        assert e1.is_zero()
        assert e2 == -p2 / 2
        assert e3 == p3 / 3

    def test_all_eigenvalues_one(self):
        assert newton_elementary(3, 3, 3) == (3, 3, 1)

    def test_plus_minus_zero(self):
        assert newton_elementary(0, 2, 0) == (0, -1, 0)


class TestCayleyHamilton:
    def test_generic_residual_vanishes(self):
        assert cayley_hamilton_residual(generic_matrix("x")).is_zero()

    def test_traceless_matrix_residual_vanishes(self, y):
        assert traceless_ch_matrix_residual(y).is_zero()

    def test_identity_diagonal(self, x):
        assert ch_traceless_identity(x).is_zero()

    def test_identity_generic_traceless(self, y):
        assert ch_traceless_identity(y).is_zero()

    def test_identity_sum(self, x, y):
        assert ch_traceless_identity(x + y).is_zero()

    def test_identity_generic_x_plus_y(self, y):
        assert ch_traceless_identity(generic_traceless_x() + y).is_zero()

    def test_nonzero_trace_rejected(self):
        with pytest.raises(NonTracelessMatrixError):
            ch_traceless_identity(identity_matrix())

    def test_bidegree_two_two_component(self, x, y):
        s = x + y
        s2 = mat_mul(s, s)
        x_vars = ["x1", "x2"]
        quartic = homogeneous_component(trace_word([s2, s2]), x_vars, 2)
        square = homogeneous_component(trace(s2) * trace(s2) / 2, x_vars, 2)
        tr = lambda *w: trace_word(list(w))  # noqa: E731
        assert quartic == 4 * tr(x, x, y, y) + 2 * tr(x, y, x, y)
        assert square == tr(x, x) * tr(y, y) + 2 * tr(x, y) * tr(x, y)
        expected = 4 * tr(x, x, y, y) + 2 * tr(x, y, x, y) - tr(x, x) * tr(y, y) - 2 * tr(x, y) ** 2
        assert (quartic - square) == expected
        assert expected.is_zero()

    def test_numeric_specialization(self):
        z = generic_matrix("x")
        values = {f"x{i}{j}": Fraction(i * 3 + j - 2, j) for i in range(1, 4) for j in range(1, 4)}
        assert cayley_hamilton_residual(mat_subst(z, values)).is_zero()
