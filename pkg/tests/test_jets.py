import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import rationals
from hadamard_cauchy.errors import InvalidInstanceError, OrderMismatchError, SizeLimitError
from hadamard_cauchy.jets import MultiJet, jet_invert, mixed_partial_extract, hadamard_derivative_check
from hadamard_cauchy.series import TruncatedSeries, series_invert

F = Fraction


def d(n, order, i, base=0):
    return MultiJet.variable(n, order, i, base)


def const(n, order, v):
    return MultiJet.constant(n, order, v)


def jets(n, order, unit=False):
    size = (order + 1) ** n

    def build(cs):
        if unit:
            cs = [F(1)] + cs[1:]
        return MultiJet(n, order, cs)

    return st.lists(rationals(6, 3), min_size=size, max_size=size).map(build)


class TestArithmetic:
    def test_examples(self):
        x0 = F(5)
        assert d(1, 1, 0, x0) * (const(1, 1, x0) - d(1, 1, 0)) == x0 ** 2
        assert const(2, 2, F(1, 3)) * const(2, 2, 6) == 2
        prod = d(2, 1, 0, 1) * d(2, 1, 1, 1)
        assert prod.coeffs == (1, 1, 1, 1)

    def test_shape_mismatch(self):
        with pytest.raises(OrderMismatchError):
            d(2, 1, 0) + d(2, 2, 0)
        with pytest.raises(OrderMismatchError):
            d(2, 1, 0) * d(3, 1, 0)

    def test_nilpotency(self):
        assert d(3, 2, 1) ** 3 == 0
        assert d(3, 2, 1) ** 2 != 0

    @pytest.mark.parametrize("n,order", [(1, 2), (2, 1), (2, 2), (3, 1)])
    def test_ring_axioms(self, n, order):
        @given(jets(n, order), jets(n, order), jets(n, order))
        def check(a, b, c):
            assert a * (b + c) == a * b + a * c
            assert (a * b) * c == a * (b * c)
            assert a * b == b * a
            assert a - a == 0

        check()


class TestInvert:
    def test_examples(self):
        assert jet_invert(d(1, 2, 0, 1)).coeffs == (1, -1, 1)
        assert jet_invert(const(2, 1, 4)) == F(1, 4)
        j = const(2, 1, 2) + d(2, 1, 0) + d(2, 1, 1)
        assert jet_invert(j) * j == 1

    def test_zero_constant(self):
        with pytest.raises(ZeroDivisionError):
            jet_invert(d(2, 1, 0))

    @pytest.mark.parametrize("n,order", [(1, 3), (2, 2), (3, 2)])
    def test_inverse_property(self, n, order):
        @given(jets(n, order, unit=True))
        def check(j):
            assert jet_invert(j) * j == 1

        check()

    @given(rationals(nonzero=True), st.integers(0, 6))
    def test_agrees_with_series(self, x, order):
        # 1/(x + d) as a one-variable jet against the truncated series of 1/(x + t)
        jet = jet_invert(d(1, order, 0, x))
        assert jet.coeffs == series_invert(TruncatedSeries([x, 1], order)).coeffs


class TestExtraction:
    def test_examples(self):
        assert mixed_partial_extract(d(1, 1, 0, 3) ** 2, [1]) == 6
        assert mixed_partial_extract(jet_invert(d(1, 1, 0, 1)), [1]) == -1

    @given(rationals(nonzero=True), st.integers(1, 4))
    def test_higher_derivatives_of_inverse(self, x, k):
        want = (-1) ** k * math.factorial(k) / x ** (k + 1)
        assert mixed_partial_extract(jet_invert(d(1, k, 0, x)), [k]) == want

    def test_out_of_range(self):
        with pytest.raises(OrderMismatchError):
            mixed_partial_extract(d(2, 1, 0), [2, 0])
        with pytest.raises(OrderMismatchError):
            mixed_partial_extract(d(2, 1, 0), [1])


class TestHadamardDerivatives:
    def test_one_by_one(self):
        v = hadamard_derivative_check(1, 2, [2], [1])
        assert v == (1, 1, 1, 1)

    def test_two_by_two(self):
        v = hadamard_derivative_check(2, 2, [1, -1], [2, -2])
        assert v.lhs_det == v.rhs_det == F(80, 81)
        assert v.lhs_per == v.rhs_per == F(82, 81)

    def test_m_one_trivial(self):
        v = hadamard_derivative_check(3, 1, [1, 2, 3], [-1, -2, F(1, 2)])
        assert v.holds

    @given(
        st.integers(1, 3),
        st.integers(1, 3),
        st.lists(rationals(30, 5), min_size=6, max_size=6, unique=True),
    )
    def test_random_points(self, n, m, pts):
        v = hadamard_derivative_check(n, m, pts[:n], pts[3:3 + n])
        assert v.holds, v

    def test_budget(self):
        with pytest.raises(SizeLimitError):
            hadamard_derivative_check(4, 2, [1, 2, 3, 4], [5, 6, 7, 8])
        assert hadamard_derivative_check(4, 2, [1, 2, 3, 4], [5, 6, 7, 8], max_n=4).holds

    def test_coincident_points(self):
        with pytest.raises(InvalidInstanceError):
            hadamard_derivative_check(2, 2, [1, 2], [2, 3])
        with pytest.raises(InvalidInstanceError):
            hadamard_derivative_check(2, 2, [1, 1], [2, 3])
