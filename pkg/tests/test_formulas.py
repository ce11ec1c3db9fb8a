from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from conftest import rationals
from hadamard_cauchy.errors import InvalidInstanceError
from hadamard_cauchy.formulas import (
    CauchyInstance,
    TwistedRational,
    det_hadamard_closed,
    det_hadamard_product,
    f0_direct,
    f0_recurrence,
    f0_series,
    f_k,
    f_table,
    f_value,
    minc_value,
    per_closed,
    per_closed_forms,
    per_from_borchardt,
    scott_historical,
    scott_minc,
    permanent_forms_agree,
)
from hadamard_cauchy.verify import twisted_sum_direct

F = Fraction
cs = rationals(30, 7).filter(lambda c: c not in (0, 1))


class TestTwistedRational:
    def test_normalization(self):
        t = TwistedRational(F(160, 81), -1, n=2, c=4)
        assert (t.r, t.e) == (F(40, 81), 1)
        assert TwistedRational(0, 3, n=5, c=2).e == 0
        assert TwistedRational(3, 5, n=5, c=2) == 6

    def test_embed(self):
        t = TwistedRational(F(-8, 3), -1, n=2, c=4)
        assert t.embed(F(2)) == F(-4, 3)
        assert t.embed(F(-2)) == F(4, 3)
        with pytest.raises(ValueError):
            t.embed(F(3))

    def test_mixed_exponent_sum_rejected(self):
        a = TwistedRational(1, 1, n=3, c=2)
        with pytest.raises(ValueError):
            a + 1

    def test_ring_mismatch(self):
        with pytest.raises(InvalidInstanceError):
            TwistedRational(1, n=3, c=2) * TwistedRational(1, n=3, c=5)

    @given(st.integers(1, 6), cs, rationals(nonzero=True), st.integers(-20, 20), st.integers(-20, 20))
    def test_embedding_is_multiplicative(self, n, alpha, r, e1, e2):
        assume(r != -1)
        c = alpha ** n
        a = TwistedRational(r, e1, n=n, c=c)
        b = TwistedRational(r + 1, e2, n=n, c=c)
        assert (a * b).embed(alpha) == a.embed(alpha) * b.embed(alpha)
        assert (a / b).embed(alpha) == a.embed(alpha) / b.embed(alpha)
        assert 0 <= (a * b).e < n


class TestInstance:
    def test_from_witnesses(self):
        inst = CauchyInstance.from_witnesses(2, 1, 2)
        assert (inst.a, inst.b, inst.c, inst.alpha) == (-1, -4, 4, 2)

    @pytest.mark.parametrize(
        "args",
        [(2, 1, 1), (2, 1, -1), (3, 0, 2)],
    )
    def test_bad_witnesses(self, args):
        with pytest.raises(InvalidInstanceError):
            CauchyInstance.from_witnesses(*args)

    @pytest.mark.parametrize("a,b", [(1, 1), (0, 2), (2, 0)])
    def test_bad_parameters(self, a, b):
        with pytest.raises(InvalidInstanceError):
            CauchyInstance(3, a, b)

    def test_inconsistent_witness(self):
        with pytest.raises(InvalidInstanceError):
            CauchyInstance(2, -1, -4, F(1), F(3))


class TestF0:
    def test_examples(self):
        assert f0_direct(2, 1, 4) == F(-2, 3)
        assert f0_direct(2, 2, 4) == F(10, 9)
        assert f0_recurrence(2, 5, 4) == [F(1, 3 ** m) + (-1) ** m for m in range(6)]
        assert f0_series(2, 2, 4) == [2, F(-2, 3), F(10, 9)]

    def test_sympy_frozen_values(self):
        # generating-function coefficients computed independently with sympy
        want = [3, F(-3, 4), F(33, 16), F(-183, 64), F(993, 256), F(-5703, 1024), F(31953, 4096), F(-180183, 16384)]
        assert f0_recurrence(3, 7, 5) == want

    @given(st.integers(1, 8), cs)
    def test_m1(self, n, c):
        assert f0_direct(n, 1, c) == -n / (c - 1)

    @given(st.integers(1, 8), cs)
    def test_three_routes(self, n, c):
        rec = f0_recurrence(n, 12, c)
        assert rec == f0_series(n, 12, c)
        assert rec == [f0_direct(n, m, c) for m in range(13)]
        assert rec[0] == n

    @pytest.mark.parametrize("c", [0, 1])
    def test_bad_c(self, c):
        for fn in (lambda: f0_direct(2, 1, c), lambda: f0_recurrence(2, 3, c), lambda: f0_series(2, 3, c)):
            with pytest.raises(InvalidInstanceError):
                fn()


class TestFk:
    def test_example(self):
        t = f_k(2, 1, 1, 4)
        assert t == TwistedRational(F(-8, 3), -1, n=2, c=4)
        assert t.embed(F(2)) == F(-4, 3)

    @given(st.integers(1, 6), st.integers(1, 6), cs)
    def test_k_equals_n_is_k_zero(self, n, m, c):
        assert f_k(n, m, n, c) == f_value(n, m, 0, c) == f0_recurrence(n, m, c)[m]

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            f_k(3, 1, 0, 2)
        with pytest.raises(ValueError):
            f_k(3, 1, 4, 2)

    @given(st.integers(1, 6), st.integers(1, 5), cs)
    def test_shift_recurrence(self, n, m, c):
        inv_alpha = TwistedRational.alpha_power(-1, n=n, c=c)
        for k in range(1, n + 1):
            assert f_value(n, m, k, c) == inv_alpha * (f_value(n, m, k - 1, c) - f_value(n, m - 1, k - 1, c))

    @pytest.mark.parametrize("n", range(1, 7))
    @pytest.mark.parametrize("alpha", [F(2), F(-3), F(1, 2), F(5, 3)])
    def test_against_direct_sum(self, n, alpha):
        c = alpha ** n
        if c == 1:
            pytest.skip("alpha is a root of unity")
        for m in range(0, 4):
            for k in range(n):
                assert twisted_sum_direct(n, m, k, alpha) == f_value(n, m, k, c).embed(alpha)

    def test_sympy_frozen_direct_sums(self):
        assert [f_value(4, 2, k, 81).embed(F(3)) for k in range(4)] == [F(61, 400), F(27, 400), F(189, 400), F(123, 400)]
        assert [f_value(3, 2, k, 8).embed(F(2)) for k in range(3)] == [F(51, 49), F(36, 49), F(60, 49)]

    def test_table(self):
        t = f_table(4, 3, F(7, 2))
        assert t[0, 0] == 4
        for m in range(1, 4):
            for k in range(1, 4):
                assert t[m, k].e == (-k) % 4 or t[m, k].r == 0


class TestDeterminant:
    def test_examples(self):
        inst = CauchyInstance(2, -1, -4)
        assert det_hadamard_closed(inst, 2).embed(F(2)) == F(80, 81)
        assert det_hadamard_closed(inst, 1).embed(F(2)) == F(-8, 9)

    def test_one_by_one(self):
        for a, b in [(F(-1), F(2)), (F(3, 2), F(-5))]:
            inst = CauchyInstance(1, a, b)
            # x = -a, y = -b for n = 1
            for m in (1, 2, 3):
                assert det_hadamard_closed(inst, m) == 1 / (b - a) ** m

    @given(st.integers(1, 6), st.integers(1, 4), rationals(nonzero=True), rationals(nonzero=True))
    def test_matches_eigenvalue_product(self, n, m, a, b):
        assume(a != b)
        inst = CauchyInstance(n, a, b)
        assert det_hadamard_closed(inst, m) == det_hadamard_product(inst, m)

    def test_m_must_be_positive(self):
        with pytest.raises(ValueError):
            det_hadamard_closed(CauchyInstance(2, -1, -4), 0)


class TestPermanent:
    def test_examples(self):
        assert per_closed(CauchyInstance(2, -1, -4)) == F(-10, 9)
        assert per_closed(CauchyInstance(3, -1, 1)) == F(-3, 8)
        assert per_closed(CauchyInstance(5, -1, 1)) == F(45, 32)

    def test_two_by_two_shape(self):
        a, b = F(-1), F(-4)
        assert per_closed(CauchyInstance(2, a, b)) == 2 * (a + b) / (b - a) ** 2

    def test_forms_agree_examples(self):
        ok, forms = permanent_forms_agree(4, 2, 3)
        assert ok and len(set(forms)) == 1
        ok, forms = permanent_forms_agree(5, -1, 1)
        assert ok and forms[2] == F(45, 32)

    @given(st.integers(1, 12), rationals(nonzero=True), rationals(nonzero=True))
    def test_forms_agree(self, n, a, b):
        assume(a != b)
        ok, forms = permanent_forms_agree(n, a, b)
        assert ok, forms

    @given(st.integers(1, 7), rationals(nonzero=True), rationals(nonzero=True))
    def test_borchardt_closed_forms(self, n, a, b):
        assume(a != b)
        inst = CauchyInstance(n, a, b)
        assert per_from_borchardt(inst) == per_closed(inst)

    def test_a_equals_b(self):
        with pytest.raises(InvalidInstanceError):
            per_closed_forms(3, 1, 1)

    def test_abstract_form_odd(self):
        # the odd-n pairing written with nb - k(b - a) factors
        for n in (1, 3, 5, 7):
            for a, b in [(F(-1), F(1)), (F(2), F(-3, 2))]:
                d = b - a
                prod = F(1)
                for k in range(1, (n - 1) // 2 + 1):
                    prod *= (-n * a - k * d) * (n * b - k * d)
                assert (-1) ** ((n - 1) // 2) * n / d ** n * prod == per_closed(CauchyInstance(n, a, b))


class TestScott:
    @pytest.mark.parametrize(
        "n,want",
        [(1, F(1, 2)), (3, F(-3, 8)), (5, F(45, 32)), (7, F(-1575, 128)), (9, F(99225, 512))],
    )
    def test_values(self, n, want):
        assert scott_minc(n, -1) == want == minc_value(n)
        assert scott_historical(n) == abs(want)

    def test_even_is_zero(self):
        for n in (2, 4, 6, 8):
            assert scott_minc(n, F(7, 3)) == 0

    def test_a_zero(self):
        with pytest.raises(InvalidInstanceError):
            scott_minc(3, 0)

    @pytest.mark.parametrize("n", range(1, 16))
    def test_matches_permanent_formula(self, n):
        assert scott_minc(n, -1) == per_closed(CauchyInstance(n, -1, 1))

    @given(st.integers(1, 11), rationals(nonzero=True))
    def test_general_a(self, n, a):
        assert scott_minc(n, a) == per_closed(CauchyInstance(n, a, -a))
