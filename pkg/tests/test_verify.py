from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from conftest import rationals
from hadamard_cauchy.errors import InvalidInstanceError, SizeLimitError
from hadamard_cauchy.formulas import CauchyInstance, per_closed
from hadamard_cauchy.verify import root_transform_check, verify_instance

F = Fraction


def test_two_by_two_instance():
    r = verify_instance(2, 1, 2, 2)
    assert r.passed
    assert r.values["per"] == F(-10, 9)
    assert r.values["det"] == F(-8, 9)
    assert r.values["det_hadamard_square"] == F(80, 81)


def test_scott_instance():
    r = verify_instance(3, 1, -1, 2)
    assert r.passed
    assert r.values["per"] == F(-3, 8)


@pytest.mark.parametrize(
    "n,beta,gamma,per,det,det2",
    [
        # values computed independently with sympy over exact roots of unity
        (3, 1, 2, F(-510, 343), F(-216, 343), F(110160, 117649)),
        (4, 1, 2, F(-126616, 50625), F(-16384, 50625), F(2074476544, 2562890625)),
    ],
)
def test_frozen_instances(n, beta, gamma, per, det, det2):
    r = verify_instance(n, beta, gamma, 2)
    assert r.passed
    assert (r.values["per"], r.values["det"], r.values["det_hadamard_square"]) == (per, det, det2)


def test_coincident_roots():
    with pytest.raises(InvalidInstanceError):
        verify_instance(2, 1, 1)


def test_size_cap(monkeypatch):
    with pytest.raises(SizeLimitError):
        verify_instance(5, 1, 2, max_bruteforce=4)
    monkeypatch.setenv("HC_MAX_BRUTEFORCE", "3")
    with pytest.raises(SizeLimitError):
        verify_instance(4, 1, 2)


def test_report_order_and_serialization():
    r = verify_instance(3, 2, F(-1, 2), 3)
    names = [c.name for c in r.checks]
    assert names.index("det_closed[m=1]") < names.index("det_closed[m=2]") < names.index("det_closed[m=3]")
    d = r.to_dict()
    assert d["passed"] is True
    assert all(c["status"] == "pass" for c in d["checks"])
    assert F(d["values"]["per"]) == r.values["per"]


@given(st.integers(1, 6), rationals(8, 3, nonzero=True), rationals(8, 3, nonzero=True))
def test_random_instances(n, beta, gamma):
    assume(beta ** n != gamma ** n)
    r = verify_instance(n, beta, gamma, 2)
    assert r.passed, r.failures()


@given(rationals(8, 3, nonzero=True), rationals(8, 3, nonzero=True))
def test_permanent_independent_of_witness_pair(beta, gamma):
    # (beta, gamma) and (-beta, -gamma) realize the same (a, b) for even n
    n = 4
    assume(beta ** n != gamma ** n)
    p1 = verify_instance(n, beta, gamma, 1).values["per"]
    p2 = verify_instance(n, -beta, -gamma, 1).values["per"]
    assert p1 == p2 == per_closed(CauchyInstance.from_witnesses(n, beta, gamma))


@pytest.mark.parametrize("n", range(1, 9))
def test_root_polynomial(n):
    for alpha in (F(2), F(-1, 3), F(7, 5)):
        lhs, rhs = root_transform_check(n, alpha)
        assert lhs == rhs
