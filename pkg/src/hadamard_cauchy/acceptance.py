"""The ten acceptance criteria as plain functions.

Each ``criterion_N`` returns a :class:`CriterionResult`.  Randomness comes
from a seeded :class:`random.Random`, so a run is reproducible; the same
functions back both the test suite and ``hadamard-cauchy selftest``.
"""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .cyclotomic import to_rational
from .exact import Polynomial
from .formulas import (
    CauchyInstance,
    TwistedRational,
    det_hadamard_closed,
    f0_direct,
    f0_recurrence,
    f0_series,
    f_value,
    per_closed,
    per_closed_forms,
    scott_minc,
)
from .jets import hadamard_derivative_check
from .matrix import (
    ExactMatrix,
    build_cauchy,
    determinant,
    determinant_leibniz,
    kernel_det_closed,
    kernel_matrix,
    permanent_naive,
    permanent_ryser,
    rank,
    trace,
)
from .series import (
    TruncatedSeries,
    coef_identity_aggregate,
    coef_identity_check,
    polynomial_from_power_sums,
    power_sums_from_poly,
    series_exp,
    series_log,
    series_log_integral,
)
from .symfunc import (
    binomial_chain_identity,
    charpoly_from_traces,
    coeffs_from_power_sums,
    enumerate_partitions,
    power_sums_from_coeffs,
    waring_coefficient,
)
from .verify import root_transform_check, twisted_sum_direct, witness_nodes

__all__ = ["CRITERIA", "CriterionResult", "run_all"]

SEED = 20240611


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number}: {self.title} ({self.seconds:.2f}s) {self.detail}"


class _Tally:
    def __init__(self):
        self.checked = 0
        self.failures: list[str] = []

    def expect(self, ok: bool, label: str) -> None:
        self.checked += 1
        if not ok and len(self.failures) < 5:
            self.failures.append(label)
        elif not ok:
            self.failures.append("...")

    @property
    def ok(self) -> bool:
        return not self.failures

    def detail(self) -> str:
        if self.ok:
            return f"{self.checked} checks"
        return f"{len(self.failures)} of {self.checked} failed: " + "; ".join(self.failures[:5])


def _small_rational(rng: random.Random, lo: int = -6, hi: int = 6, max_den: int = 4) -> Fraction:
    while True:
        p = rng.randint(lo, hi)
        if p:
            return Fraction(p, rng.randint(1, max_den))


def _distinct_rationals(rng: random.Random, k: int, avoid=()) -> list[Fraction]:
    out: list[Fraction] = []
    while len(out) < k:
        v = Fraction(rng.randint(-20, 20), rng.randint(1, 5))
        if v not in out and v not in avoid:
            out.append(v)
    return out


def _random_witness(rng: random.Random, n: int) -> tuple[Fraction, Fraction]:
    while True:
        beta, gamma = _small_rational(rng), _small_rational(rng)
        if beta ** n != gamma ** n:
            return beta, gamma


@dataclass(frozen=True)
class _BruteInstance:
    n: int
    beta: Fraction
    gamma: Fraction
    matrix: ExactMatrix
    per: object
    det: object
    det_square: object  # det of the Hadamard square


@lru_cache(maxsize=1)
def _criterion2_instances() -> tuple[_BruteInstance, ...]:
    rng = random.Random(SEED + 2)
    out = []
    for idx in range(30):
        n = 1 + idx % 7
        beta, gamma = _random_witness(rng, n)
        xs, ys = witness_nodes(n, beta, gamma)
        A = build_cauchy(xs, ys, 1)
        out.append(
            _BruteInstance(
                n, beta, gamma, A,
                permanent_ryser(A), determinant(A), determinant(build_cauchy(xs, ys, 2)),
            )
        )
    return tuple(out)


def criterion_1(t: _Tally) -> None:
    """Scott-Minc values by closed form, product formula and brute force."""
    expected = {3: Fraction(-3, 8), 5: Fraction(45, 32), 7: Fraction(-1575, 128), 9: Fraction(99225, 512)}
    for n, want in expected.items():
        closed = scott_minc(n, -1)
        product = per_closed_forms(n, -1, 1)[0]
        xs, ys = witness_nodes(n, 1, -1)
        brute = to_rational(permanent_ryser(build_cauchy(xs, ys, 1)))
        t.expect(closed == product == brute == want, f"n={n}: {closed}, {product}, {brute} vs {want}")
    for n in (2, 4, 6):
        closed = scott_minc(n, -1)
        product = per_closed_forms(n, -1, 1)[0]
        t.expect(closed == 0 == product, f"n={n}: {closed}, {product}")


def criterion_2(t: _Tally) -> None:
    """Permanent product formula against Ryser and naive expansion."""
    for inst in _criterion2_instances():
        closed = per_closed(CauchyInstance.from_witnesses(inst.n, inst.beta, inst.gamma))
        naive = permanent_naive(inst.matrix)
        t.expect(closed == inst.per == naive, f"n={inst.n} beta={inst.beta} gamma={inst.gamma}")


def criterion_3(t: _Tally) -> None:
    """Closed-form Hadamard-power determinants against elimination."""
    fixed = CauchyInstance.from_witnesses(2, 1, 2)
    t.expect(fixed.a == -1 and fixed.b == -4, "fixed witnesses")
    t.expect(det_hadamard_closed(fixed, 2).embed(fixed.alpha) == Fraction(80, 81), "n=2, m=2 fixed case")
    rng = random.Random(SEED + 3)
    for n in range(1, 7):
        for m in (1, 2, 3):
            for _ in range(10):
                beta, gamma = _random_witness(rng, n)
                inst = CauchyInstance.from_witnesses(n, beta, gamma)
                xs, ys = witness_nodes(n, beta, gamma)
                brute = determinant(build_cauchy(xs, ys, m))
                closed = det_hadamard_closed(inst, m).embed(inst.alpha)
                t.expect(brute == closed, f"n={n} m={m} beta={beta} gamma={gamma}")


def criterion_4(t: _Tally) -> None:
    """per(A) det(A) = det(A o A)."""
    for inst in _criterion2_instances():
        t.expect(inst.per * inst.det == inst.det_square, f"n={inst.n} beta={inst.beta} gamma={inst.gamma}")


def criterion_5(t: _Tally) -> None:
    """Hadamard powers against mixed partials over jets."""
    rng = random.Random(SEED + 5)
    for idx in range(25):
        n = 1 + idx % 3
        m = 1 + (idx // 3) % 3
        xs = _distinct_rationals(rng, n)
        ys = _distinct_rationals(rng, n, avoid=xs)
        vals = hadamard_derivative_check(n, m, xs, ys)
        t.expect(vals.holds, f"n={n} m={m} xs={xs} ys={ys}: {vals}")


def _random_c(rng: random.Random) -> Fraction:
    while True:
        c = Fraction(rng.randint(-30, 30), rng.randint(1, 7))
        if c not in (0, 1):
            return c


def criterion_6(t: _Tally) -> None:
    """Three routes to f_{n,m}(0), the shift recurrence in k and the root polynomial."""
    rng = random.Random(SEED + 6)
    for _ in range(20):
        c = _random_c(rng)
        for n in range(1, 9):
            rec = f0_recurrence(n, 12, c)
            ser = f0_series(n, 12, c)
            direct = [f0_direct(n, m, c) for m in range(13)]
            t.expect(rec == ser == direct, f"n={n} c={c}")
    for _ in range(4):
        c = _random_c(rng)
        for n in range(1, 7):
            for m in range(1, 6):
                for k in range(1, n + 1):
                    lhs = f_value(n, m, k, c)
                    rhs = TwistedRational.alpha_power(-1, n=n, c=c) * (
                        f_value(n, m, k - 1, c) - f_value(n, m - 1, k - 1, c)
                    )
                    t.expect(lhs == rhs, f"shift n={n} m={m} k={k} c={c}")
    for n in range(1, 9):
        alpha = _small_rational(rng, 2, 5, 3)
        while alpha == 1:
            alpha = _small_rational(rng, 2, 5, 3)
        if rng.random() < 0.5:
            alpha = -alpha
        lhs, rhs = root_transform_check(n, alpha)
        t.expect(lhs == rhs, f"root polynomial n={n} alpha={alpha}")
        c = alpha ** n
        for m in range(0, 4):
            for k in range(n):
                t.expect(
                    twisted_sum_direct(n, m, k, alpha) == f_value(n, m, k, c).embed(alpha),
                    f"direct sum n={n} m={m} k={k} alpha={alpha}",
                )


def criterion_7(t: _Tally) -> None:
    """det and rank of ((x_i - y_j)^m)."""
    rng = random.Random(SEED + 7)
    for n in range(1, 7):
        for m in range(1, 5):
            for _ in range(3):
                xs = _distinct_rationals(rng, n)
                ys = _distinct_rationals(rng, n)
                K = kernel_matrix(xs, ys, m)
                t.expect(kernel_det_closed(xs, ys, m) == determinant(K), f"det n={n} m={m}")
                t.expect(rank(K) == min(n, m + 1), f"rank n={n} m={m} xs={xs} ys={ys}")


def criterion_8(t: _Tally) -> None:
    """Power sums, coefficients, traces and the integer partition coefficients."""
    rng = random.Random(SEED + 8)
    for _ in range(20):
        deg = rng.randint(1, 8)
        a = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(deg)]
        p = [power_sums_from_coeffs(a, m) for m in range(1, deg + 1)]
        t.expect(coeffs_from_power_sums(p) == a, f"roundtrip a={a}")
        f = Polynomial(list(reversed(a)) + [1])
        series_p = power_sums_from_poly(f, 12)
        t.expect(
            series_p == [power_sums_from_coeffs(a, m) for m in range(1, 13)],
            f"waring vs series a={a}",
        )
    x = Polynomial.x()
    for _ in range(10):
        n = rng.randint(1, 5)
        A = ExactMatrix(n, n, [rng.randint(-5, 5) for _ in range(n * n)])
        traces = [trace(A ** k) for k in range(1, n + 1)]
        xI_minus_A = ExactMatrix(
            n, n, [(x if i == j else Polynomial()) - A[i, j] for i in range(n) for j in range(n)]
        )
        direct = determinant_leibniz(xI_minus_A)
        want = [direct[n - k] for k in range(1, n + 1)]
        t.expect(charpoly_from_traces(traces) == want, f"charpoly {A.to_rows()}")
    for length in range(1, 5):
        for l in itertools.product(range(1, 7), repeat=length):
            if all(l[i] >= l[i + 1] for i in range(length - 1)):
                lhs, rhs = binomial_chain_identity(l)
                t.expect(lhs == rhs, f"chain {l}")
    for m in range(1, 19):
        for lam in enumerate_partitions(m, m):
            t.expect(isinstance(waring_coefficient(lam), int), f"waring {lam}")


def _random_series(rng: random.Random, order: int, const: int | None) -> TruncatedSeries:
    cs = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(order + 1)]
    if const is not None:
        cs[0] = Fraction(const)
    return TruncatedSeries(cs, order)


def criterion_9(t: _Tally) -> None:
    """Coefficient identities, log/exp and power-sum generating functions."""
    rng = random.Random(SEED + 9)
    for _ in range(5):
        F = _random_series(rng, 10, 0)
        for m in range(1, 11):
            for k in range(1, m + 1):
                lhs, rhs = coef_identity_check(F, m, k)
                t.expect(lhs == rhs, f"single-power identity m={m} k={k}")
    for _ in range(5):
        deg = rng.randint(1, 6)
        order = rng.randint(deg, 12)
        a = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(deg)]
        # 1 - F = 1 + sum a_i x^i
        F = TruncatedSeries([0] + [-ai for ai in a], order)
        for m in range(1, order + 1):
            lhs, rhs = coef_identity_aggregate(F, m)
            t.expect(lhs == rhs, f"aggregate identity m={m}")
        f = Polynomial(list(reversed(a)) + [1])
        p = power_sums_from_poly(f, order)
        left = TruncatedSeries([0] + [p[m - 1] / m for m in range(1, order + 1)], order)
        right = TruncatedSeries.constant(0, order)
        power = TruncatedSeries.constant(1, order)
        for k in range(1, order + 1):
            power = power * F
            right = right + power * Fraction(1, k)
        t.expect(left == right, f"log generating function a={a}")
    for _ in range(10):
        order = rng.randint(1, 12)
        s1 = _random_series(rng, order, 1)
        s2 = _random_series(rng, order, 1)
        t.expect(series_log(s1 * s2) == series_log(s1) + series_log(s2), "log additivity")
        t.expect(series_exp(series_log(s1)) == s1, "exp(log s) = s")
        t.expect(series_log(s1) == series_log_integral(s1), "log by integration")
    for _ in range(10):
        deg = rng.randint(1, 6)
        roots = [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(deg)]
        f = Polynomial.from_roots(roots)
        order = deg + 2
        p = [sum(r ** i for r in roots) for i in range(1, order + 1)]
        t.expect(
            polynomial_from_power_sums(p, order) == TruncatedSeries.from_polynomial(f.reversed(deg), order),
            f"rebuild from power sums roots={roots}",
        )


def criterion_10(t: _Tally) -> None:
    """Rational permanent and squared determinant, stable under reordering."""
    rng = random.Random(SEED + 10)
    for inst in _criterion2_instances():
        label = f"n={inst.n} beta={inst.beta} gamma={inst.gamma}"
        per_q = to_rational(inst.per)
        det_sq = to_rational(inst.det * inst.det)
        t.expect(per_q is not None, f"per rational {label}")
        t.expect(det_sq is not None, f"det^2 rational {label}")
        n = inst.n
        for _ in range(10):
            rp = list(range(n))
            cp = list(range(n))
            rng.shuffle(rp)
            rng.shuffle(cp)
            B = inst.matrix.permute(rp, cp)
            d = determinant(B)
            t.expect(permanent_ryser(B) == inst.per, f"per reorder {label}")
            t.expect(d * d == inst.det * inst.det, f"det^2 reorder {label}")


CRITERIA: dict[int, tuple[str, Callable[[_Tally], None]]] = {
    1: ("Scott-Minc values by three routes", criterion_1),
    2: ("permanent formula vs Ryser vs naive", criterion_2),
    3: ("Hadamard-power determinant formula vs elimination", criterion_3),
    4: ("Borchardt identity", criterion_4),
    5: ("Hadamard powers vs jet mixed partials", criterion_5),
    6: ("f_{n,m}(k) routes, shift recurrence, root polynomial", criterion_6),
    7: ("kernel determinant and rank", criterion_7),
    8: ("symmetric-function roundtrips", criterion_8),
    9: ("series identities", criterion_9),
    10: ("rationality and reordering invariance", criterion_10),
}


def run_criterion(number: int) -> CriterionResult:
    title, fn = CRITERIA[number]
    tally = _Tally()
    start = time.perf_counter()
    try:
        fn(tally)
    except Exception as exc:  # a crash is a failed criterion, not a crashed run
        tally.failures.append(f"raised {type(exc).__name__}: {exc}")
    return CriterionResult(number, title, tally.ok, tally.detail(), time.perf_counter() - start)


def run_all(numbers=None) -> list[CriterionResult]:
    return [run_criterion(k) for k in (numbers or sorted(CRITERIA))]
