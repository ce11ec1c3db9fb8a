"""Truncated formal power series over Q.

A :class:`TruncatedSeries` of order ``N`` knows the coefficients of
``x^0 .. x^N`` and nothing beyond.  Binary operations require equal orders;
coercing silently to the smaller order is exactly the kind of slip that
produces a wrong coefficient extraction, so it is an error instead.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import OrderMismatchError
from .exact import Polynomial

__all__ = [
    "TruncatedSeries",
    "coef_identity_aggregate",
    "coef_identity_check",
    "polynomial_from_power_sums",
    "power_sums_from_poly",
    "series_exp",
    "series_invert",
    "series_log",
    "series_log_integral",
]


class TruncatedSeries:
    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int):
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self.coeffs = tuple(cs)
        self.order = order

    @classmethod
    def from_polynomial(cls, p: Polynomial | Sequence, order: int) -> TruncatedSeries:
        coeffs = p.coeffs if isinstance(p, Polynomial) else p
        return cls(coeffs, order)

    @classmethod
    def constant(cls, c, order: int) -> TruncatedSeries:
        return cls((c,), order)

    @classmethod
    def variable(cls, order: int) -> TruncatedSeries:
        """The series ``x``."""
        return cls((0, 1), order)

    def __getitem__(self, k: int) -> Fraction:
        if k < 0:
            return Fraction(0)
        if k > self.order:
            raise IndexError(f"coefficient x^{k} lies beyond truncation order {self.order}")
        return self.coeffs[k]

    def __repr__(self) -> str:
        return f"TruncatedSeries({[str(c) for c in self.coeffs]}, order={self.order})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TruncatedSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.coeffs, self.order))

    def _check(self, other) -> TruncatedSeries:
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.constant(other, self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if other.order != self.order:
            raise OrderMismatchError(f"orders {self.order} and {other.order} differ")
        return other

    def __add__(self, other) -> TruncatedSeries:
        other = self._check(other)
        if other is NotImplemented:
            return other
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other) -> TruncatedSeries:
        other = self._check(other)
        if other is NotImplemented:
            return other
        return TruncatedSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __rsub__(self, other) -> TruncatedSeries:
        return (-self) + other

    def __mul__(self, other) -> TruncatedSeries:
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([a * other for a in self.coeffs], self.order)
        other = self._check(other)
        if other is NotImplemented:
            return other
        N = self.order
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (N + 1)
        for i, ai in enumerate(a):
            if ai:
                for j in range(N + 1 - i):
                    if b[j]:
                        out[i + j] += ai * b[j]
        return TruncatedSeries(out, N)

    __rmul__ = __mul__

    def __truediv__(self, other) -> TruncatedSeries:
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * series_invert(other)

    def __pow__(self, k: int) -> TruncatedSeries:
        if k < 0:
            return series_invert(self) ** (-k)
        out = TruncatedSeries.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def derivative(self) -> TruncatedSeries:
        """d/dx; the result is known only up to order ``N - 1``."""
        if self.order == 0:
            raise OrderMismatchError("derivative of an order-0 series is unknown")
        return TruncatedSeries(
            [i * c for i, c in enumerate(self.coeffs) if i], self.order - 1
        )

    def integral(self) -> TruncatedSeries:
        """Antiderivative with zero constant term, order ``N + 1``."""
        return TruncatedSeries(
            [0] + [c / (i + 1) for i, c in enumerate(self.coeffs)], self.order + 1
        )

    def shift(self) -> TruncatedSeries:
        """Multiply by ``x``; one more coefficient becomes known."""
        return TruncatedSeries((0,) + self.coeffs, self.order + 1)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise OrderMismatchError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1], order)


def series_invert(s: TruncatedSeries) -> TruncatedSeries:
    c0 = s.coeffs[0]
    if c0 == 0:
        raise ZeroDivisionError("series with zero constant term is not invertible")
    inv0 = 1 / c0
    out = [inv0]
    for k in range(1, s.order + 1):
        acc = sum((s.coeffs[j] * out[k - j] for j in range(1, k + 1)), Fraction(0))
        out.append(-acc * inv0)
    return TruncatedSeries(out, s.order)


def series_log(s: TruncatedSeries) -> TruncatedSeries:
    """log(s) = -sum_{m>=1} (1 - s)^m / m for constant term 1."""
    if s.coeffs[0] != 1:
        raise ValueError("log needs constant term 1")
    u = 1 - s
    out = TruncatedSeries.constant(0, s.order)
    power = TruncatedSeries.constant(1, s.order)
    # u has zero constant term, so u^m vanishes through x^(m-1).
    for m in range(1, s.order + 1):
        power = power * u
        out = out - power * Fraction(1, m)
    return out


def series_log_integral(s: TruncatedSeries) -> TruncatedSeries:
    """log(s) as the integral of s'/s; an independent route for cross-checks."""
    if s.coeffs[0] != 1:
        raise ValueError("log needs constant term 1")
    if s.order == 0:
        return TruncatedSeries.constant(0, 0)
    return (s.derivative() * series_invert(s.truncate(s.order - 1))).integral()


def series_exp(s: TruncatedSeries) -> TruncatedSeries:
    """exp(s) = sum_{k>=0} s^k / k! for constant term 0."""
    if s.coeffs[0] != 0:
        raise ValueError("exp needs constant term 0")
    out = TruncatedSeries.constant(1, s.order)
    term = TruncatedSeries.constant(1, s.order)
    for k in range(1, s.order + 1):
        term = term * s * Fraction(1, k)
        out = out + term
    return out


def power_sums_from_poly(f: Polynomial, M: int) -> list[Fraction]:
    """p_1..p_M of the roots of monic ``f`` from -x g'(x)/g(x), g = x^n f(1/x)."""
    if not f or f.lead != 1:
        raise ValueError("power sums need a monic polynomial")
    if M < 1:
        return []
    g = TruncatedSeries.from_polynomial(f.reversed(), M)
    gen = -(g.derivative() * series_invert(g.truncate(M - 1))).shift()
    return list(gen.coeffs[1:])


def polynomial_from_power_sums(p: Sequence, order: int) -> TruncatedSeries:
    """Rebuild ``g(x) = prod (1 - x_i x)`` as exp(-sum p_i x^i / i)."""
    terms = [0] + [-Fraction(p[i - 1]) / i for i in range(1, order + 1)]
    return series_exp(TruncatedSeries(terms, order))


def coef_identity_check(F: TruncatedSeries, m: int, k: int) -> tuple[Fraction, Fraction]:
    """(m/k) Coef_{x^m} F^k paired with Coef_{x^(m-1)} (F^(k-1) F')."""
    if m < 1 or k < 1:
        raise ValueError("m and k must be positive")
    if m > F.order:
        raise OrderMismatchError(f"coefficient x^{m} beyond order {F.order}")
    lhs = Fraction(m, k) * (F ** k)[m]
    low = F.truncate(F.order - 1)
    rhs = ((low ** (k - 1)) * F.derivative())[m - 1]
    return lhs, rhs


def coef_identity_aggregate(F: TruncatedSeries, m: int) -> tuple[Fraction, Fraction]:
    """sum_{k<=m} (m/k) Coef_{x^m} F^k paired with Coef_{x^m} of -x (1-F)'/(1-F)."""
    if F.coeffs[0] != 0:
        raise ValueError("aggregate identity needs F(0) = 0")
    if m < 1 or m > F.order:
        raise OrderMismatchError(f"coefficient x^{m} beyond order {F.order}")
    lhs = Fraction(0)
    power = TruncatedSeries.constant(1, F.order)
    for k in range(1, m + 1):
        power = power * F
        lhs += Fraction(m, k) * power[m]
    one_minus = 1 - F
    rhs_series = -(one_minus.derivative() * series_invert(one_minus.truncate(F.order - 1))).shift()
    return lhs, rhs_series[m]
