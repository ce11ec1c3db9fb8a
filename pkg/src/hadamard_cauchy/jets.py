"""Multivariate truncated Taylor jets over Q.

A jet in ``n`` variables of order ``r`` is an element of
``Q[d_1, ..., d_n] / (d_1^(r+1), ..., d_n^(r+1))``.  Substituting
``x_i -> x_i + d_i`` into a rational function and reading off the
coefficient of ``d_1^r ... d_n^r`` gives its mixed partial derivative
``(d/dx_1)^r ... (d/dx_n)^r`` divided by ``(r!)^n``.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .errors import InvalidInstanceError, OrderMismatchError, SizeLimitError
from .matrix import ExactMatrix, build_cauchy, determinant, determinant_leibniz, permanent_naive

__all__ = [
    "MultiJet",
    "HadamardDerivativeValues",
    "jet_invert",
    "mixed_partial_extract",
    "hadamard_derivative_check",
]


@lru_cache(maxsize=None)
def _layout(n: int, order: int):
    """Exponent tuples in index order and the product index table."""
    exps = list(itertools.product(range(order + 1), repeat=n))
    index = {e: i for i, e in enumerate(exps)}
    table = []
    for ea in exps:
        row = []
        for eb in exps:
            s = tuple(a + b for a, b in zip(ea, eb))
            row.append(index.get(s, -1))
        table.append(tuple(row))
    return tuple(exps), index, tuple(table)


class MultiJet:
    __slots__ = ("n", "order", "coeffs")

    def __init__(self, n: int, order: int, coeffs: Iterable):
        if n < 1 or order < 0:
            raise ValueError("need n >= 1 variables and order >= 0")
        cs = tuple(Fraction(c) for c in coeffs)
        if len(cs) != (order + 1) ** n:
            raise ValueError(f"expected {(order + 1) ** n} coefficients, got {len(cs)}")
        self.n = n
        self.order = order
        self.coeffs = cs

    @classmethod
    def constant(cls, n: int, order: int, value) -> MultiJet:
        cs = [Fraction(0)] * (order + 1) ** n
        cs[0] = Fraction(value)
        return cls(n, order, cs)

    @classmethod
    def variable(cls, n: int, order: int, i: int, base=0) -> MultiJet:
        """``base + d_i`` (0-based ``i``)."""
        jet = cls.constant(n, order, base)
        if order == 0:
            return jet
        _, index, _ = _layout(n, order)
        e = [0] * n
        e[i] = 1
        cs = list(jet.coeffs)
        cs[index[tuple(e)]] = Fraction(1)
        return cls(n, order, cs)

    def coefficient(self, exponents: Sequence[int]) -> Fraction:
        _, index, _ = _layout(self.n, self.order)
        try:
            return self.coeffs[index[tuple(exponents)]]
        except KeyError:
            raise OrderMismatchError(
                f"exponents {tuple(exponents)} outside order {self.order}"
            ) from None

    def __repr__(self) -> str:
        exps, _, _ = _layout(self.n, self.order)
        terms = {e: str(c) for e, c in zip(exps, self.coeffs) if c}
        return f"MultiJet(n={self.n}, order={self.order}, {terms})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiJet):
            return (self.n, self.order, self.coeffs) == (other.n, other.order, other.coeffs)
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self.order, self.coeffs))

    def _lift(self, other) -> MultiJet:
        if isinstance(other, MultiJet):
            if (other.n, other.order) != (self.n, self.order):
                raise OrderMismatchError(
                    f"jet shapes (n={self.n}, order={self.order}) and "
                    f"(n={other.n}, order={other.order}) differ"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return MultiJet.constant(self.n, self.order, other)
        return NotImplemented

    def __add__(self, other) -> MultiJet:
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return MultiJet(self.n, self.order, (a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> MultiJet:
        return MultiJet(self.n, self.order, (-a for a in self.coeffs))

    def __sub__(self, other) -> MultiJet:
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return MultiJet(self.n, self.order, (a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other) -> MultiJet:
        return (-self) + other

    def __mul__(self, other) -> MultiJet:
        if isinstance(other, (int, Fraction)):
            return MultiJet(self.n, self.order, (a * other for a in self.coeffs))
        o = self._lift(other)
        if o is NotImplemented:
            return o
        _, _, table = _layout(self.n, self.order)
        out = [Fraction(0)] * len(self.coeffs)
        bs = [(j, b) for j, b in enumerate(o.coeffs) if b]
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            row = table[i]
            for j, b in bs:
                k = row[j]
                if k >= 0:
                    out[k] += a * b
        return MultiJet(self.n, self.order, out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> MultiJet:
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * jet_invert(other)

    def __rtruediv__(self, other) -> MultiJet:
        return jet_invert(self) * other

    def __pow__(self, k: int) -> MultiJet:
        if k < 0:
            return jet_invert(self) ** (-k)
        out = MultiJet.constant(self.n, self.order, 1)
        for _ in range(k):
            out = out * self
        return out


def jet_invert(j: MultiJet) -> MultiJet:
    """1/j for a jet with nonzero constant term.

    Writing ``j = c (1 + u)`` with ``u`` nilpotent, the geometric series
    ``sum (-u)^k`` terminates once ``k`` exceeds the top total degree.
    """
    c = j.coeffs[0]
    if c == 0:
        raise ZeroDivisionError("jet with zero constant term is not invertible")
    inv_c = 1 / c
    u = j * inv_c - 1
    neg_u = -u
    out = MultiJet.constant(j.n, j.order, 1)
    power = out
    for _ in range(j.n * j.order):
        power = power * neg_u
        out = out + power
    return out * inv_c


def mixed_partial_extract(j: MultiJet, orders: Sequence[int]) -> Fraction:
    """The partial derivative of multi-order ``orders`` at the base point."""
    if len(orders) != j.n:
        raise OrderMismatchError(f"need {j.n} derivative orders, got {len(orders)}")
    if any(o < 0 or o > j.order for o in orders):
        raise OrderMismatchError(f"orders {tuple(orders)} outside jet order {j.order}")
    scale = math.prod(math.factorial(o) for o in orders)
    return j.coefficient(orders) * scale


class HadamardDerivativeValues(NamedTuple):
    lhs_det: Fraction
    rhs_det: Fraction
    lhs_per: Fraction
    rhs_per: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs_det == self.rhs_det and self.lhs_per == self.rhs_per


def hadamard_derivative_check(
    n: int,
    m: int,
    xs: Sequence,
    ys: Sequence,
    *,
    max_n: int = 3,
    max_m: int = 3,
) -> HadamardDerivativeValues:
    """Compare det/per of the m-th Hadamard power with mixed partials of det/per.

    The left values are computed directly over Q.  The right values
    evaluate det and per of the plain Cauchy matrix over jets with
    ``x_i -> x_i + d_i``, take the (m-1, ..., m-1) mixed partial and scale
    it by ``(-1)^(n(m-1)) / ((m-1)!)^n``.
    """
    if n > max_n or m > max_m:
        raise SizeLimitError(f"jet budget is n <= {max_n}, m <= {max_m}; got n={n}, m={m}")
    if m < 1:
        raise ValueError("m must be >= 1")
    xs = [Fraction(x) for x in xs]
    ys = [Fraction(y) for y in ys]
    if len(xs) != n or len(ys) != n:
        raise ValueError("node vectors must have length n")
    if len(set(xs)) != n or len(set(ys)) != n:
        raise InvalidInstanceError("x's and y's must each be distinct")
    if set(xs) & set(ys):
        raise InvalidInstanceError("some x_i coincides with some y_j")

    direct = build_cauchy(xs, ys, m)
    lhs_det = determinant(direct)
    lhs_per = permanent_naive(direct)

    order = m - 1
    entries = []
    for i, x in enumerate(xs):
        xi = MultiJet.variable(n, order, i, x)
        entries.extend(jet_invert(xi - y) for y in ys)
    jm = ExactMatrix(n, n, entries)
    top = [order] * n
    scale = Fraction((-1) ** (n * order), math.factorial(order) ** n)
    rhs_det = scale * mixed_partial_extract(determinant_leibniz(jm), top)
    rhs_per = scale * mixed_partial_extract(permanent_naive(jm), top)
    return HadamardDerivativeValues(lhs_det, rhs_det, lhs_per, rhs_per)
