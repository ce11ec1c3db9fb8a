"""Exact scalars and dense univariate polynomials.

Integers are Python ``int`` and rationals are :class:`fractions.Fraction`;
both are arbitrary precision and always normalized, so equality is
structural.  Everything else in the package is built on top of these.

Field elements are duck-typed: anything supporting ``+ - * /``, ``==`` and
mixed arithmetic with ``int`` works (``Fraction``,
:class:`~hadamard_cauchy.cyclotomic.CyclotomicElement`).  Ring-only types
(series, jets, polynomials) simply lack ``/``.
"""
from __future__ import annotations

import math
import operator
from fractions import Fraction
from typing import Any, Iterable, Protocol, Sequence

from .errors import UnsupportedDomainError

__all__ = [
    "FieldElement",
    "Polynomial",
    "binomial",
    "coerce",
    "format_rational",
    "one_like",
    "parse_rational",
    "poly_divmod",
    "poly_xgcd",
    "rational_arith",
    "zero_like",
]


class FieldElement(Protocol):
    def __add__(self, other: Any) -> Any: ...
    def __sub__(self, other: Any) -> Any: ...
    def __mul__(self, other: Any) -> Any: ...
    def __truediv__(self, other: Any) -> Any: ...
    def __neg__(self) -> Any: ...
    def __eq__(self, other: object) -> bool: ...


def coerce(value):
    """Promote plain ints to Fraction so that ``/`` stays exact."""
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise TypeError("floating-point values are not exact")
    return value


def zero_like(x):
    return x * 0


def one_like(x):
    return x * 0 + 1


_RATIONAL_OPS = {
    "+": operator.add,
    "-": operator.sub,
    "*": operator.mul,
    "/": operator.truediv,
    "−": operator.sub,
    "×": operator.mul,
    "÷": operator.truediv,
}


def rational_arith(lhs, rhs, op: str) -> Fraction:
    """Apply ``op`` to two rationals; ``÷ 0`` raises ZeroDivisionError."""
    try:
        fn = _RATIONAL_OPS[op]
    except KeyError:
        raise ValueError(f"unknown operator {op!r}") from None
    return fn(Fraction(lhs), Fraction(rhs))


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or a finite decimal string exactly."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc


def format_rational(value) -> str:
    return str(Fraction(value))


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0; zero outside 0 <= k <= n."""
    if n < 0:
        raise UnsupportedDomainError(f"binomial with negative n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _is_zero(c) -> bool:
    return c == 0


class Polynomial:
    """Dense polynomial with coefficients in ascending degree.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``
    and ``degree == -1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [coerce(c) for c in coeffs]
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls) -> Polynomial:
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c=1) -> Polynomial:
        return cls([0] * degree + [c])

    @classmethod
    def from_roots(cls, roots: Sequence) -> Polynomial:
        """Monic polynomial prod (x - r)."""
        out = cls((1,))
        for r in roots:
            out = out * cls((-r, 1))
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(f"({c})")
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"({c})*{mono}")
        return " + ".join(terms)

    def _lift(self, other) -> Polynomial | None:
        if isinstance(other, Polynomial):
            return other
        try:
            return Polynomial((other,))
        except TypeError:
            return None

    def __add__(self, other) -> Polynomial:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> Polynomial:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [zero_like(a[0])] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if _is_zero(ai):
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative polynomial power")
        out = Polynomial((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other: Polynomial):
        return poly_divmod(self, other)

    def __floordiv__(self, other: Polynomial) -> Polynomial:
        return poly_divmod(self, other)[0]

    def __mod__(self, other: Polynomial) -> Polynomial:
        return poly_divmod(self, other)[1]

    def __call__(self, x):
        """Horner evaluation; ``x`` may be any ring element."""
        acc = zero_like(x)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def scale(self, c) -> Polynomial:
        return Polynomial(c * a for a in self.coeffs)

    def monic(self) -> Polynomial:
        inv = 1 / self.lead
        return Polynomial(c * inv for c in self.coeffs)

    def derivative(self) -> Polynomial:
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def reversed(self, n: int | None = None) -> Polynomial:
        """``x^n p(1/x)`` with ``n`` defaulting to the degree."""
        n = self.degree if n is None else n
        if n < self.degree:
            raise ValueError("reversal degree below polynomial degree")
        padded = list(self.coeffs) + [0] * (n + 1 - len(self.coeffs))
        return Polynomial(reversed(padded))


def poly_divmod(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Euclidean division ``a = q*b + r`` with ``deg r < deg b``."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    db = b.degree
    if len(rem) <= db:
        return Polynomial(), Polynomial(rem)
    inv_lead = 1 / b.lead
    quot = [zero_like(inv_lead)] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if _is_zero(c):
            continue
        t = c * inv_lead
        quot[k - db] = t
        for j, bj in enumerate(b.coeffs):
            rem[k - db + j] = rem[k - db + j] - t * bj
    return Polynomial(quot), Polynomial(rem[:db])


def poly_xgcd(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """Return ``(g, u, v)`` with ``u*a + v*b == g`` and ``g`` the monic gcd."""
    if not a and not b:
        raise ValueError("xgcd of two zero polynomials")
    r0, r1 = a, b
    s0, s1 = Polynomial((1,)), Polynomial()
    t0, t1 = Polynomial(), Polynomial((1,))
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = 1 / r0.lead
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)
