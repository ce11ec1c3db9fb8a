"""Exact arithmetic in the cyclotomic field Q(zeta_N).

Elements are residues modulo the N-th cyclotomic polynomial, stored in the
power basis ``1, z, ..., z^(d-1)`` with ``d = phi(N)``.  Internally the
coefficients share one positive denominator (integer numerators plus a
common denominator, gcd-reduced), which keeps multiplication in integer
arithmetic; :attr:`CyclotomicElement.coeffs` exposes them as Fractions.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import FieldMismatchError
from .exact import Polynomial, poly_divmod, poly_xgcd

__all__ = [
    "CyclotomicElement",
    "CyclotomicField",
    "cyclotomic_field",
    "cyclotomic_polynomial",
    "to_rational",
    "zeta",
]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(N: int) -> Polynomial:
    """Phi_N, obtained by dividing x^N - 1 by Phi_d for every proper divisor d."""
    if N < 1:
        raise ValueError(f"conductor must be positive, got {N}")
    num = Polynomial([-1] + [0] * (N - 1) + [1])
    for d in range(1, N):
        if N % d == 0:
            num, rem = poly_divmod(num, cyclotomic_polynomial(d))
            assert not rem, "cyclotomic divisor left a remainder"
    return num


class CyclotomicField:
    """Descriptor for Q(zeta_N); obtain instances via :func:`cyclotomic_field`."""

    __slots__ = ("N", "phi", "degree", "_phi_low")

    def __init__(self, N: int):
        self.N = N
        self.phi = cyclotomic_polynomial(N)
        self.degree = self.phi.degree
        # Phi_N is monic with integer coefficients.
        self._phi_low = tuple(int(c) for c in self.phi.coeffs[:-1])

    def __repr__(self) -> str:
        return f"CyclotomicField({self.N})"

    def __reduce__(self):
        return (cyclotomic_field, (self.N,))

    def reduce_ints(self, nums: list[int]) -> list[int]:
        """Reduce an integer coefficient list modulo Phi_N (in place and returned)."""
        d = self.degree
        low = self._phi_low
        for k in range(len(nums) - 1, d - 1, -1):
            c = nums[k]
            if c:
                base = k - d
                for j, pj in enumerate(low):
                    if pj:
                        nums[base + j] -= c * pj
        del nums[d:]
        if len(nums) < d:
            nums.extend([0] * (d - len(nums)))
        return nums

    def element(self, coeffs: Iterable) -> CyclotomicElement:
        """Residue of the polynomial with the given (rational) coefficients."""
        fr = [Fraction(c) for c in coeffs]
        if not fr:
            return self.zero()
        den = 1
        for c in fr:
            den = den * c.denominator // math.gcd(den, c.denominator)
        nums = [int(c * den) for c in fr]
        return CyclotomicElement._make(self, self.reduce_ints(nums), den)

    def from_rational(self, value) -> CyclotomicElement:
        value = Fraction(value)
        nums = [0] * self.degree
        nums[0] = value.numerator
        return CyclotomicElement._make(self, nums, value.denominator)

    def zero(self) -> CyclotomicElement:
        return self.from_rational(0)

    def one(self) -> CyclotomicElement:
        return self.from_rational(1)

    def zeta(self) -> CyclotomicElement:
        return self.element((0, 1))


@lru_cache(maxsize=None)
def cyclotomic_field(N: int) -> CyclotomicField:
    if N < 1:
        raise ValueError(f"conductor must be positive, got {N}")
    return CyclotomicField(N)


def zeta(field: CyclotomicField) -> CyclotomicElement:
    return field.zeta()


class CyclotomicElement:
    __slots__ = ("field", "_nums", "_den")

    def __init__(self, field: CyclotomicField, coeffs: Sequence):
        if len(coeffs) != field.degree:
            raise ValueError(
                f"expected {field.degree} coefficients for Q(zeta_{field.N}), got {len(coeffs)}"
            )
        other = field.element(coeffs)
        self.field = field
        self._nums = other._nums
        self._den = other._den

    @classmethod
    def _make(cls, field: CyclotomicField, nums: list[int], den: int) -> CyclotomicElement:
        if den < 0:
            nums = [-c for c in nums]
            den = -den
        g = math.gcd(den, *nums)
        if g != 1:
            nums = [c // g for c in nums]
            den //= g
        obj = object.__new__(cls)
        obj.field = field
        obj._nums = tuple(nums)
        obj._den = den
        return obj

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._nums)

    def as_polynomial(self) -> Polynomial:
        return Polynomial(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self._nums)

    def is_rational(self) -> bool:
        return not any(self._nums[1:])

    def to_rational(self) -> Fraction | None:
        """The rational value, or None when the element lies outside Q."""
        if any(self._nums[1:]):
            return None
        return Fraction(self._nums[0], self._den)

    def __repr__(self) -> str:
        return f"CyclotomicElement(N={self.field.N}, {[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms) if terms else "0"

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(Fraction(self._nums[0], self._den))
        return hash((self.field.N, self._nums, self._den))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CyclotomicElement):
            return (
                self.field.N == other.field.N
                and self._den == other._den
                and self._nums == other._nums
            )
        if isinstance(other, (int, Fraction)):
            return self.to_rational() == other
        return NotImplemented

    def __bool__(self) -> bool:
        return not self.is_zero()

    def _coerce(self, other) -> CyclotomicElement | None:
        if isinstance(other, CyclotomicElement):
            if other.field.N != self.field.N:
                raise FieldMismatchError(
                    f"Q(zeta_{self.field.N}) vs Q(zeta_{other.field.N})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    def __add__(self, other) -> CyclotomicElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d1, d2 = self._den, o._den
        if d1 == d2:
            nums = [a + b for a, b in zip(self._nums, o._nums)]
            return self._make(self.field, nums, d1)
        nums = [a * d2 + b * d1 for a, b in zip(self._nums, o._nums)]
        return self._make(self.field, nums, d1 * d2)

    __radd__ = __add__

    def __neg__(self) -> CyclotomicElement:
        obj = object.__new__(CyclotomicElement)
        obj.field = self.field
        obj._nums = tuple(-c for c in self._nums)
        obj._den = self._den
        return obj

    def __sub__(self, other) -> CyclotomicElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> CyclotomicElement:
        return (-self) + other

    def __mul__(self, other) -> CyclotomicElement:
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            nums = [c * other.numerator for c in self._nums]
            return self._make(self.field, nums, self._den * other.denominator)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._nums, o._nums
        d = self.field.degree
        if d == 1:
            return self._make(self.field, [a[0] * b[0]], self._den * o._den)
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return self._make(self.field, self.field.reduce_ints(prod), self._den * o._den)

    __rmul__ = __mul__

    def inverse(self) -> CyclotomicElement:
        """Inverse via the extended gcd of the residue with Phi_N."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return self.field.from_rational(1 / Fraction(self._nums[0], self._den))
        g, u, _ = poly_xgcd(self.as_polynomial(), self.field.phi)
        assert g == Polynomial((1,)), "Phi_N is irreducible, gcd must be 1"
        return self.field.element(u.coeffs)

    def __truediv__(self, other) -> CyclotomicElement:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> CyclotomicElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> CyclotomicElement:
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out


def to_rational(x) -> Fraction | None:
    """Rational value of a field element, or None if it is not in Q."""
    if isinstance(x, CyclotomicElement):
        return x.to_rational()
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    return None
