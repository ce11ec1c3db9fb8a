"""Closed forms for Hadamard powers of root-of-unity Cauchy matrices.

Setting: ``x_1..x_n`` are the roots of ``x^n + a`` and ``y_1..y_n`` the
roots of ``x^n + b`` (a, b nonzero, a != b), ``c = b/a`` and ``alpha`` is a
root of ``x^n - c``.  The central quantity is the twisted sum

    f_{n,m}(k) = sum_{i<n} eps^(ik) / (1 - eps^i alpha)^m

over a primitive n-th root of unity ``eps``.  Its value at k=0 is rational
in ``c``; for 1 <= k <= n it is ``alpha^(-k)`` times a rational, carried
exactly as a :class:`TwistedRational`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvalidInstanceError
from .exact import Polynomial, binomial
from .series import TruncatedSeries, series_invert
from .symfunc import enumerate_partitions, waring_coefficient

__all__ = [
    "CauchyInstance",
    "FTable",
    "TwistedRational",
    "det_hadamard_closed",
    "det_hadamard_product",
    "f0_direct",
    "f0_recurrence",
    "f0_series",
    "f_k",
    "f_table",
    "f_value",
    "minc_value",
    "per_closed",
    "per_closed_forms",
    "per_from_borchardt",
    "scott_historical",
    "scott_minc",
    "permanent_forms_agree",
]


def _check_c(c) -> Fraction:
    c = Fraction(c)
    if c == 0 or c == 1:
        raise InvalidInstanceError(f"c must avoid 0 and 1, got {c}")
    return c


class TwistedRational:
    """The value ``r * alpha^e`` with ``alpha^n = c`` and ``0 <= e < n``.

    Exponents are reduced modulo ``n`` by folding ``alpha^n`` into ``r`` as
    ``c``.  Sums are only defined between values with the same exponent
    (or when one side is zero), which is all the closed forms need.
    """

    __slots__ = ("r", "e", "n", "c")

    def __init__(self, r, e: int = 0, *, n: int, c):
        if n < 1:
            raise ValueError("order n must be positive")
        c = Fraction(c)
        if c == 0:
            raise InvalidInstanceError("alpha^n = 0 is not allowed")
        r = Fraction(r)
        q, e = divmod(e, n)
        if q:
            r *= c ** q
        if r == 0:
            e = 0
        self.r, self.e, self.n, self.c = r, e, n, c

    @classmethod
    def alpha_power(cls, k: int, *, n: int, c) -> TwistedRational:
        return cls(1, k, n=n, c=c)

    def _same_ring(self, other: TwistedRational) -> None:
        if (self.n, self.c) != (other.n, other.c):
            raise InvalidInstanceError(
                f"alpha^{self.n} = {self.c} and alpha^{other.n} = {other.c} are different rings"
            )

    def _lift(self, other) -> TwistedRational:
        if isinstance(other, TwistedRational):
            self._same_ring(other)
            return other
        if isinstance(other, (int, Fraction)):
            return TwistedRational(other, 0, n=self.n, c=self.c)
        return NotImplemented

    def __repr__(self) -> str:
        return f"TwistedRational({self.r}, e={self.e}, n={self.n}, c={self.c})"

    def __str__(self) -> str:
        if self.e == 0:
            return str(self.r)
        pw = "alpha" if self.e == 1 else f"alpha^{self.e}"
        return f"{self.r}*{pw}"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TwistedRational):
            return (self.r, self.e, self.n, self.c) == (other.r, other.e, other.n, other.c)
        if isinstance(other, (int, Fraction)):
            return self.e == 0 and self.r == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.r, self.e, self.n, self.c))

    def __neg__(self) -> TwistedRational:
        return TwistedRational(-self.r, self.e, n=self.n, c=self.c)

    def __add__(self, other) -> TwistedRational:
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if o.r == 0:
            return self
        if self.r == 0:
            return o
        if o.e != self.e:
            raise ValueError(
                f"cannot add alpha^{self.e} and alpha^{o.e} terms as a single twisted rational"
            )
        return TwistedRational(self.r + o.r, self.e, n=self.n, c=self.c)

    __radd__ = __add__

    def __sub__(self, other) -> TwistedRational:
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other) -> TwistedRational:
        return (-self) + other

    def __mul__(self, other) -> TwistedRational:
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return TwistedRational(self.r * o.r, self.e + o.e, n=self.n, c=self.c)

    __rmul__ = __mul__

    def inverse(self) -> TwistedRational:
        if self.r == 0:
            raise ZeroDivisionError("inverse of zero")
        return TwistedRational(1 / self.r, -self.e, n=self.n, c=self.c)

    def __truediv__(self, other) -> TwistedRational:
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other) -> TwistedRational:
        return self.inverse() * other

    def __pow__(self, k: int) -> TwistedRational:
        if k < 0:
            return self.inverse() ** (-k)
        return TwistedRational(self.r ** k, self.e * k, n=self.n, c=self.c)

    def to_rational(self) -> Fraction | None:
        return self.r if self.e == 0 else None

    def embed(self, alpha):
        """Evaluate at a concrete root ``alpha`` of ``x^n - c``."""
        if alpha ** self.n != self.c:
            raise ValueError(f"alpha does not satisfy alpha^{self.n} = {self.c}")
        return alpha ** self.e * self.r


@dataclass(frozen=True)
class CauchyInstance:
    """Roots of ``x^n + a`` against roots of ``x^n + b``.

    ``beta``/``gamma`` are optional rational witnesses with
    ``a = -beta^n`` and ``b = -gamma^n``; when present every root lies in
    Q(zeta_n) and the instance can be checked by brute force.
    """

    n: int
    a: Fraction
    b: Fraction
    beta: Fraction | None = None
    gamma: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.n < 1:
            raise InvalidInstanceError(f"n must be >= 1, got {self.n}")
        if self.a == 0 or self.b == 0:
            raise InvalidInstanceError("a and b must be nonzero")
        if self.a == self.b:
            raise InvalidInstanceError("a = b makes the two root sets coincide")
        if (self.beta is None) != (self.gamma is None):
            raise InvalidInstanceError("witnesses come in pairs")
        if self.beta is not None:
            beta, gamma = Fraction(self.beta), Fraction(self.gamma)
            object.__setattr__(self, "beta", beta)
            object.__setattr__(self, "gamma", gamma)
            if -(beta ** self.n) != self.a or -(gamma ** self.n) != self.b:
                raise InvalidInstanceError("witnesses do not satisfy a = -beta^n, b = -gamma^n")

    @classmethod
    def from_witnesses(cls, n: int, beta, gamma) -> CauchyInstance:
        beta, gamma = Fraction(beta), Fraction(gamma)
        if beta == 0 or gamma == 0:
            raise InvalidInstanceError("witnesses must be nonzero")
        a, b = -(beta ** n), -(gamma ** n)
        if a == b:
            raise InvalidInstanceError("beta^n = gamma^n: the two root sets coincide")
        return cls(n, a, b, beta, gamma)

    @property
    def c(self) -> Fraction:
        return self.b / self.a

    @property
    def alpha(self) -> Fraction | None:
        """gamma/beta, a root of x^n - c, when witnesses are known."""
        if self.beta is None:
            return None
        return self.gamma / self.beta


def f0_direct(n: int, m: int, c) -> Fraction:
    """f_{n,m}(0) as a signed sum over partitions of m with parts <= n.

    (-1)^m sum_lam W(lam) (1/(c-1))^|lam| prod C(n, i)^lam_i, where W is
    the integral Waring coefficient.  ``m = 0`` returns ``n``.
    """
    c = _check_c(c)
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return Fraction(n)
    t = 1 / (c - 1)
    binoms = [binomial(n, i) for i in range(1, n + 1)]
    total = Fraction(0)
    for lam in enumerate_partitions(m, n):
        term = waring_coefficient(lam) * t ** sum(lam)
        for bi, li in zip(binoms, lam):
            if li:
                term *= bi ** li
        total += term
    return total if m % 2 == 0 else -total


def f0_recurrence(n: int, M: int, c) -> list[Fraction]:
    """f_{n,0}(0), ..., f_{n,M}(0) by the linear recurrence in m."""
    c = _check_c(c)
    t = 1 / (c - 1)
    f = [Fraction(n)]
    for m in range(1, M + 1):
        if m <= n:
            acc = Fraction((-1) ** m * binomial(n, m) * m)
            for i in range(1, m):
                acc += (-1) ** i * binomial(n, i) * f[m - i]
        else:
            acc = Fraction(0)
            for i in range(1, n + 1):
                acc += (-1) ** i * binomial(n, i) * f[m - i]
        f.append(t * acc)
    return f


def f0_series(n: int, M: int, c) -> list[Fraction]:
    """Coefficients 0..M of n[(1-x)^(n-1) - c] / ((1-x)^n - c)."""
    c = _check_c(c)
    one_minus_x = TruncatedSeries((1, -1), M)
    num = (one_minus_x ** (n - 1) - c) * n
    den = one_minus_x ** n - c
    return list((num * series_invert(den)).coeffs)


def _bracket(n: int, m: int, k: int, f0: list[Fraction]) -> Fraction:
    """(-1)^m C(k-1, m-1) n + sum_{i<m} (-1)^i C(k, i) f_{n,m-i}(0)."""
    acc = Fraction((-1) ** m * binomial(k - 1, m - 1) * n)
    for i in range(m):
        acc += (-1) ** i * binomial(k, i) * f0[m - i]
    return acc


def f_k(n: int, m: int, k: int, c, f0: list[Fraction] | None = None) -> TwistedRational:
    """f_{n,m}(k) = alpha^(-k) * bracket for 1 <= k <= n, m >= 1."""
    c = _check_c(c)
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in 1..{n}, got {k}")
    if m < 1:
        raise ValueError("m must be >= 1")
    if f0 is None or len(f0) <= m:
        f0 = f0_recurrence(n, m, c)
    return TwistedRational(_bracket(n, m, k, f0), -k, n=n, c=c)


def f_value(n: int, m: int, k: int, c) -> TwistedRational:
    """f_{n,m}(k) for any m >= 0 and any integer k (period n in k)."""
    c = _check_c(c)
    if m < 0:
        raise ValueError("m must be >= 0")
    k %= n
    if m == 0:
        return TwistedRational(n if k == 0 else 0, n=n, c=c)
    if k == 0:
        return TwistedRational(f0_recurrence(n, m, c)[m], n=n, c=c)
    return f_k(n, m, k, c)


@dataclass(frozen=True)
class FTable:
    """f_{n,m}(k) for 0 <= k < n and 0 <= m <= M."""

    n: int
    c: Fraction
    M: int
    values: dict[tuple[int, int], TwistedRational] = field(repr=False)

    def __getitem__(self, mk: tuple[int, int]) -> TwistedRational:
        return self.values[mk]


def f_table(n: int, M: int, c) -> FTable:
    c = _check_c(c)
    f0 = f0_recurrence(n, M, c)
    values = {}
    for m in range(M + 1):
        for k in range(n):
            if m == 0:
                values[m, k] = TwistedRational(n if k == 0 else 0, n=n, c=c)
            elif k == 0:
                values[m, k] = TwistedRational(f0[m], n=n, c=c)
            else:
                values[m, k] = f_k(n, m, k, c, f0)
    return FTable(n, c, M, values)


def det_hadamard_closed(inst: CauchyInstance, m: int) -> TwistedRational:
    """det((x_i - y_j)^(-m)) for x_i = eps^i beta, y_j = eps^j gamma, alpha = gamma/beta.

    (-1)^(mn) a^(-m) alpha^(-n(n-1)/2) f_{n,m}(0) prod_{k=1}^{n-1} bracket_k.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    n, a, c = inst.n, inst.a, _check_c(inst.c)
    f0 = f0_recurrence(n, m, c)
    r = f0[m] / a ** m
    if (m * n) % 2:
        r = -r
    for k in range(1, n):
        r *= _bracket(n, m, k, f0)
    return TwistedRational(r, -(n * (n - 1) // 2), n=n, c=c)


def det_hadamard_product(inst: CauchyInstance, m: int) -> TwistedRational:
    """Same determinant as the product of circulant eigenvalues f_{n,m}(k), k = 0..n-1."""
    n, a, c = inst.n, inst.a, _check_c(inst.c)
    table = f_table(n, m, c)
    out = TwistedRational((-1) ** (m * n) / a ** m, n=n, c=c)
    for k in range(n):
        out = out * table[m, k]
    return out


def per_closed_forms(n: int, a, b) -> tuple[Fraction, Fraction, Fraction]:
    """The three product forms for per((x_i - y_j)^(-1)).

    (1) n/(b-a)^n prod_{k<n} [na + k(b-a)]
    (2) n/(b-a)^n prod_{k<n} [nb + k(a-b)]
    (3) the parity split pairing k with n-k.
    """
    a, b = Fraction(a), Fraction(b)
    if n < 1:
        raise InvalidInstanceError("n must be >= 1")
    if a == b:
        raise InvalidInstanceError("a = b makes the two root sets coincide")
    if a == 0 or b == 0:
        raise InvalidInstanceError("a and b must be nonzero")
    d = b - a
    lead = n / d ** n
    form_a = lead * math.prod((n * a + k * d for k in range(1, n)), start=Fraction(1))
    form_b = lead * math.prod((n * b + k * (a - b) for k in range(1, n)), start=Fraction(1))
    if n % 2:
        half = (n - 1) // 2
        paired = math.prod(
            ((-n * a - k * d) * (n * b - k * d) for k in range(1, half + 1)), start=Fraction(1)
        )
        form_parity = (-1) ** half * lead * paired
    else:
        half = n // 2
        paired = math.prod(
            ((n * a + k * d) * (n * b + k * (a - b)) for k in range(1, half)), start=Fraction(1)
        )
        form_parity = Fraction(n, 2) * n * (a + b) / d ** n * paired
    return form_a, form_b, form_parity


def permanent_forms_agree(n: int, a, b) -> tuple[bool, tuple[Fraction, Fraction, Fraction]]:
    forms = per_closed_forms(n, a, b)
    return forms[0] == forms[1] == forms[2], forms


def per_closed(inst: CauchyInstance) -> Fraction:
    """per((x_i - y_j)^(-1)); all three product forms are evaluated and must agree."""
    agree, forms = permanent_forms_agree(inst.n, inst.a, inst.b)
    if not agree:
        raise ArithmeticError(f"permanent product forms disagree: {forms}")
    return forms[0]


def per_from_borchardt(inst: CauchyInstance) -> Fraction:
    """per(A) = det(A o A) / det(A) with both determinants in closed form."""
    ratio = det_hadamard_closed(inst, 2) / det_hadamard_closed(inst, 1)
    value = ratio.to_rational()
    if value is None:
        raise ArithmeticError(f"determinant ratio is not rational: {ratio}")
    return value


def scott_minc(n: int, a) -> Fraction:
    """Permanent for the roots of x^n + a against the roots of y^n - a."""
    a = Fraction(a)
    if n < 1:
        raise InvalidInstanceError("n must be >= 1")
    if a == 0:
        raise InvalidInstanceError("a must be nonzero")
    if n % 2 == 0:
        return Fraction(0)
    odd = math.prod(n - 2 * k for k in range(1, (n - 1) // 2 + 1))
    return (-1) ** ((n + 1) // 2) * Fraction(n, 2 ** n) / a * odd ** 2


def _odd_double_factorial_sq(n: int) -> int:
    return math.prod(range(1, n - 1, 2)) ** 2


def minc_value(n: int) -> Fraction:
    """Signed permanent for x^n - 1 against y^n + 1: (-1)^((n-1)/2) n [1*3*...*(n-2)]^2 / 2^n."""
    if n < 1:
        raise InvalidInstanceError("n must be >= 1")
    if n % 2 == 0:
        return Fraction(0)
    return (-1) ** ((n - 1) // 2) * Fraction(n * _odd_double_factorial_sq(n), 2 ** n)


def scott_historical(n: int) -> Fraction:
    """The historical value without the sign; kept only for display next to the correct one."""
    if n < 1:
        raise InvalidInstanceError("n must be >= 1")
    if n % 2 == 0:
        return Fraction(0)
    return Fraction(n * _odd_double_factorial_sq(n), 2 ** n)


def root_transform_polynomial(n: int, c) -> Polynomial:
    """x^n + (1-c)^(-1) sum_{i>=1} (-1)^i C(n, i) x^(n-i), whose roots are 1/(1 - eps^i alpha)."""
    c = _check_c(c)
    t = 1 / (1 - c)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    for i in range(1, n + 1):
        coeffs[n - i] += t * (-1) ** i * binomial(n, i)
    return Polynomial(coeffs)
