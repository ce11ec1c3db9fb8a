"""Power sums, polynomial coefficients and the partition sums linking them.

Sign convention throughout: a monic polynomial is written
``x^n + a_1 x^(n-1) + ... + a_n`` and ``a_i = (-1)^i s_i`` where ``s_i``
is the i-th elementary symmetric function of the roots.

A partition vector ``lam = (l_1, ..., l_k)`` lists multiplicities: part
``i`` occurs ``l_i`` times, so its weight is ``sum(i * l_i)``.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import NonIntegralError, UnsupportedDomainError
from .exact import binomial, one_like, zero_like

__all__ = [
    "PartitionVector",
    "binomial_chain_identity",
    "charpoly_from_traces",
    "coeffs_from_power_sums",
    "elementary_from_power_sums",
    "enumerate_partitions",
    "partition_weight",
    "power_sums_from_coeffs",
    "waring_coefficient",
]

PartitionVector = tuple[int, ...]


def partition_weight(lam: Sequence[int]) -> int:
    return sum(i * l for i, l in enumerate(lam, start=1))


def enumerate_partitions(m: int, max_part: int) -> Iterator[PartitionVector]:
    """Every ``lam`` of length ``max_part`` with weight ``m``, exactly once.

    Order is decreasing lexicographic in ``(l_1, l_2, ...)``, e.g. for m=4,
    max_part=2: (4, 0), (2, 1), (0, 2).
    """
    if m < 1:
        raise ValueError(f"partition weight must be >= 1, got {m}")
    if max_part < 1:
        return

    def rec(i: int, remaining: int) -> Iterator[list[int]]:
        # Choose l_i for i = 1..max_part; the last slot must absorb the rest.
        if i == max_part:
            if remaining % i == 0:
                yield [remaining // i]
            return
        for li in range(remaining // i, -1, -1):
            for tail in rec(i + 1, remaining - i * li):
                yield [li] + tail

    for lam in rec(1, m):
        yield tuple(lam)


def waring_coefficient(lam: Sequence[int]) -> int:
    """The integer m * (|lam| - 1)! / prod(l_i!) with m the weight of ``lam``."""
    m = partition_weight(lam)
    if m < 1:
        raise ValueError("partition weight must be >= 1")
    if any(l < 0 for l in lam):
        raise ValueError("multiplicities must be non-negative")
    num = m * math.factorial(sum(lam) - 1)
    den = math.prod(math.factorial(l) for l in lam)
    q, r = divmod(num, den)
    if r:
        raise NonIntegralError(f"waring coefficient of {tuple(lam)} is {num}/{den}")
    return q


def binomial_chain_identity(l: Sequence[int]) -> tuple[Fraction, int]:
    """Both sides of the binomial-chain identity for ``l_1 >= ... >= l_n >= 1``.

    lhs = (sum l_i / l_1) * prod C(l_i, l_{i+1});
    rhs = prod C(l_i, l_{i+1}) + sum_k prod_{i<=k} C(l_i - 1, l_{i+1} - 1)
          * prod_{i>k} C(l_i, l_{i+1}).
    """
    n = len(l)
    if n < 1 or any(x < 1 for x in l):
        raise ValueError("need at least one positive entry")
    if any(l[i] < l[i + 1] for i in range(n - 1)):
        raise ValueError(f"sequence is not non-increasing: {tuple(l)}")
    full = [binomial(l[i], l[i + 1]) for i in range(n - 1)]
    reduced = [binomial(l[i] - 1, l[i + 1] - 1) for i in range(n - 1)]
    lhs = Fraction(sum(l), l[0]) * math.prod(full)
    rhs = math.prod(full)
    for k in range(1, n):
        rhs += math.prod(reduced[:k]) * math.prod(full[k:])
    return lhs, rhs


def power_sums_from_coeffs(a: Sequence, m: int):
    """p_m of the roots of ``x^n + sum a_i x^(n-i)`` by Waring's formula.

    ``a`` may hold any exact field elements (Fractions, cyclotomic
    elements); the sum runs over partitions of ``m`` with parts <= n.
    """
    if m < 1:
        raise ValueError("power sum index must be >= 1")
    n = len(a)
    if n == 0:
        raise ValueError("need at least one coefficient")
    total = zero_like(a[0])
    for lam in enumerate_partitions(m, n):
        term = one_like(a[0])
        for ai, li in zip(a, lam):
            if li:
                term = term * ai ** li
        w = waring_coefficient(lam)
        total = total + term * (w if sum(lam) % 2 == 0 else -w)
    return total


def _newton_weight(lam: Sequence[int]) -> Fraction:
    den = 1
    for i, li in enumerate(lam, start=1):
        den *= i ** li * math.factorial(li)
    return Fraction((-1) ** sum(lam), den)


def coeffs_from_power_sums(p: Sequence) -> list:
    """a_1..a_k from p_1..p_k via the signed partition sum (a_j = 0 past the degree)."""
    k = len(p)
    if k < 1:
        raise ValueError("need at least one power sum")
    out = []
    for j in range(1, k + 1):
        total = zero_like(p[0])
        for lam in enumerate_partitions(j, j):
            term = one_like(p[0])
            for pi, li in zip(p, lam):
                if li:
                    term = term * pi ** li
            total = total + term * _newton_weight(lam)
        out.append(total)
    return out


def elementary_from_power_sums(p: Sequence) -> list:
    """s_1..s_k, i.e. (-1)^j a_j."""
    return [c if j % 2 == 0 else -c for j, c in enumerate(coeffs_from_power_sums(p), start=1)]


def charpoly_from_traces(traces: Sequence) -> list:
    """Coefficients a_1..a_n of det(xI - A) from Tr(A), ..., Tr(A^n)."""
    if len(traces) < 1:
        raise UnsupportedDomainError("need the traces of A^1..A^n with n >= 1")
    return coeffs_from_power_sums(traces)
