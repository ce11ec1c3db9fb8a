"""Brute-force verification of the closed forms over Q(zeta_n).

With rational witnesses ``beta``, ``gamma`` every node ``eps^i beta`` and
``eps^i gamma`` lies in Q(zeta_n), so determinants and permanents of the
Hadamard powers can be computed exactly and compared with the closed forms.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .cyclotomic import CyclotomicElement, cyclotomic_field, to_rational
from .errors import SizeLimitError
from .exact import Polynomial
from .formulas import (
    CauchyInstance,
    det_hadamard_closed,
    root_transform_polynomial,
    per_closed,
)
from .matrix import (
    DEFAULT_MAX_BRUTEFORCE,
    ExactMatrix,
    build_cauchy,
    determinant,
    permanent_naive,
    permanent_ryser,
)

__all__ = [
    "Check",
    "VerificationReport",
    "root_transform_check",
    "twisted_sum_direct",
    "verify_instance",
    "witness_nodes",
]

NAIVE_LIMIT = 8


def _fmt(value) -> str:
    if isinstance(value, CyclotomicElement):
        q = value.to_rational()
        return str(q) if q is not None else str(value)
    return str(value)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    lhs: Any
    rhs: Any

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict[str, str]:
        return {"name": self.name, "status": self.status, "lhs": _fmt(self.lhs), "rhs": _fmt(self.rhs)}


@dataclass
class VerificationReport:
    n: int
    beta: Fraction
    gamma: Fraction
    m_max: int
    checks: list[Check] = field(default_factory=list)
    values: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def add(self, name: str, lhs, rhs, passed: bool | None = None) -> None:
        self.checks.append(Check(name, lhs == rhs if passed is None else passed, lhs, rhs))

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "beta": str(self.beta),
            "gamma": str(self.gamma),
            "m_max": self.m_max,
            "passed": self.passed,
            "values": {k: _fmt(v) for k, v in self.values.items()},
            "checks": [c.to_dict() for c in self.checks],
        }


def witness_nodes(n: int, beta, gamma) -> tuple[list, list]:
    """xs = (eps^i beta), ys = (eps^i gamma) for i = 1..n inside Q(zeta_n)."""
    K = cyclotomic_field(n)
    z = K.zeta()
    beta, gamma = Fraction(beta), Fraction(gamma)
    xs, ys = [], []
    power = K.one()
    for _ in range(n):
        power = power * z
        xs.append(power * beta)
        ys.append(power * gamma)
    return xs, ys


def twisted_sum_direct(n: int, m: int, k: int, alpha) -> CyclotomicElement:
    """sum_{i<n} eps^(ik) / (1 - eps^i alpha)^m evaluated in Q(zeta_n)."""
    K = cyclotomic_field(n)
    z = K.zeta()
    alpha = Fraction(alpha)
    total = K.zero()
    for i in range(n):
        zi = z ** i
        total = total + zi ** k / (1 - zi * alpha) ** m
    return total


def root_transform_check(n: int, alpha) -> tuple[Polynomial, Polynomial]:
    """prod (x - 1/(1 - eps^i alpha)) over Q(zeta_n) next to its rational closed form."""
    K = cyclotomic_field(n)
    z = K.zeta()
    alpha = Fraction(alpha)
    roots = [1 / (1 - z ** i * alpha) for i in range(n)]
    lhs = Polynomial.from_roots(roots)
    rhs = root_transform_polynomial(n, alpha ** n)
    return lhs, rhs


def _cap(max_bruteforce: int | None) -> int:
    if max_bruteforce is not None:
        return max_bruteforce
    env = os.environ.get("HC_MAX_BRUTEFORCE")
    return int(env) if env else DEFAULT_MAX_BRUTEFORCE


def verify_instance(
    n: int,
    beta,
    gamma,
    m_max: int = 2,
    *,
    max_bruteforce: int | None = None,
) -> VerificationReport:
    """Compare closed forms with brute force on one witness instance.

    For each m <= m_max the Hadamard power's determinant is checked against
    the closed form embedded at alpha = gamma/beta, and its permanent and
    squared determinant are checked for rationality.  At m = 1 the
    permanent is checked against its product formula and Borchardt's
    identity per(A) det(A) = det(A o A) is checked.
    """
    inst = CauchyInstance.from_witnesses(n, beta, gamma)
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    cap = _cap(max_bruteforce)
    if n > cap:
        raise SizeLimitError(f"n={n} exceeds the brute-force cap {cap}")

    alpha = inst.alpha
    xs, ys = witness_nodes(n, inst.beta, inst.gamma)
    report = VerificationReport(n, inst.beta, inst.gamma, m_max)

    mats: dict[int, ExactMatrix] = {}
    dets = {}
    for m in range(1, max(m_max, 2) + 1):
        mats[m] = build_cauchy(xs, ys, m)
        dets[m] = determinant(mats[m])

    for m in range(1, m_max + 1):
        closed = det_hadamard_closed(inst, m).embed(alpha)
        report.add(f"det_closed[m={m}]", dets[m], closed)
        per_m = permanent_ryser(mats[m], max_size=cap)
        report.add(f"per_rational[m={m}]", per_m, "rational", to_rational(per_m) is not None)
        sq = dets[m] * dets[m]
        report.add(f"det_squared_rational[m={m}]", sq, "rational", to_rational(sq) is not None)
        if m == 1:
            report.add("per_closed", per_m, per_closed(inst))
            if n <= NAIVE_LIMIT:
                report.add("per_ryser_vs_naive", per_m, permanent_naive(mats[1], max_size=cap))
            report.add("borchardt", per_m * dets[1], dets[2])
            report.values["per"] = per_m
            report.values["det"] = dets[1]
        report.values[f"det[m={m}]"] = dets[m]
        report.values[f"per[m={m}]"] = per_m
    report.values["det_hadamard_square"] = dets[2]
    return report

