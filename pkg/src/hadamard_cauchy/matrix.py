"""Dense exact matrices and brute-force determinant/permanent/rank oracles.

Entries may be any exact field elements (Fraction, CyclotomicElement);
the division-free routines (:func:`determinant_leibniz`,
:func:`permanent_naive`, :func:`permanent_ryser`) also accept ring
elements such as polynomials and jets.
"""
from __future__ import annotations

import itertools
import math
from concurrent.futures import Executor
from typing import Callable, Iterable, Sequence

from .errors import InvalidInstanceError, ShapeError, SizeLimitError
from .exact import binomial, coerce, one_like, zero_like

__all__ = [
    "DEFAULT_MAX_BRUTEFORCE",
    "ExactMatrix",
    "build_cauchy",
    "circulant_det",
    "circulant_matrix",
    "determinant",
    "determinant_leibniz",
    "hadamard_power",
    "kernel_det_closed",
    "kernel_det_factored",
    "kernel_matrix",
    "permanent_naive",
    "permanent_ryser",
    "rank",
    "trace",
]

DEFAULT_MAX_BRUTEFORCE = 12


class ExactMatrix:
    """Immutable row-major matrix."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(coerce(e) for e in entries)
        if rows < 1 or cols < 1:
            raise ShapeError("matrix dimensions must be positive")
        if len(entries) != rows * cols:
            raise ShapeError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> ExactMatrix:
        rows = [list(r) for r in rows]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ShapeError("ragged or empty row list")
        return cls(len(rows), len(rows[0]), itertools.chain.from_iterable(rows))

    @classmethod
    def identity(cls, n: int, one=1) -> ExactMatrix:
        zero = zero_like(coerce(one))
        return cls(n, n, (one if i == j else zero for i in range(n) for j in range(n)))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"ExactMatrix({self.to_rows()!r})"

    def map(self, fn: Callable) -> ExactMatrix:
        return ExactMatrix(self.rows, self.cols, (fn(e) for e in self.entries))

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(self.cols, self.rows, (self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def permute(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> ExactMatrix:
        """Matrix with entries ``M[row_perm[i], col_perm[j]]``."""
        return ExactMatrix(
            self.rows, self.cols, (self[r, c] for r in row_perm for c in col_perm)
        )

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.cols != other.rows:
            raise ShapeError("inner dimensions differ")
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                acc = r[0] * other[0, j]
                for k in range(1, self.cols):
                    acc = acc + r[k] * other[k, j]
                out.append(acc)
        return ExactMatrix(self.rows, other.cols, out)

    def __pow__(self, k: int) -> ExactMatrix:
        if not self.is_square or k < 0:
            raise ShapeError("matrix power needs a square matrix and k >= 0")
        out = ExactMatrix.identity(self.rows, one_like(self.entries[0]))
        for _ in range(k):
            out = out @ self
        return out


def _require_square(M: ExactMatrix) -> int:
    if not M.is_square:
        raise ShapeError(f"expected a square matrix, got {M.rows}x{M.cols}")
    return M.rows


def trace(M: ExactMatrix):
    n = _require_square(M)
    acc = M[0, 0]
    for i in range(1, n):
        acc = acc + M[i, i]
    return acc


def determinant(M: ExactMatrix):
    """Gaussian elimination over a field, pivoting on the first nonzero entry."""
    n = _require_square(M)
    a = M.to_rows()
    det = one_like(a[0][0])
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return zero_like(a[0][0])
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        p = a[col][col]
        det = det * p
        inv = 1 / p
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] * inv
                row_c, row_r = a[col], a[r]
                for j in range(col + 1, n):
                    row_r[j] = row_r[j] - f * row_c[j]
    return det


def _permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def determinant_leibniz(M: ExactMatrix):
    """Signed sum over all n! permutations; needs no division."""
    n = _require_square(M)
    total = zero_like(M.entries[0])
    for perm in itertools.permutations(range(n)):
        term = M[0, perm[0]]
        for i in range(1, n):
            term = term * M[i, perm[i]]
        total = total + term if _permutation_sign(perm) > 0 else total - term
    return total


def _check_cap(n: int, max_size: int | None) -> None:
    cap = DEFAULT_MAX_BRUTEFORCE if max_size is None else max_size
    if n > cap:
        raise SizeLimitError(f"brute force capped at n={cap}, got n={n}")


def permanent_naive(M: ExactMatrix, max_size: int | None = None):
    """Sum over all n! permutations, sharing partial products along the way."""
    n = _require_square(M)
    _check_cap(n, max_size)
    rows = M.to_rows()
    zero = zero_like(M.entries[0])

    def rec(i: int, used: int, prefix):
        if i == n:
            return prefix
        acc = zero
        row = rows[i]
        for j in range(n):
            if not used >> j & 1 and row[j] != 0:
                acc = acc + rec(i + 1, used | 1 << j, prefix * row[j])
        return acc

    return rec(0, 0, one_like(M.entries[0]))


def _ryser_chunk(rows: list[list], start: int, stop: int):
    """Ryser terms for Gray-code indices ``start..stop-1`` (index 0 is the empty set)."""
    n = len(rows)
    zero = zero_like(rows[0][0])
    total = zero
    k = max(start, 1)
    if k >= stop:
        return total
    g = k ^ (k >> 1)
    sums = []
    for i in range(n):
        acc = zero
        for j in range(n):
            if g >> j & 1:
                acc = acc + rows[i][j]
        sums.append(acc)
    size = bin(g).count("1")
    while True:
        prod = sums[0]
        for i in range(1, n):
            prod = prod * sums[i]
        total = total + prod if (n - size) % 2 == 0 else total - prod
        k += 1
        if k >= stop:
            break
        # Gray code step k-1 -> k flips the lowest set bit of k.
        j = (k & -k).bit_length() - 1
        if g >> j & 1:
            for i in range(n):
                sums[i] = sums[i] - rows[i][j]
            size -= 1
        else:
            for i in range(n):
                sums[i] = sums[i] + rows[i][j]
            size += 1
        g ^= 1 << j
    return total


def permanent_ryser(
    M: ExactMatrix,
    max_size: int | None = None,
    *,
    chunks: int = 1,
    executor: Executor | None = None,
):
    """Ryser's inclusion-exclusion over column subsets.

    ``per(M) = sum_S (-1)^(n - |S|) prod_i sum_{j in S} M[i, j]``.  Subsets
    are walked in Gray-code order; ``chunks`` splits the walk into disjoint
    index ranges whose partial sums are added in order, optionally mapped
    over ``executor``.  The result is identical either way.
    """
    n = _require_square(M)
    _check_cap(n, max_size)
    rows = M.to_rows()
    total_subsets = 1 << n
    chunks = max(1, min(chunks, total_subsets))
    bounds = [total_subsets * c // chunks for c in range(chunks + 1)]
    ranges = list(zip(bounds[:-1], bounds[1:]))
    if executor is None:
        parts = [_ryser_chunk(rows, a, b) for a, b in ranges]
    else:
        parts = list(executor.map(_ryser_chunk, [rows] * len(ranges), *zip(*ranges)))
    total = zero_like(M.entries[0])
    for p in parts:
        total = total + p
    return total


def rank(M: ExactMatrix) -> int:
    a = M.to_rows()
    r = 0
    for col in range(M.cols):
        pivot = next((i for i in range(r, M.rows) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][col]
        for i in range(r + 1, M.rows):
            if a[i][col] != 0:
                f = a[i][col] * inv
                for j in range(col, M.cols):
                    a[i][j] = a[i][j] - f * a[r][j]
        r += 1
        if r == M.rows:
            break
    return r


def hadamard_power(M: ExactMatrix, m: int) -> ExactMatrix:
    """Entrywise m-th power (negative m inverts every entry)."""
    if m < 0 and any(e == 0 for e in M.entries):
        raise ZeroDivisionError("negative Hadamard power of a matrix with a zero entry")
    if m == 0:
        return M.map(one_like)
    return M.map(lambda e: e ** m)


def build_cauchy(xs: Sequence, ys: Sequence, m: int = 1) -> ExactMatrix:
    """The matrix ((x_i - y_j)^(-m))."""
    if len(xs) != len(ys) or not xs:
        raise ShapeError("node vectors must be non-empty and of equal length")
    diffs = [coerce(x) - y for x in xs for y in ys]
    if any(d == 0 for d in diffs):
        raise InvalidInstanceError("coincident nodes x_i = y_j give a singular entry")
    n = len(xs)
    if m == 0:
        return ExactMatrix(n, n, (one_like(d) for d in diffs))
    inv = [1 / d for d in diffs]
    return ExactMatrix(n, n, (e ** m for e in inv) if m != 1 else inv)


def circulant_matrix(first_row: Sequence) -> ExactMatrix:
    """The circulant with entries ``b[(j - i) mod n]``."""
    n = len(first_row)
    return ExactMatrix(n, n, (first_row[(j - i) % n] for i in range(n) for j in range(n)))


def circulant_det(first_row: Sequence, zeta):
    """prod_{k=1}^{n} sum_{i} zeta^(i k) b_i for a primitive n-th root ``zeta``."""
    n = len(first_row)
    if n < 1:
        raise ShapeError("empty circulant")
    powers = [one_like(zeta)]
    for _ in range(n):
        powers.append(powers[-1] * zeta)
    if powers[n] != 1 or any(powers[k] == 1 for k in range(1, n)):
        raise ValueError(f"zeta is not a primitive {n}-th root of unity")
    det = one_like(zeta)
    for k in range(1, n + 1):
        eig = zero_like(zeta)
        for i, b in enumerate(first_row):
            eig = eig + powers[(i * k) % n] * b
        det = det * eig
    return det


def kernel_matrix(xs: Sequence, ys: Sequence, m: int) -> ExactMatrix:
    """The matrix ((x_i - y_j)^m) for m >= 0."""
    if len(xs) != len(ys) or not xs:
        raise ShapeError("node vectors must be non-empty and of equal length")
    n = len(xs)
    return ExactMatrix(n, n, ((coerce(x) - y) ** m for x in xs for y in ys))


def _vandermonde(vals: Sequence):
    out = one_like(coerce(vals[0]))
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            out = out * (coerce(vals[j]) - vals[i])
    return out


def kernel_det_factored(xs: Sequence, ys: Sequence, m: int):
    """det((x_i - y_j)^m) from the factorization through binomial-Vandermonde factors.

    Valid for n >= m + 1:
    (-1)^(mn) prod_{i<n} C(m, i) * prod y_i^(m-n+1) * prod_{i<j} (x_j - x_i)(y_j - y_i).
    The y-power is negative when n >= m + 2, but then C(m, m+1) = 0 kills the
    product before any division happens.
    """
    n = len(xs)
    if len(ys) != n or n < 1 or m < 1:
        raise ShapeError("need equal-length node vectors and m >= 1")
    if n < m + 1:
        raise ValueError(f"factorization needs n >= m + 1 (n={n}, m={m})")
    const = math.prod(binomial(m, i) for i in range(n))
    if const == 0:
        return zero_like(coerce(xs[0]) - ys[0])
    ypow = one_like(coerce(ys[0]))
    e = m - n + 1  # == 0 here since n == m + 1
    for y in ys:
        ypow = ypow * coerce(y) ** e
    sign = -1 if (m * n) % 2 else 1
    return _vandermonde(xs) * _vandermonde(ys) * ypow * (sign * const)


def kernel_det_closed(xs: Sequence, ys: Sequence, m: int):
    """det((x_i - y_j)^m): zero for n >= m + 2, the Vandermonde product for n = m + 1.

    For n <= m no closed form applies and the determinant is computed
    directly.
    """
    n = len(xs)
    if n >= m + 1:
        return kernel_det_factored(xs, ys, m)
    return determinant(kernel_matrix(xs, ys, m))
