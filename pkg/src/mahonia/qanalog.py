"""q-factorials, Gaussian binomials and subset-sum counts.

``[m]_q`` means ``1 + q + ... + q**(m-1)`` throughout.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from types import MappingProxyType
from typing import Mapping

from mahonia.errors import DomainError, check_budget
from mahonia.polycore import BiPoly, UniPoly, bipoly_mul, coeff, poly_divmod, poly_mul

SUBSET_ENUM_MAX_N = 25


def q_int(m: int) -> UniPoly:
    return UniPoly.geometric(m)


def q_factorial(n: int) -> UniPoly:
    """``[1]_q [2]_q ... [n]_q``; equal to 1 for n = 0 and n = 1."""
    if n < 0:
        raise DomainError(f"q_factorial: n={n} < 0")
    out = UniPoly((1,))
    for i in range(2, n + 1):
        out = poly_mul(out, q_int(i))
    return out


def gaussian_binomial_by_division(n: int, m: int) -> UniPoly:
    """Gaussian polynomial as the exact quotient of q-factorials.

    Raises AssertionError if the division leaves a remainder.
    """
    _check_nm(n, m)
    quot, rem = poly_divmod(q_factorial(n), poly_mul(q_factorial(n - m), q_factorial(m)))
    assert rem.is_zero(), f"[{n} choose {m}]_q: nonzero remainder {rem}"
    return quot


@lru_cache(maxsize=None)
def gaussian_row(n: int) -> tuple[UniPoly, ...]:
    """All Gaussian polynomials ``[n choose m]_q`` for m = 0..n (q-Pascal)."""
    if n < 0:
        raise DomainError(f"gaussian_row: n={n} < 0")
    row: list[tuple[int, ...]] = [(1,)]
    for r in range(1, n + 1):
        new = [(1,)]
        # [r, m] = [r-1, m-1] + q^m [r-1, m]
        for m in range(1, r):
            left, right = row[m - 1], row[m]
            size = m * (r - m) + 1
            acc = list(left) + [0] * (size - len(left))
            for i, c in enumerate(right):
                acc[m + i] += c
            new.append(tuple(acc))
        new.append((1,))
        row = new
    return tuple(UniPoly(c) for c in row)


def gaussian_binomial(n: int, m: int, method: str = "pascal") -> UniPoly:
    """The Gaussian polynomial ``[n]_q! / ([n-m]_q! [m]_q!)``.

    ``method="division"`` performs the defining polynomial division;
    ``"pascal"`` (default) reads the cached q-Pascal row.  Both agree.
    """
    _check_nm(n, m)
    if method == "division":
        return gaussian_binomial_by_division(n, m)
    if method == "pascal":
        return gaussian_row(n)[m]
    raise ValueError(f"unknown method {method!r}")


def _check_nm(n, m):
    if n < 0 or m < 0 or m > n:
        raise DomainError(f"Gaussian binomial needs 0 <= m <= n, got n={n}, m={m}")


@lru_cache(maxsize=64)
def subset_sum_table(n: int) -> Mapping[tuple[int, int], int]:
    """Histogram ``{(size, sum): count}`` over all subsets of ``[n]``."""
    if n < 0:
        return MappingProxyType({})
    if n > SUBSET_ENUM_MAX_N:
        raise DomainError(f"subset enumeration refuses n={n} > {SUBSET_ENUM_MAX_N}")
    check_budget("subset_sum_count", 1 << n, 1 << SUBSET_ENUM_MAX_N)
    sums = [0] * (1 << n)
    sizes = [0] * (1 << n)
    hist: dict[tuple[int, int], int] = {(0, 0): 1}
    for mask in range(1, 1 << n):
        low = mask & -mask
        rest = mask ^ low
        sums[mask] = sums[rest] + low.bit_length()
        sizes[mask] = sizes[rest] + 1
        key = (sizes[mask], sums[mask])
        hist[key] = hist.get(key, 0) + 1
    return MappingProxyType(hist)


def subset_sum_count(n: int, j: int, k: int) -> int:
    """Number of ``j``-element subsets of ``[n]`` whose elements sum to ``k``.

    Brute-force enumeration; refuses ``n > 25``.
    """
    if n < 0 or j < 0 or k < 0:
        return 0
    return subset_sum_table(n).get((j, k), 0)


def gauss_coefficient_C(n: int, j: int, k: int) -> int:
    """Coefficient of ``q**(k - j(j+1)/2)`` in ``[n choose j]_q``.

    Out-of-range ``(j, k)`` gives 0 so closed-form sums can index ``k``
    uniformly up to ``n(n+1)/2``.
    """
    if n < 0 or j < 0 or j > n:
        return 0
    return coeff(gaussian_row(n)[j], k - comb(j + 1, 2))


def cauchy_product(n: int) -> BiPoly:
    """Expanded ``prod_{i=1..n} (1 + t q**i)``."""
    if n < 0:
        raise DomainError(f"cauchy_product: n={n} < 0")
    out = BiPoly({(0, 0): 1})
    for i in range(1, n + 1):
        out = bipoly_mul(out, BiPoly({(0, 0): 1, (1, i): 1}))
    return out


def cauchy_sum(n: int) -> BiPoly:
    """``sum_m t**m q**(m(m+1)/2) [n choose m]_q``, the other side of the identity."""
    terms: dict[tuple[int, int], int] = {}
    for m, g in enumerate(gaussian_row(n)):
        shift = comb(m + 1, 2)
        for i, c in enumerate(g.coeffs):
            if c:
                terms[(m, shift + i)] = c
    return BiPoly(terms)
