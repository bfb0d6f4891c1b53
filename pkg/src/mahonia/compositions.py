"""H(n, d, t): vectors in {0, ..., d-1}^n with coordinate sum t."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate, product
from math import comb

from mahonia.errors import DomainError, check_budget
from mahonia.hilbert import restricted_binomial
from mahonia.polycore import UniPoly, poly_pow

BRUTE_MAX_SIZE = 10**7


@dataclass(frozen=True)
class CompositionTable:
    """``values[t] = H(n, d, t)`` for ``t = 0..n(d-1)``."""

    n: int
    d: int
    values: tuple[int, ...]

    def __getitem__(self, t):
        return self.values[t]

    def __len__(self):
        return len(self.values)

    def as_poly(self) -> UniPoly:
        return UniPoly(self.values)


def _check_nd(n, d):
    if n < 1 or d < 1:
        raise DomainError(f"need n, d >= 1, got n={n}, d={d}")


def comp_bruteforce(n: int, d: int) -> CompositionTable:
    _check_nd(n, d)
    check_budget("comp_bruteforce", d**n, BRUTE_MAX_SIZE)
    hist = [0] * (n * (d - 1) + 1)
    for v in product(range(d), repeat=n):
        hist[sum(v)] += 1
    return CompositionTable(n, d, tuple(hist))


@lru_cache(maxsize=256)
def comp_recurrence_row(n: int, d: int) -> tuple[int, ...]:
    """Rows of H(m, d, t) = H(m-1, d, t) + ... + H(m-1, d, t-d+1), from H(1, d, .) = 1."""
    _check_nd(n, d)
    row = [1] * d
    for m in range(2, n + 1):
        pre = [0, *accumulate(row)]
        top = len(row) - 1
        row = [
            pre[min(t, top) + 1] - pre[max(0, t - d + 1)]
            for t in range(m * (d - 1) + 1)
        ]
    return tuple(row)


def comp_recurrence(n: int, d: int, t: int) -> int:
    """H(n, d, t); 0 when ``t < 0`` or ``t > n(d-1)``."""
    _check_nd(n, d)
    if t < 0 or t > n * (d - 1):
        return 0
    return comp_recurrence_row(n, d)[t]


def comp_genfun(n: int, d: int) -> CompositionTable:
    """Coefficients of ``(1 + x + ... + x**(d-1))**n``."""
    _check_nd(n, d)
    return CompositionTable(n, d, poly_pow(UniPoly.geometric(d), n).coeffs)


def _check_t(n, d, t):
    _check_nd(n, d)
    if not 0 <= t <= n * (d - 1):
        raise DomainError(f"t={t} outside 0..{n * (d - 1)}")


def comp_prefix_closed(n: int, d: int, t: int) -> int:
    """``sum_{i<=t} H(n,d,i) = sum_i (-1)^i C(n,i) C(t-di+n, n)_0``."""
    _check_t(n, d, t)
    return sum(
        (-1) ** i * comb(n, i) * restricted_binomial(t - d * i + n, n)
        for i in range(n + 1)
    )


def comp_closed(n: int, d: int, t: int) -> int:
    """H(n, d, t) by the difference form of the inclusion-exclusion sum."""
    _check_t(n, d, t)
    total = 0
    for i in range(n + 1):
        m = t - d * i + n
        diff = restricted_binomial(m, n) - restricted_binomial(m - 1, n)
        if diff:
            total += (-1) ** i * comb(n, i) * diff
    return total


def comp_closed_row(n: int, d: int) -> CompositionTable:
    _check_nd(n, d)
    return CompositionTable(n, d, tuple(comp_closed(n, d, t) for t in range(n * (d - 1) + 1)))


def standard_monomial_count_M(n: int, d: int, t: int) -> int:
    """``#{a in M(n, d) : sum(a) <= t}`` by DP over coordinates."""
    if t < 0:
        return 0
    if n <= 0:
        return 1
    if d < 1:
        return 0
    ways = [1] + [0] * t
    for _ in range(n):
        pre = [0, *accumulate(ways)]
        ways = [pre[s + 1] - pre[max(0, s - d + 1)] for s in range(t + 1)]
    return sum(ways)
