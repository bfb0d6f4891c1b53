"""I_n(t), the number of permutations of [n] with exactly t inversions.

Four independent routes: enumeration, the row recurrence, the product
generating function, and closed sums over Gaussian-binomial coefficients.
The pentagonal-number formula covers the range t <= n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate, permutations
from math import comb, factorial

from mahonia.errors import DomainError, check_budget
from mahonia.hilbert import restricted_binomial
from mahonia.polycore import UniPoly, poly_mul, poly_mul_truncated
from mahonia.qanalog import gauss_coefficient_C

BRUTE_MAX_N = 10


def max_inversions(n: int) -> int:
    return n * (n - 1) // 2


@dataclass(frozen=True)
class InversionTable:
    """``values[t] = I_n(t)`` for ``t = 0..n(n-1)/2``."""

    n: int
    values: tuple[int, ...]

    def __getitem__(self, t):
        return self.values[t]

    def __len__(self):
        return len(self.values)

    def as_poly(self) -> UniPoly:
        return UniPoly(self.values)


@dataclass(frozen=True)
class ExponentVector:
    """Exponents bounded entrywise by ``bounds`` (inclusive)."""

    entries: tuple[int, ...]
    bounds: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != len(self.bounds):
            raise DomainError("entries and bounds differ in length")
        for a, b in zip(self.entries, self.bounds):
            if not 0 <= a <= b:
                raise DomainError(f"entry {a} outside 0..{b}")

    @classmethod
    def staircase(cls, entries) -> ExponentVector:
        """Member of L_n: ``0 <= entries[i-1] <= i-1``."""
        return cls(tuple(entries), tuple(range(len(entries))))

    @classmethod
    def box(cls, entries, d: int) -> ExponentVector:
        """Member of M(n, d): ``0 <= entries[i] <= d-1``."""
        return cls(tuple(entries), (d - 1,) * len(entries))

    @property
    def total(self) -> int:
        return sum(self.entries)


def count_inversions(perm) -> int:
    return sum(1 for i, a in enumerate(perm) for b in perm[i + 1:] if a > b)


def inv_bruteforce(n: int) -> InversionTable:
    """Histogram of inversion counts over all ``n!`` permutations."""
    if n < 0:
        raise DomainError(f"n={n} < 0")
    check_budget("inv_bruteforce", factorial(n), factorial(BRUTE_MAX_N))
    hist = [0] * (max_inversions(n) + 1)
    for p in permutations(range(n)):
        hist[count_inversions(p)] += 1
    return InversionTable(n, tuple(hist))


@lru_cache(maxsize=128)
def inv_recurrence_row(n: int) -> tuple[int, ...]:
    """Row ``I_n(0..C(n,2))`` from I_n(t) = sum_{max(0,t-n+1) <= j <= t} I_{n-1}(j)."""
    if n < 0:
        raise DomainError(f"n={n} < 0")
    row = [1]
    for m in range(1, n + 1):
        pre = [0, *accumulate(row)]
        top = len(row) - 1
        new = []
        for t in range(max_inversions(m) + 1):
            hi = min(t, top)
            lo = max(0, t - m + 1)
            new.append(pre[hi + 1] - pre[lo] if hi >= lo else 0)
        row = new
    return tuple(row)


def inv_recurrence(n: int, t: int) -> int:
    """I_n(t) by the row recurrence; 0 for ``t`` outside ``0..C(n,2)``."""
    if n == 0:
        return 1 if t == 0 else 0
    if t < 0 or t > max_inversions(n):
        return 0
    return inv_recurrence_row(n)[t]


def inv_genfun(n: int) -> InversionTable:
    """Coefficients of ``prod_{i=1..n-1} (1 + z + ... + z**i)``."""
    if n < 1:
        raise DomainError(f"n={n} < 1")
    g = UniPoly((1,))
    for i in range(1, n):
        g = poly_mul(g, UniPoly.geometric(i + 1))
    return InversionTable(n, g.coeffs)


def _check_t(n, t):
    if n < 1:
        raise DomainError(f"n={n} < 1")
    if not 0 <= t <= max_inversions(n):
        raise DomainError(f"t={t} outside 0..{max_inversions(n)} for n={n}")


def inv_prefix_closed(n: int, t: int) -> int:
    """``sum_{i<=t} I_n(i)`` via

        C(n+t, t) + sum_j sum_k (-1)^j C(n,j,k) C(t-k+n, n)_0
    """
    _check_t(n, t)
    top = comb(n + 1, 2)
    total = comb(n + t, t)
    for k in range(1, min(t, top) + 1):
        w = restricted_binomial(t - k + n, n)
        for j in range(1, n + 1):
            c = gauss_coefficient_C(n, j, k)
            if c:
                total += (-1) ** j * c * w
    return total


def inv_closed(n: int, t: int) -> int:
    """I_n(t) from the difference-of-restricted-binomials closed form."""
    _check_t(n, t)
    top = comb(n + 1, 2)
    total = comb(n + t, t) - restricted_binomial(n + t - 1, t - 1)
    for k in range(1, min(t, top) + 1):
        # terms with k > t vanish: both restricted binomials are zero there
        w = restricted_binomial(t - k + n, n) - restricted_binomial(t - k + n - 1, n)
        if not w:
            continue
        acc = 0
        for j in range(1, n + 1):
            c = gauss_coefficient_C(n, j, k)
            if c:
                acc += -c if j & 1 else c
        total += acc * w
    return total


@lru_cache(maxsize=32)
def _signed_subset_weights(n: int) -> tuple[int, ...]:
    # A[k] = sum_j (-1)^j C(n,j,k), with A[0] = 1 for the empty subset.
    top = comb(n + 1, 2)
    out = [0] * (top + 1)
    out[0] = 1
    for j in range(1, n + 1):
        for k in range(comb(j + 1, 2), top + 1):
            c = gauss_coefficient_C(n, j, k)
            out[k] += -c if j & 1 else c
    return tuple(out)


def inv_closed_row(n: int) -> InversionTable:
    """Full row from the closed form.

    The closed form is a convolution of the signed Gaussian coefficients
    with ``w(s) = C(s+n, n)_0 - C(s+n-1, n)_0``, so the row is one
    truncated product.
    """
    if n < 1:
        raise DomainError(f"n={n} < 1")
    top = max_inversions(n)
    w = UniPoly(
        restricted_binomial(s + n, n) - restricted_binomial(s + n - 1, n) for s in range(top + 1)
    )
    row = poly_mul_truncated(UniPoly(_signed_subset_weights(n)), w, top)
    return InversionTable(n, tuple(row[t] for t in range(top + 1)))


def pentagonal(j: int) -> int:
    """``u_j = j(3j - 1)/2``."""
    return j * (3 * j - 1) // 2


def inv_pentagonal(n: int, t: int) -> int:
    """I_n(t) for ``t <= n`` by the pentagonal-number alternating sums

        C(n+t-1, t) + sum_{j>=1} (-1)^j [C(n+t-u_j-j-1, t-u_j-j) + C(n+t-u_j-1, t-u_j)]
    """
    if n < 1:
        raise DomainError(f"n={n} < 1")
    if not 0 <= t <= n:
        raise DomainError(f"pentagonal formula holds only for 0 <= t <= n, got t={t}, n={n}")
    total = restricted_binomial(n + t - 1, t)
    j = 1
    while pentagonal(j) <= t:
        u = pentagonal(j)
        sign = -1 if j & 1 else 1
        total += sign * (
            restricted_binomial(n + t - u - j - 1, t - u - j)
            + restricted_binomial(n + t - u - 1, t - u)
        )
        j += 1
    return total


def standard_monomial_count_L(n: int, t: int) -> int:
    """``#{a in L_n : sum(a) <= t}`` where ``0 <= a_i <= i-1``.

    Direct DP over the bounds; independent of the inversion routes.
    """
    if t < 0:
        return 0
    if n <= 0:
        return 1
    ways = [1] + [0] * t
    for i in range(1, n + 1):
        b = i - 1
        pre = [0, *accumulate(ways)]
        ways = [pre[s + 1] - pre[max(0, s - b)] for s in range(t + 1)]
    return sum(ways)
