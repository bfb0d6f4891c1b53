"""Rank generating functions of divisor lattices and of fixed-point-free involutions."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

from mahonia.errors import DomainError, check_budget
from mahonia.polycore import UniPoly, poly_mul

DIVISOR_BRUTE_MAX = 10**6
INVOLUTION_MAX_N = 7


@dataclass(frozen=True)
class Factorization:
    """``prod p**e`` with primes strictly increasing and exponents >= 1."""

    prime_powers: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pp = tuple((int(p), int(e)) for p, e in self.prime_powers)
        for (p, e) in pp:
            if p < 2 or e < 1:
                raise DomainError(f"bad prime power {p}^{e}")
        if any(a[0] >= b[0] for a, b in zip(pp, pp[1:])):
            raise DomainError("primes must be strictly increasing")
        object.__setattr__(self, "prime_powers", pp)

    @property
    def value(self) -> int:
        out = 1
        for p, e in self.prime_powers:
            out *= p**e
        return out

    @classmethod
    def from_exponents(cls, exponents: Sequence[int]) -> Factorization:
        """``p_1**e_1 * p_2**e_2 * ...`` over the first primes; zero exponents skipped."""
        ps = first_primes(len(exponents))
        return cls(tuple((p, e) for p, e in zip(ps, exponents) if e))


def first_primes(k: int) -> list[int]:
    out: list[int] = []
    c = 2
    while len(out) < k:
        if all(c % p for p in out if p * p <= c):
            out.append(c)
        c += 1
    return out


def factorize(N: int) -> Factorization:
    """Trial division."""
    if N < 1:
        raise DomainError(f"cannot factor N={N}")
    pp = []
    p = 2
    while p * p <= N:
        if N % p == 0:
            e = 0
            while N % p == 0:
                N //= p
                e += 1
            pp.append((p, e))
        p += 1 if p == 2 else 2
    if N > 1:
        pp.append((N, 1))
    return Factorization(tuple(pp))


def divisor_rank_genfun(f: Factorization) -> UniPoly:
    """``prod (1 + q + ... + q**e)`` over the prime powers ``p**e`` of ``f``."""
    out = UniPoly((1,))
    for _, e in f.prime_powers:
        out = poly_mul(out, UniPoly.geometric(e + 1))
    return out


def _big_omega(m: int) -> int:
    count = 0
    p = 2
    while p * p <= m:
        while m % p == 0:
            m //= p
            count += 1
        p += 1
    return count + (m > 1)


def brute_divisor_rank_genfun(N: int) -> UniPoly:
    """Histogram of divisors of ``N`` by number of prime factors with multiplicity."""
    if N < 1:
        raise DomainError(f"N={N} must be positive")
    check_budget("brute_divisor_rank_genfun", N, DIVISOR_BRUTE_MAX)
    divisors = set()
    i = 1
    while i * i <= N:
        if N % i == 0:
            divisors.update((i, N // i))
        i += 1
    hist = Counter(_big_omega(x) for x in divisors)
    return UniPoly([hist[r] for r in range(max(hist) + 1)])


@dataclass(frozen=True)
class Involution:
    """Fixed-point-free involution of ``[2n]`` as arcs ``(a, b)``, ``a < b``,
    sorted by initial point.
    """

    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        arcs = tuple((int(a), int(b)) for a, b in self.arcs)
        if any(a >= b for a, b in arcs):
            raise DomainError("each arc needs a < b")
        if [a for a, _ in arcs] != sorted(a for a, _ in arcs):
            raise DomainError("arcs must be ordered by initial point")
        points = sorted(x for arc in arcs for x in arc)
        if points != list(range(1, 2 * len(arcs) + 1)):
            raise DomainError(f"arcs do not partition [1..{2 * len(arcs)}]")
        object.__setattr__(self, "arcs", arcs)

    @classmethod
    def from_pairs(cls, pairs) -> Involution:
        return cls(tuple(sorted((min(p), max(p)) for p in pairs)))


def span(arc: tuple[int, int]) -> int:
    return arc[1] - arc[0] - 1


def crosses(x: tuple[int, int], y: tuple[int, int]) -> bool:
    (i, j), (k, l) = x, y
    return i < k < j < l or k < i < l < j


def crossing_number(inv: Involution) -> int:
    arcs = inv.arcs
    return sum(
        1 for a in range(len(arcs)) for b in range(a + 1, len(arcs)) if crosses(arcs[a], arcs[b])
    )


def involution_weight(inv: Involution) -> int:
    """Total arc span minus crossing number."""
    return sum(span(a) for a in inv.arcs) - crossing_number(inv)


def iter_involutions(n: int) -> Iterator[Involution]:
    """All fixed-point-free involutions of ``[2n]`` in standard form."""

    def rec(free: list[int]):
        if not free:
            yield ()
            return
        a = free[0]
        for idx in range(1, len(free)):
            b = free[idx]
            rest = free[1:idx] + free[idx + 1:]
            for tail in rec(rest):
                yield ((a, b),) + tail

    for arcs in rec(list(range(1, 2 * n + 1))):
        yield Involution(arcs)


def double_factorial_odd(n: int) -> int:
    """``(2n - 1)!!``."""
    out = 1
    for i in range(1, 2 * n, 2):
        out *= i
    return out


def involution_rank_genfun(n: int) -> UniPoly:
    """Weight histogram over F(2n) as a polynomial in q."""
    if n < 0:
        raise DomainError(f"n={n} < 0")
    check_budget("involution_rank_genfun", double_factorial_odd(n), double_factorial_odd(INVOLUTION_MAX_N))
    hist = Counter(involution_weight(inv) for inv in iter_involutions(n))
    return UniPoly([hist[r] for r in range(max(hist) + 1)])


def odd_q_integer_product(n: int) -> UniPoly:
    """``[1]_q [3]_q ... [2n-1]_q``."""
    out = UniPoly((1,))
    for i in range(1, n + 1):
        out = poly_mul(out, UniPoly.geometric(2 * i - 1))
    return out
