"""Hilbert functions of complete intersections and Groebner-basis witnesses.

Nothing here computes a Groebner basis or a resolution.  The Hilbert
function is the alternating subset sum over generator degrees

    h(t) = sum_{J subset [n]} (-1)^|J| C(t - sum_{i in J} d_i + n, n)_0

and the known reduced bases are checked by evaluating them on points.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations, product
from math import comb, factorial, prod
from typing import Sequence

from mahonia.errors import DomainError, check_budget

ORBIT_MAX_N = 8


def restricted_binomial(n: int, k: int) -> int:
    """``C(n, k)`` when ``0 <= k <= n``, else 0 (negative arguments included)."""
    if k < 0 or n < k:
        return 0
    return comb(n, k)


@dataclass(frozen=True)
class DegreeSequence:
    degrees: tuple[int, ...]

    def __post_init__(self):
        degs = tuple(int(d) for d in self.degrees)
        if not degs:
            raise DomainError("degree sequence must be nonempty")
        if any(d < 1 for d in degs):
            raise DomainError(f"generator degrees must be >= 1, got {degs}")
        object.__setattr__(self, "degrees", degs)

    def __len__(self):
        return len(self.degrees)

    @classmethod
    def box(cls, n: int, d: int) -> DegreeSequence:
        return cls((d,) * n)

    @classmethod
    def orbit(cls, n: int) -> DegreeSequence:
        return cls(tuple(range(1, n + 1)))


def _as_degrees(degrees) -> DegreeSequence:
    return degrees if isinstance(degrees, DegreeSequence) else DegreeSequence(tuple(degrees))


def _koszul_grouped(degs: tuple[int, ...], t: int) -> int:
    # Subsets grouped by how many generators of each distinct degree they use.
    n = len(degs)
    mult = sorted(Counter(degs).items())
    total = 0
    for picks in product(*(range(m + 1) for _, m in mult)):
        weight = prod(comb(m, c) for (_, m), c in zip(mult, picks))
        shift = sum(d * c for (d, _), c in zip(mult, picks))
        sign = -1 if sum(picks) & 1 else 1
        total += sign * weight * restricted_binomial(t - shift + n, n)
    return total


def degree_sum_histogram(degs: Sequence[int]) -> dict[tuple[int, int], int]:
    """``{(j, k): #J}`` over subsets J with ``|J| = j`` and degree sum k.

    For degrees ``1..n`` the values are the subset-sum numbers D(n, j, k).
    """
    hist = {(0, 0): 1}
    for d in degs:
        nxt = dict(hist)
        for (j, k), c in hist.items():
            key = (j + 1, k + d)
            nxt[key] = nxt.get(key, 0) + c
        hist = nxt
    return hist


def _koszul_histogram(degs: tuple[int, ...], t: int) -> int:
    n = len(degs)
    total = 0
    for (j, k), c in degree_sum_histogram(degs).items():
        if k <= t:
            total += (-1) ** j * c * restricted_binomial(t - k + n, n)
    return total


def koszul_hilbert(degrees, t: int, method: str = "grouped") -> int:
    """Hilbert function at ``t`` of the complete intersection with these degrees.

    ``method`` is ``"grouped"`` (binomial weights per distinct degree) or
    ``"histogram"`` (signed counts of subset degree sums).
    """
    degs = _as_degrees(degrees).degrees
    if t < 0:
        return 0
    if method == "grouped":
        return _koszul_grouped(degs, t)
    if method == "histogram":
        return _koszul_histogram(degs, t)
    raise ValueError(f"unknown method {method!r}")


def elementary_symmetric_at_init(n: int, i: int) -> int:
    """``e_i(1, 2, ..., n)``; 0 for ``i > n``."""
    if i < 0 or i > n:
        return 0
    # e_i(1..m) = e_i(1..m-1) + m * e_{i-1}(1..m-1)
    e = [1] + [0] * i
    for m in range(1, n + 1):
        for r in range(min(i, m), 0, -1):
            e[r] += m * e[r - 1]
    return e[i]


def complete_symmetric_eval(values: Sequence[int], i: int) -> int:
    """``h_i`` evaluated at ``values`` by adding one variable at a time."""
    if i < 0:
        return 0
    h = [1] + [0] * i
    for x in values:
        # h_r(x_1..x_m) = h_r(x_1..x_{m-1}) + x_m h_{r-1}(x_1..x_m)
        for r in range(1, i + 1):
            h[r] += x * h[r - 1]
    return h[i]


def groebner_f_eval(n: int, k: int, point: Sequence[int]) -> int:
    """Value at ``point`` of

        f_k = sum_{i=0..k} (-1)^i h_{k-i}(x_k, ..., x_n) e_i(1, ..., n),

    the k-th element of the reduced Groebner basis for the S_n orbit of
    ``(1, ..., n)``.
    """
    if not 1 <= k <= n:
        raise DomainError(f"f_k needs 1 <= k <= n, got k={k}, n={n}")
    if len(point) != n:
        raise DomainError(f"point has length {len(point)}, expected {n}")
    suffix = point[k - 1:]
    return sum(
        (-1) ** i * complete_symmetric_eval(suffix, k - i) * elementary_symmetric_at_init(n, i)
        for i in range(k + 1)
    )


def groebner_f_values(n: int, point: Sequence[int], sigma: Sequence[int] | None = None) -> list[int]:
    """``[f_1(point), ..., f_n(point)]`` in one right-to-left sweep.

    Same values as ``groebner_f_eval`` for each k; shares the complete
    symmetric table across suffixes.
    """
    if sigma is None:
        sigma = [elementary_symmetric_at_init(n, i) for i in range(n + 1)]
    h = [1] + [0] * n
    out = [0] * n
    for k in range(n, 0, -1):
        x = point[k - 1]
        for r in range(1, n + 1):
            h[r] += x * h[r - 1]
        out[k - 1] = sum((-1) ** i * h[k - i] * sigma[i] for i in range(k + 1))
    return out


@dataclass(frozen=True)
class OrbitReport:
    n: int
    points: int
    evaluations: int
    failures: tuple[tuple[int, tuple[int, ...], int], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_orbit_vanishing(n: int) -> OrbitReport:
    """Evaluate every ``f_k`` on every permutation of ``(1, ..., n)``.

    Failures are recorded as ``(k, point, value)``.
    """
    if n < 1:
        raise DomainError(f"n={n} < 1")
    check_budget("verify_orbit_vanishing", factorial(n), factorial(ORBIT_MAX_N))
    sigma = [elementary_symmetric_at_init(n, i) for i in range(n + 1)]
    failures = []
    points = 0
    for perm in permutations(range(1, n + 1)):
        points += 1
        for k, v in enumerate(groebner_f_values(n, perm, sigma), start=1):
            if v:
                failures.append((k, perm, v))
    return OrbitReport(n, points, points * n, tuple(failures))


def dbox_groebner_eval(n: int, d: int, i: int, point: Sequence[int]) -> int:
    """``prod_{j=1..d} (point_i - j)``; zero exactly when ``point_i`` is in ``[d]``."""
    if not 1 <= i <= n:
        raise DomainError(f"generator index i={i} outside 1..{n}")
    x = point[i - 1]
    return prod(x - j for j in range(1, d + 1))
