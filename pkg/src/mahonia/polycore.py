"""Dense univariate and sparse bivariate polynomials over the integers.

Coefficients are Python ints, so nothing overflows.  Values are immutable;
every operation returns a new polynomial in canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from operator import add, sub
from typing import Iterable, Mapping

from mahonia.errors import DomainError


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class UniPoly:
    """Dense polynomial ``sum(coeffs[k] * q**k)``.

    The zero polynomial is the empty tuple, so equality is structural.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def constant(cls, c: int) -> UniPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> UniPoly:
        return cls((0,) * k + (c,))

    @classmethod
    def geometric(cls, m: int) -> UniPoly:
        """``1 + q + ... + q**(m-1)``; zero for ``m <= 0``."""
        return cls((1,) * max(m, 0))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return coeff(self, k)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __call__(self, x: int) -> int:
        return evaluate(self, x)

    def __add__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return poly_sub(self, other)

    def __rsub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return poly_sub(other, self)

    def __mul__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return poly_pow(self, e)

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if mono and c == 1:
                parts.append(mono)
            elif mono and c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}{'*' if mono else ''}{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _lift(x) -> UniPoly:
    if isinstance(x, UniPoly):
        return x
    if isinstance(x, int):
        return UniPoly((x,))
    return NotImplemented


def coeff(p: UniPoly, k: int) -> int:
    """Coefficient of ``q**k``; 0 outside ``0..deg``."""
    if 0 <= k < len(p.coeffs):
        return p.coeffs[k]
    return 0


def evaluate(p: UniPoly, x: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_add(a: UniPoly, b: UniPoly) -> UniPoly:
    x, y = a.coeffs, b.coeffs
    if len(x) < len(y):
        x, y = y, x
    return UniPoly(tuple(map(add, x, y)) + x[len(y):])


def poly_sub(a: UniPoly, b: UniPoly) -> UniPoly:
    x, y = list(a.coeffs), b.coeffs
    x.extend([0] * (len(y) - len(x)))
    x[: len(y)] = map(sub, x, y)
    return UniPoly(x)


def _schoolbook(x: tuple[int, ...], y: tuple[int, ...], width: int) -> list[int]:
    # Loop over the shorter operand; each pass is one shifted slice update.
    if len(x) < len(y):
        x, y = y, x
    out = [0] * width
    for s, c in enumerate(y):
        if c == 0 or s >= width:
            continue
        seg = x if s + len(x) <= width else x[: width - s]
        end = s + len(seg)
        if c == 1:
            out[s:end] = map(add, islice(out, s, end), seg)
        else:
            out[s:end] = map(add, islice(out, s, end), (c * v for v in seg))
    return out


def poly_mul(a: UniPoly, b: UniPoly) -> UniPoly:
    if not a.coeffs or not b.coeffs:
        return UniPoly()
    return UniPoly(_schoolbook(a.coeffs, b.coeffs, len(a.coeffs) + len(b.coeffs) - 1))


def poly_mul_truncated(a: UniPoly, b: UniPoly, max_deg: int) -> UniPoly:
    """``poly_mul(a, b)`` with every term above ``max_deg`` dropped."""
    if not a.coeffs or not b.coeffs or max_deg < 0:
        return UniPoly()
    width = min(len(a.coeffs) + len(b.coeffs) - 1, max_deg + 1)
    xa, xb = a.coeffs[:width], b.coeffs[:width]
    return UniPoly(_schoolbook(xa, xb, width))


def poly_pow(p: UniPoly, e: int) -> UniPoly:
    if e < 0:
        raise DomainError("negative exponent")
    result = UniPoly((1,))
    base = p
    while e:
        if e & 1:
            result = poly_mul(result, base)
        e >>= 1
        if e:
            base = poly_mul(base, base)
    return result


def poly_divmod(a: UniPoly, b: UniPoly) -> tuple[UniPoly, UniPoly]:
    """Long division over the integers.

    Raises DomainError if ``b`` is zero or a quotient coefficient would
    not be an integer.
    """
    if not b.coeffs:
        raise DomainError("division by the zero polynomial")
    r = list(a.coeffs)
    lb = b.coeffs[-1]
    db = len(b.coeffs) - 1
    if len(r) <= db:
        return UniPoly(), a
    quot = [0] * (len(r) - db)
    for i in range(len(r) - 1 - db, -1, -1):
        top = r[i + db]
        if top == 0:
            continue
        qc, rem = divmod(top, lb)
        if rem:
            raise DomainError("inexact integer division of leading coefficients")
        quot[i] = qc
        for j, bc in enumerate(b.coeffs):
            if bc:
                r[i + j] -= qc * bc
    return UniPoly(quot), UniPoly(r)


class BiPoly:
    """Sparse polynomial in ``(t, q)`` keyed by ``(t_exp, q_exp)``.

    Zero coefficients are never stored.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self._terms = {k: int(c) for k, c in (terms or {}).items() if c}

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: BiPoly) -> BiPoly:
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return BiPoly(out)

    def __mul__(self, other: BiPoly) -> BiPoly:
        return bipoly_mul(self, other)

    def __len__(self):
        return len(self._terms)

    def __repr__(self):
        return f"BiPoly({dict(sorted(self._terms.items()))})"


def bipoly_mul(a: BiPoly, b: BiPoly) -> BiPoly:
    out: dict[tuple[int, int], int] = {}
    for (ta, qa), ca in a.items():
        for (tb, qb), cb in b.items():
            key = (ta + tb, qa + qb)
            out[key] = out.get(key, 0) + ca * cb
    return BiPoly(out)


def bipoly_coeff(p: BiPoly, tj: int, qk: int) -> int:
    """Coefficient of ``t**tj * q**qk``; 0 when absent."""
    return p._terms.get((tj, qk), 0)
