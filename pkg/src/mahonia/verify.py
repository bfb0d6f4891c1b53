"""Identity suites behind ``mahonia verify``.

Each check returns the number of cases it ran and raises ``IdentityFailure``
on the first mismatch.  Every bound is capped by ``max_n``.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass
from math import comb, factorial, prod
from typing import Callable

from mahonia import compositions as C
from mahonia import hilbert as Hb
from mahonia import inversions as I
from mahonia import posets as P
from mahonia import qanalog as Q
from mahonia.polycore import evaluate

SUITES = ("inversions", "compositions", "qanalog", "hilbert", "posets")


class IdentityFailure(AssertionError):
    pass


def expect(cond, msg):
    if not cond:
        raise IdentityFailure(msg)


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    cases: int
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "OK" if self.ok else "FAIL"
        extra = f" {self.detail}" if self.detail else ""
        return f"{self.name}: {status} ({self.cases} cases){extra}"


_REGISTRY: dict[str, list[tuple[str, Callable[[int], int | tuple[int, str]]]]] = {s: [] for s in SUITES}


def check(suite, name):
    def deco(fn):
        _REGISTRY[suite].append((name, fn))
        return fn

    return deco


# inversions


@check("inversions", "four-way I_n(t) agreement")
def _inv_four_way(max_n):
    cases = 0
    for n in range(1, min(8, max_n) + 1):
        brute = I.inv_bruteforce(n).values
        rec = tuple(I.inv_recurrence(n, t) for t in range(len(brute)))
        gen = I.inv_genfun(n).values
        closed = tuple(I.inv_closed(n, t) for t in range(len(brute)))
        expect(brute == rec == gen == closed, f"n={n}: brute={brute} rec={rec} gen={gen} closed={closed}")
        cases += len(brute)
    return cases


@check("inversions", "pentagonal formula")
def _inv_pentagonal(max_n):
    cases = 0
    for n in range(1, min(8, max_n) + 1):
        row = I.inv_recurrence_row(n)
        for t in range(n + 1):
            want = row[t] if t < len(row) else 0
            got = I.inv_pentagonal(n, t)
            expect(got == want, f"n={n}, t={t}: pentagonal {got} != {want}")
            cases += 1
    return cases


@check("inversions", "symmetry of I_n")
def _inv_symmetry(max_n):
    cases = 0
    for n in range(1, min(20, max_n) + 1):
        top = I.max_inversions(n)
        for t in range(top // 2 + 1):
            a, b = I.inv_closed(n, t), I.inv_closed(n, top - t)
            expect(a == b, f"n={n}, t={t}: {a} != {b}")
            cases += 1
    return cases


@check("inversions", "prefix sums and standard monomials")
def _inv_prefix(max_n):
    cases = 0
    for n in range(1, min(12, max_n) + 1):
        running = 0
        for t in range(I.max_inversions(n) + 1):
            running += I.inv_closed(n, t)
            p = I.inv_prefix_closed(n, t)
            s = I.standard_monomial_count_L(n, t)
            expect(p == running == s, f"n={n}, t={t}: prefix={p} running={running} std={s}")
            cases += 1
    return cases


@check("inversions", "total mass n!")
def _inv_total(max_n):
    n_max = min(20, max_n)
    for n in range(1, n_max + 1):
        total = sum(I.inv_closed(n, t) for t in range(I.max_inversions(n) + 1))
        expect(total == factorial(n), f"n={n}: sum={total}")
    return n_max


# compositions


@check("compositions", "four-way H(n,d,t) agreement")
def _comp_four_way(max_n):
    cases = 0
    for n in range(1, min(7, max_n) + 1):
        for d in range(1, 6):
            brute = C.comp_bruteforce(n, d).values
            rec = tuple(C.comp_recurrence(n, d, t) for t in range(len(brute)))
            gen = C.comp_genfun(n, d).values
            closed = tuple(C.comp_closed(n, d, t) for t in range(len(brute)))
            expect(brute == rec == gen == closed, f"n={n}, d={d}: {brute} {rec} {gen} {closed}")
            cases += len(brute)
    return cases


@check("compositions", "binomial row at d=2")
def _comp_binomial(max_n):
    n_max = min(20, max_n)
    for n in range(1, n_max + 1):
        row = C.comp_genfun(n, 2).values
        expect(row == tuple(comb(n, t) for t in range(n + 1)), f"n={n}: {row}")
    return n_max


@check("compositions", "symmetry of H")
def _comp_symmetry(max_n):
    cases = 0
    for n in range(1, min(7, max_n) + 1):
        for d in range(1, 6):
            top = n * (d - 1)
            for t in range(top + 1):
                expect(C.comp_closed(n, d, t) == C.comp_closed(n, d, top - t), f"n={n}, d={d}, t={t}")
                cases += 1
    return cases


@check("compositions", "prefix sums and standard monomials")
def _comp_prefix(max_n):
    cases = 0
    for n in range(1, min(7, max_n) + 1):
        for d in range(1, 6):
            running = 0
            for t in range(n * (d - 1) + 1):
                running += C.comp_closed(n, d, t)
                p = C.comp_prefix_closed(n, d, t)
                s = C.standard_monomial_count_M(n, d, t)
                expect(p == running == s, f"n={n}, d={d}, t={t}: {p} {running} {s}")
                cases += 1
    return cases


# qanalog


@check("qanalog", "gaussian symmetry")
def _q_symmetry(max_n):
    cases = 0
    for n in range(0, min(30, max_n) + 1):
        for m in range(n + 1):
            g = Q.gaussian_binomial(n, m)
            expect(g == Q.gaussian_binomial(n, n - m), f"n={n}, m={m}")
            expect(g.coeffs == g.coeffs[::-1], f"n={n}, m={m}: coefficients not palindromic")
            expect(g.degree == m * (n - m), f"n={n}, m={m}: degree {g.degree}")
            cases += 1
    return cases


@check("qanalog", "q=1 specialization")
def _q_at_one(max_n):
    cases = 0
    for n in range(0, min(30, max_n) + 1):
        for m in range(n + 1):
            expect(evaluate(Q.gaussian_binomial(n, m), 1) == comb(n, m), f"n={n}, m={m}")
            cases += 1
    return cases


@check("qanalog", "q-factorial division")
def _q_division(max_n):
    cases = 0
    for n in range(0, min(12, max_n) + 1):
        for m in range(n + 1):
            expect(
                Q.gaussian_binomial(n, m, "division") == Q.gaussian_binomial(n, m, "pascal"),
                f"n={n}, m={m}",
            )
            cases += 1
    return cases


@check("qanalog", "cauchy identity")
def _q_cauchy(max_n):
    n_max = min(30, max_n)
    for n in range(1, n_max + 1):
        expect(Q.cauchy_product(n) == Q.cauchy_sum(n), f"n={n}")
    return n_max


@check("qanalog", "subset sums D(n,j,k) = C(n,j,k)")
def _q_subset(max_n):
    cases = 0
    for n in range(1, min(16, max_n) + 1):
        for j in range(1, n + 1):
            for k in range(1, comb(n + 1, 2) + 1):
                d = Q.subset_sum_count(n, j, k)
                c = Q.gauss_coefficient_C(n, j, k)
                expect(d == c, f"n={n}, j={j}, k={k}: D={d} C={c}")
                cases += 1
    return cases


# hilbert


@check("hilbert", "koszul sum, degrees 1..n")
def _h_orbit(max_n):
    cases = 0
    for n in range(1, min(10, max_n) + 1):
        degs = Hb.DegreeSequence.orbit(n)
        for t in range(I.max_inversions(n) + 2):
            h = Hb.koszul_hilbert(degs, t)
            s = I.standard_monomial_count_L(n, t)
            expect(h == s, f"n={n}, t={t}: koszul={h} std={s}")
            cases += 1
        expect(Hb.koszul_hilbert(degs, I.max_inversions(n) + 5) == factorial(n), f"n={n}: not n! eventually")
    return cases


@check("hilbert", "koszul sum, degrees d..d")
def _h_box(max_n):
    cases = 0
    for n in range(1, min(8, max_n) + 1):
        for d in range(1, 6):
            degs = Hb.DegreeSequence.box(n, d)
            for t in range(n * (d - 1) + 2):
                h = Hb.koszul_hilbert(degs, t)
                s = C.standard_monomial_count_M(n, d, t)
                expect(h == s, f"n={n}, d={d}, t={t}: koszul={h} std={s}")
                cases += 1
            expect(Hb.koszul_hilbert(degs, n * (d - 1) + 3) == d**n, f"n={n}, d={d}: not d^n eventually")
    return cases


@check("hilbert", "koszul internal paths agree")
def _h_paths(max_n):
    rng = random.Random(20100)
    cases = 0
    for _ in range(40):
        n = rng.randint(1, min(12, max(1, max_n)))
        degs = tuple(rng.randint(1, 6) for _ in range(n))
        span = sum(d - 1 for d in degs)
        for t in range(0, span + 2, max(1, span // 6)):
            a = Hb.koszul_hilbert(degs, t, "grouped")
            b = Hb.koszul_hilbert(degs, t, "histogram")
            expect(a == b, f"degrees={degs}, t={t}: {a} != {b}")
            cases += 1
        expect(Hb.koszul_hilbert(degs, span + 1) == prod(degs), f"degrees={degs}: not eventually constant")
    return cases


@check("hilbert", "orbit vanishing")
def _h_vanishing(max_n):
    evaluations = 0
    for n in range(1, min(8, max_n) + 1):
        rep = Hb.verify_orbit_vanishing(n)
        if not rep.ok:
            k, point, value = rep.failures[0]
            raise IdentityFailure(f"n={n}: f_{k}{point} = {value}")
        evaluations += rep.evaluations
        off = (2,) if n == 1 else (1,) * n
        expect(any(Hb.groebner_f_values(n, off)), f"n={n}: non-orbit point {off} not detected")
    m = min(8, max_n)
    return evaluations, f"[{m}! x {m} evaluations at n={m}]"


# posets


@check("posets", "divisor rank function by factoring")
def _p_divisors(max_n):
    top = 10_000 if max_n >= 8 else 1_000
    for N in range(1, top + 1):
        a = P.divisor_rank_genfun(P.factorize(N))
        b = P.brute_divisor_rank_genfun(N)
        expect(a == b, f"N={N}: {a} != {b}")
    return top


@check("posets", "divisor lattice vs I_n")
def _p_inv(max_n):
    n_max = min(8, max_n)
    for n in range(1, n_max + 1):
        f = P.Factorization.from_exponents(list(range(1, n)))
        expect(P.divisor_rank_genfun(f) == I.inv_genfun(n).as_poly(), f"n={n}")
    return n_max


@check("posets", "divisor lattice vs H(n,d,.)")
def _p_comp(max_n):
    cases = 0
    for n in range(1, min(6, max_n) + 1):
        for d in range(1, 5):
            f = P.Factorization.from_exponents([d - 1] * n)
            expect(P.divisor_rank_genfun(f) == C.comp_genfun(n, d).as_poly(), f"n={n}, d={d}")
            cases += 1
    return cases


@check("posets", "involution weights vs odd q-integers")
def _p_invol(max_n):
    n_max = min(6, max_n)
    for n in range(1, n_max + 1):
        g = P.involution_rank_genfun(n)
        expect(g == P.odd_q_integer_product(n), f"n={n}: {g}")
        expect(g.degree == 2 * comb(n, 2), f"n={n}: degree {g.degree}")
        expect(evaluate(g, 1) == P.double_factorial_odd(n), f"n={n}: total {evaluate(g, 1)}")
        expect(all(c >= 0 for c in g.coeffs), f"n={n}: negative coefficient")
    return n_max


def run_suites(suites, max_n: int, stop_on_failure: bool = True) -> list[CheckResult]:
    results = []
    for suite in suites:
        for name, fn in _REGISTRY[suite]:
            try:
                out = fn(max_n)
            except IdentityFailure as exc:
                results.append(CheckResult(suite, name, 0, False, str(exc)))
                if stop_on_failure:
                    return results
                continue
            cases, detail = out if isinstance(out, tuple) else (out, "")
            results.append(CheckResult(suite, name, cases, True, detail))
    return results


def report_dict(suites, max_n, results) -> dict:
    return {
        "suites": list(suites),
        "max_n": max_n,
        "ok": all(r.ok for r in results),
        "checks": [asdict(r) for r in results],
    }
