from itertools import combinations
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mahonia.errors import DomainError
from mahonia.polycore import BiPoly, UniPoly, bipoly_coeff, evaluate
from mahonia.qanalog import (
    cauchy_product,
    cauchy_sum,
    gauss_coefficient_C,
    gaussian_binomial,
    q_factorial,
    subset_sum_count,
)


def test_q_factorial():
    assert q_factorial(0) == UniPoly([1])
    assert q_factorial(1) == UniPoly([1])
    assert q_factorial(3) == UniPoly([1, 2, 2, 1])
    assert evaluate(q_factorial(4), 1) == 24


@pytest.mark.parametrize("method", ["pascal", "division"])
def test_gaussian_examples(method):
    assert gaussian_binomial(5, 0, method) == UniPoly([1])
    assert gaussian_binomial(2, 1, method) == UniPoly([1, 1])
    assert gaussian_binomial(4, 2, method) == UniPoly([1, 1, 2, 1, 1])


def test_gaussian_domain():
    with pytest.raises(DomainError):
        gaussian_binomial(3, 4)
    with pytest.raises(DomainError):
        gaussian_binomial(3, 4, "division")


@pytest.mark.parametrize("n", range(0, 13))
def test_division_matches_pascal(n):
    for m in range(n + 1):
        assert gaussian_binomial(n, m, "division") == gaussian_binomial(n, m)


@given(st.integers(0, 30).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))))
def test_gaussian_invariants(nm):
    n, m = nm
    g = gaussian_binomial(n, m)
    assert g == gaussian_binomial(n, n - m)
    assert g.degree == m * (n - m)
    assert all(c > 0 for c in g.coeffs)
    assert g.coeffs == g.coeffs[::-1]
    assert evaluate(g, 1) == comb(n, m)


def test_subset_sum_examples():
    assert subset_sum_count(4, 2, 5) == 2
    assert subset_sum_count(6, 3, 5) == 0  # below 1+2+3
    assert subset_sum_count(7, 0, 0) == 1
    assert subset_sum_count(3, 4, 10) == 0


def test_subset_sum_against_combinations():
    for n in range(0, 8):
        for j in range(n + 1):
            for k in range(comb(n + 1, 2) + 1):
                want = sum(1 for s in combinations(range(1, n + 1), j) if sum(s) == k)
                assert subset_sum_count(n, j, k) == want


def test_subset_sum_refuses_large_n():
    with pytest.raises(DomainError):
        subset_sum_count(26, 3, 10)


def test_gauss_coefficient_C():
    assert gauss_coefficient_C(4, 2, 5) == 2
    for n in range(1, 8):
        for j in range(1, n + 1):
            assert gauss_coefficient_C(n, j, comb(j + 1, 2)) == 1
        assert gauss_coefficient_C(n, n, comb(n + 1, 2)) == 1
    # out of range is 0 by convention
    assert gauss_coefficient_C(4, 2, 2) == 0
    assert gauss_coefficient_C(4, 5, 15) == 0
    assert gauss_coefficient_C(4, 2, 100) == 0


@pytest.mark.parametrize("n", range(1, 15))
def test_gauss_coefficient_matches_subsets(n):
    for j in range(1, n + 1):
        for k in range(1, comb(n + 1, 2) + 1):
            assert gauss_coefficient_C(n, j, k) == subset_sum_count(n, j, k)


def test_cauchy_product_examples():
    assert cauchy_product(0) == BiPoly({(0, 0): 1})
    assert cauchy_product(2) == BiPoly({(0, 0): 1, (1, 1): 1, (1, 2): 1, (2, 3): 1})
    assert bipoly_coeff(cauchy_product(4), 2, 5) == 2


@pytest.mark.parametrize("n", [0, 1, 2, 5, 9, 17])
def test_cauchy_identity(n):
    assert cauchy_product(n) == cauchy_sum(n)


def test_cauchy_coefficients_are_subset_counts():
    n = 9
    p = cauchy_product(n)
    for j in range(n + 1):
        for k in range(comb(n + 1, 2) + 1):
            assert bipoly_coeff(p, j, k) == subset_sum_count(n, j, k)


def test_cached_rows_under_threads():
    from concurrent.futures import ThreadPoolExecutor

    from mahonia.qanalog import gaussian_row

    gaussian_row.cache_clear()
    with ThreadPoolExecutor(8) as ex:
        rows = list(ex.map(gaussian_row, [22] * 16))
    assert all(r == rows[0] for r in rows)
    assert [evaluate(g, 1) for g in rows[0]] == [comb(22, m) for m in range(23)]
