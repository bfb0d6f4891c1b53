from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mahonia.compositions import comp_genfun
from mahonia.errors import DomainError, ResourceGuardError
from mahonia.inversions import inv_genfun
from mahonia.polycore import UniPoly, evaluate
from mahonia.posets import (
    Factorization,
    Involution,
    brute_divisor_rank_genfun,
    crossing_number,
    divisor_rank_genfun,
    double_factorial_odd,
    factorize,
    first_primes,
    involution_rank_genfun,
    involution_weight,
    iter_involutions,
    odd_q_integer_product,
)


def test_divisor_examples():
    assert divisor_rank_genfun(Factorization(((2, 2), (3, 1)))) == UniPoly([1, 2, 2, 1])
    assert divisor_rank_genfun(Factorization(((7, 1),))) == UniPoly([1, 1])
    assert brute_divisor_rank_genfun(12) == UniPoly([1, 2, 2, 1])
    assert brute_divisor_rank_genfun(1) == UniPoly([1])
    assert brute_divisor_rank_genfun(30) == UniPoly([1, 3, 3, 1])
    with pytest.raises(DomainError):
        brute_divisor_rank_genfun(0)


def test_factorization_validation():
    with pytest.raises(DomainError):
        Factorization(((3, 1), (2, 1)))
    with pytest.raises(DomainError):
        Factorization(((2, 0),))
    assert factorize(360).prime_powers == ((2, 3), (3, 2), (5, 1))
    assert factorize(1).prime_powers == ()
    assert first_primes(6) == [2, 3, 5, 7, 11, 13]


def test_divisor_factoring_matches_enumeration():
    for N in range(1, 10_001):
        assert divisor_rank_genfun(factorize(N)) == brute_divisor_rank_genfun(N), N


def test_divisor_guard():
    with pytest.raises(ResourceGuardError):
        brute_divisor_rank_genfun(10**6 + 1)


@pytest.mark.parametrize("n", range(1, 9))
def test_divisor_lattice_counts_inversions(n):
    f = Factorization.from_exponents(list(range(1, n)))
    assert divisor_rank_genfun(f) == inv_genfun(n).as_poly()


def test_divisor_lattice_counts_compositions():
    for n in range(1, 7):
        for d in range(1, 5):
            f = Factorization.from_exponents([d - 1] * n)
            assert divisor_rank_genfun(f) == comp_genfun(n, d).as_poly()


def test_involution_validation():
    with pytest.raises(DomainError):
        Involution(((1, 2), (2, 3)))
    with pytest.raises(DomainError):
        Involution(((3, 4), (1, 2)))
    with pytest.raises(DomainError):
        Involution(((2, 1), (3, 4)))
    assert Involution.from_pairs([(4, 2), (3, 1)]).arcs == ((1, 3), (2, 4))


def test_weight_examples():
    assert involution_weight(Involution(((1, 2), (3, 4)))) == 0
    a = Involution(((1, 3), (2, 4)))
    assert crossing_number(a) == 1 and involution_weight(a) == 1
    b = Involution(((1, 4), (2, 3)))
    assert crossing_number(b) == 0 and involution_weight(b) == 2


def test_involution_rank_examples():
    assert involution_rank_genfun(1) == UniPoly([1])
    assert involution_rank_genfun(2) == UniPoly([1, 1, 1])


@pytest.mark.parametrize("n", range(0, 7))
def test_involution_rank_product(n):
    g = involution_rank_genfun(n)
    assert g == odd_q_integer_product(n)
    assert evaluate(g, 1) == double_factorial_odd(n) == sum(1 for _ in iter_involutions(n))
    if n:
        assert g.degree == 2 * comb(n, 2)


def test_involution_guard():
    with pytest.raises(ResourceGuardError):
        involution_rank_genfun(8)


@given(st.lists(st.integers(1, 6), min_size=0, max_size=6))
def test_rank_polys_nonnegative_and_count(exps):
    f = Factorization.from_exponents(exps)
    g = divisor_rank_genfun(f)
    assert all(c >= 0 for c in g.coeffs)
    num_divisors = 1
    for e in exps:
        num_divisors *= e + 1
    assert evaluate(g, 1) == num_divisors
