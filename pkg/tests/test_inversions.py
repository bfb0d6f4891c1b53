from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mahonia.errors import DomainError, ResourceGuardError
from mahonia.inversions import (
    ExponentVector,
    count_inversions,
    inv_bruteforce,
    inv_closed,
    inv_closed_row,
    inv_genfun,
    inv_pentagonal,
    inv_prefix_closed,
    inv_recurrence,
    inv_recurrence_row,
    max_inversions,
    pentagonal,
    standard_monomial_count_L,
)
from mahonia.polycore import evaluate

# Frozen from an independent itertools.permutations enumeration.
ENUMERATED = {
    1: (1,),
    2: (1, 1),
    3: (1, 2, 2, 1),
    4: (1, 3, 5, 6, 5, 3, 1),
    5: (1, 4, 9, 15, 20, 22, 20, 15, 9, 4, 1),
    6: (1, 5, 14, 29, 49, 71, 90, 101, 101, 90, 71, 49, 29, 14, 5, 1),
}


def test_count_inversions():
    assert count_inversions((3, 1, 4, 2)) == 3
    assert count_inversions(()) == 0


@pytest.mark.parametrize("n", sorted(ENUMERATED))
def test_bruteforce_matches_frozen(n):
    assert inv_bruteforce(n).values == ENUMERATED[n]


def test_bruteforce_guard(monkeypatch):
    with pytest.raises(ResourceGuardError):
        inv_bruteforce(11)
    monkeypatch.setenv("MAHONIA_MAX_BRUTE", "10")
    with pytest.raises(ResourceGuardError):
        inv_bruteforce(11)


def test_recurrence_examples():
    for n in range(1, 10):
        assert inv_recurrence(n, 0) == 1
    assert inv_recurrence(3, 1) == 2
    assert tuple(inv_recurrence(6, t) for t in range(16)) == ENUMERATED[6]
    assert inv_recurrence(4, 7) == 0
    assert inv_recurrence(4, -1) == 0
    assert inv_recurrence(0, 0) == 1 and inv_recurrence(0, 1) == 0


def test_genfun_examples():
    assert inv_genfun(2).values == (1, 1)
    assert inv_genfun(3).values == (1, 2, 2, 1)
    for n in range(1, 12):
        assert evaluate(inv_genfun(n).as_poly(), 1) == factorial(n)


def test_prefix_closed_examples():
    assert inv_prefix_closed(3, 1) == 3
    assert inv_prefix_closed(4, 2) == 9
    for n in range(1, 10):
        assert inv_prefix_closed(n, max_inversions(n)) == factorial(n)


def test_closed_examples():
    assert inv_closed(5, 0) == 1
    assert inv_closed(3, 2) == 2
    assert tuple(inv_closed(8, t) for t in range(29)) == inv_recurrence_row(8)


def test_closed_domain():
    with pytest.raises(DomainError):
        inv_closed(4, 7)
    with pytest.raises(DomainError):
        inv_prefix_closed(4, -1)


@pytest.mark.parametrize("n", range(1, 9))
def test_closed_is_difference_of_prefixes(n):
    prev = 0
    for t in range(max_inversions(n) + 1):
        p = inv_prefix_closed(n, t)
        assert inv_closed(n, t) == p - prev
        prev = p


@pytest.mark.parametrize("n", [1, 2, 5, 9, 14, 25])
def test_closed_row_matches_recurrence(n):
    assert inv_closed_row(n).values == inv_recurrence_row(n)


def test_pentagonal_numbers():
    assert [pentagonal(j) for j in (1, 2, 3)] == [1, 5, 12]


def test_pentagonal_examples():
    assert inv_pentagonal(4, 2) == 5
    assert inv_pentagonal(5, 5) == 22
    with pytest.raises(DomainError):
        inv_pentagonal(3, 4)


@pytest.mark.parametrize("n", range(1, 16))
def test_pentagonal_whole_range(n):
    for t in range(n + 1):
        assert inv_pentagonal(n, t) == inv_recurrence(n, t)


def test_standard_monomials_L():
    assert standard_monomial_count_L(5, 0) == 1
    assert standard_monomial_count_L(3, 1) == 3
    for n in range(1, 8):
        assert standard_monomial_count_L(n, max_inversions(n)) == factorial(n)


def test_standard_monomials_L_by_listing():
    from itertools import product

    for n in range(1, 6):
        box = list(product(*(range(i) for i in range(1, n + 1))))
        for t in range(max_inversions(n) + 1):
            assert standard_monomial_count_L(n, t) == sum(1 for a in box if sum(a) <= t)


def test_exponent_vector_bounds():
    v = ExponentVector.staircase((0, 1, 2))
    assert v.total == 3
    with pytest.raises(DomainError):
        ExponentVector.staircase((1, 0))
    with pytest.raises(DomainError):
        ExponentVector.box((0, 3), 3)


@given(st.integers(1, 20).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, max_inversions(n)))))
def test_symmetry_closed(nt):
    n, t = nt
    assert inv_closed(n, t) == inv_closed(n, max_inversions(n) - t)


@given(st.integers(1, 12).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, max_inversions(n)))))
def test_prefix_consistency(nt):
    n, t = nt
    running = sum(inv_closed(n, i) for i in range(t + 1))
    assert inv_prefix_closed(n, t) == running == standard_monomial_count_L(n, t)


def test_large_values_exact():
    row = inv_recurrence_row(30)
    assert sum(row) == factorial(30)
    assert inv_closed(30, 200) == row[200]
    assert row[1] == 29 and row[2] == comb(30, 2) - 1
