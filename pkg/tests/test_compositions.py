from itertools import product
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mahonia.compositions import (
    comp_bruteforce,
    comp_closed,
    comp_closed_row,
    comp_genfun,
    comp_prefix_closed,
    comp_recurrence,
    standard_monomial_count_M,
)
from mahonia.errors import DomainError, ResourceGuardError
from mahonia.polycore import evaluate

# Frozen from an independent itertools.product enumeration.
H_5_4 = (1, 5, 15, 35, 65, 101, 135, 155, 155, 135, 101, 65, 35, 15, 5, 1)


def test_bruteforce_examples():
    assert comp_bruteforce(1, 3).values == (1, 1, 1)
    assert comp_bruteforce(2, 3)[2] == 3
    assert comp_bruteforce(2, 2).values == (1, 2, 1)
    assert comp_bruteforce(5, 4).values == H_5_4


def test_bruteforce_guard():
    with pytest.raises(ResourceGuardError):
        comp_bruteforce(8, 10)


def test_recurrence_examples():
    assert comp_recurrence(4, 3, 0) == 1
    assert comp_recurrence(2, 3, 2) == 3
    assert comp_recurrence(3, 3, -1) == 0
    assert comp_recurrence(3, 3, 7) == 0
    assert all(comp_recurrence(1, 6, t) == 1 for t in range(6))


def test_genfun_examples():
    assert comp_genfun(1, 4).values == (1, 1, 1, 1)
    assert comp_genfun(2, 3).values == (1, 2, 3, 2, 1)
    for n, d in [(3, 2), (4, 5), (7, 3)]:
        assert evaluate(comp_genfun(n, d).as_poly(), 1) == d**n


def test_prefix_closed_examples():
    assert comp_prefix_closed(3, 4, 0) == 1
    assert comp_prefix_closed(2, 3, 2) == 6
    for n, d in [(2, 3), (4, 4), (6, 2)]:
        assert comp_prefix_closed(n, d, n * (d - 1)) == d**n


def test_closed_examples():
    assert comp_closed(2, 3, 2) == 3
    assert comp_closed(6, 5, 0) == 1
    assert tuple(comp_closed(5, 4, t) for t in range(16)) == H_5_4
    assert comp_closed_row(5, 4).values == H_5_4


def test_closed_domain():
    with pytest.raises(DomainError):
        comp_closed(2, 3, 5)
    with pytest.raises(DomainError):
        comp_genfun(0, 3)


def test_standard_monomials_M():
    assert standard_monomial_count_M(4, 3, 0) == 1
    assert standard_monomial_count_M(2, 3, 2) == 6
    assert standard_monomial_count_M(5, 1, 9) == 1
    for n, d in [(3, 3), (4, 2), (2, 5)]:
        vecs = list(product(range(d), repeat=n))
        for t in range(n * (d - 1) + 2):
            assert standard_monomial_count_M(n, d, t) == sum(1 for v in vecs if sum(v) <= t)


def test_binomial_row():
    for n in range(1, 15):
        assert comp_genfun(n, 2).values == tuple(comb(n, t) for t in range(n + 1))


nd = st.tuples(st.integers(1, 9), st.integers(1, 7))


@given(nd.flatmap(lambda p: st.tuples(st.just(p), st.integers(0, p[0] * (p[1] - 1)))))
def test_symmetry_and_prefix(args):
    (n, d), t = args
    top = n * (d - 1)
    assert comp_closed(n, d, t) == comp_closed(n, d, top - t)
    running = sum(comp_closed(n, d, i) for i in range(t + 1))
    assert comp_prefix_closed(n, d, t) == running == standard_monomial_count_M(n, d, t)


@given(nd)
def test_three_fast_routes_agree(p):
    n, d = p
    g = comp_genfun(n, d).values
    assert g == tuple(comp_recurrence(n, d, t) for t in range(len(g))) == comp_closed_row(n, d).values
