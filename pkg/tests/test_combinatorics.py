from itertools import product

import pytest
from hypothesis import given, strategies as st

from liedims.combinatorics import (
    binomial,
    kn_upper_bound,
    relation_image_upper_bound,
    witt_dimension,
    zn_n_lower_bound,
    zn_nprime_formula,
)

from bruteforce import brute_h1_indices, brute_lyndon


@pytest.mark.parametrize("n,k,expected", [(4, 2, 6), (0, 0, 1), (7, 4, 35), (3, 5, 0)])
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


def test_pascal():
    for n in range(1, 201):
        for k in range(1, n):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


@pytest.mark.parametrize("k,n,expected", [(4, 2, 6), (4, 3, 20), (2, 6, 9)])
def test_witt_examples(k, n, expected):
    assert len(brute_lyndon(k, n)) == expected
    assert witt_dimension(k, n) == expected


@pytest.mark.parametrize("k", range(2, 9))
def test_witt_counts_lyndon_words(k):
    top = 10 if k <= 3 else (6 if k <= 5 else 5)
    for n in range(1, top + 1):
        assert witt_dimension(k, n) == len(brute_lyndon(k, n))


def test_witt_rejects_degree_zero():
    with pytest.raises(ValueError):
        witt_dimension(3, 0)


@pytest.mark.parametrize("g,n,expected", [(2, 2, 6), (2, 3, 20), (2, 4, 45)])
def test_zn_nprime_formula_examples(g, n, expected):
    assert len(brute_h1_indices(g, n)) == expected
    assert zn_nprime_formula(g, n) == expected


def test_zn_nprime_formula_rejects_degree_one():
    with pytest.raises(ValueError):
        zn_nprime_formula(2, 1)


def _nonincreasing_tuples(g, n):
    return sum(1 for t in product(range(1, 2 * g + 1), repeat=n - 2)
               if all(t[i] >= t[i + 1] for i in range(len(t) - 1)))


@pytest.mark.parametrize("g,n,expected", [(2, 2, 1), (2, 3, 4), (2, 5, 20)])
def test_relation_image_bound(g, n, expected):
    assert _nonincreasing_tuples(g, n) == expected
    assert relation_image_upper_bound(g, n) == expected


@pytest.mark.parametrize("g,n,expected", [(2, 2, 5), (2, 3, 16), (2, 4, 35)])
def test_zn_n_lower_bound(g, n, expected):
    assert zn_n_lower_bound(g, n) == expected


@pytest.mark.parametrize("g,n,expected", [(2, 2, 6), (2, 3, 18), (2, 4, 36)])
def test_kn_upper_bound(g, n, expected):
    assert kn_upper_bound(g, n) == expected


def test_lower_bound_plus_relation_bound_is_metabelian_dimension():
    for g in range(1, 7):
        for n in range(2, 41):
            assert zn_nprime_formula(g, n) == zn_n_lower_bound(g, n) + relation_image_upper_bound(g, n)


@given(st.integers(1, 6), st.integers(2, 60))
def test_formulas_are_exact_ints(g, n):
    for f in (zn_nprime_formula, zn_n_lower_bound, relation_image_upper_bound, kn_upper_bound):
        v = f(g, n)
        assert type(v) is int and v >= 0
