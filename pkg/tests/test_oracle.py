from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from liedims.combinatorics import witt_dimension
from liedims.oracle import (
    BudgetExceeded,
    OracleBudget,
    Subspace,
    ad,
    add_vectors,
    degree,
    derived_piece,
    expand,
    lyndon_basis,
    lyndon_words,
    omega,
    rank_of,
    relation_piece,
)

from bruteforce import brute_lyndon, sympy_rank


def monomials(k=3, max_leaves=4):
    leaf = st.integers(1, k)
    return st.recursive(leaf, lambda inner: st.tuples(inner, inner), max_leaves=max_leaves)


def test_expand_leaf():
    assert expand(1) == {(1,): 1}


def test_expand_bracket():
    assert expand((1, 2)) == {(1, 2): 1, (2, 1): -1}


def test_expand_nested_by_hand():
    # [[e1,e2],e1] = e1e2e1 - e2e1e1 - e1e1e2 + e1e2e1
    assert expand(((1, 2), 1)) == {(1, 2, 1): 2, (2, 1, 1): -1, (1, 1, 2): -1}


def test_rank_examples():
    assert rank_of([(1, 2), (2, 1)]) == 1
    assert rank_of([(i, j) for i in range(1, 5) for j in range(i, 5)]) == 6
    assert rank_of([]) == 0


def test_rank_rejects_mixed_degrees():
    with pytest.raises(ValueError):
        rank_of([(1, 2), 1])


@pytest.mark.parametrize("k,n", [(2, 5), (3, 4), (4, 3)])
def test_duval_matches_rotation_definition(k, n):
    assert lyndon_words(k, n) == brute_lyndon(k, n)


def test_lyndon_basis_examples():
    assert lyndon_basis(2, 2) == [(1, 2)]
    assert lyndon_basis(2, 3) == [(1, (1, 2)), ((1, 2), 2)]
    assert len(lyndon_basis(4, 3)) == 20


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_lyndon_rank_is_witt(k):
    for n in range(1, 9 if k < 4 else 8):
        assert rank_of(lyndon_basis(k, n)) == witt_dimension(k, n)


@pytest.mark.slow
def test_lyndon_rank_is_witt_degree_eight():
    assert rank_of(lyndon_basis(4, 8)) == witt_dimension(4, 8)


@pytest.mark.parametrize("r,n,expected", [(3, 3, 0), (3, 4, 15), (2, 2, 6)])
def test_derived_piece_examples(r, n, expected):
    assert derived_piece(4, r, n).rank == expected


@pytest.mark.parametrize("g,n,expected", [(2, 2, 1), (2, 3, 4), (1, 2, 1)])
def test_relation_piece_examples(g, n, expected):
    assert relation_piece(g, n).rank == expected


def test_relation_piece_degree_three_by_hand():
    w = omega(2)
    assert sympy_rank([ad(w, (i,)) for i in range(1, 5)]) == 4


def test_relation_piece_lies_in_the_lie_algebra():
    for g, n in [(1, 4), (2, 4), (2, 5), (3, 3)]:
        lie = Subspace(n, lyndon_basis(2 * g, n))
        assert lie.contains_subspace(relation_piece(g, n))


def test_pairings_give_equal_dimensions():
    for g, n in [(2, 3), (2, 5), (3, 4)]:
        assert relation_piece(g, n, "split").rank == relation_piece(g, n, "consecutive").rank


def test_unknown_pairing():
    with pytest.raises(ValueError):
        omega(2, "diagonal")


@given(monomials())
def test_self_bracket_vanishes(x):
    assert rank_of([(x, x)]) == 0


@given(monomials(), monomials(), monomials())
def test_jacobi(x, y, z):
    lhs = add_vectors(expand((x, (y, z))), expand(((x, y), z)), expand((y, (x, z))),
                      coeffs=[1, -1, -1])
    assert lhs == {}


@given(monomials(), monomials(), st.integers(-3, 3))
def test_ad_is_linear(x, y, c):
    if degree(x) != degree(y):
        return
    lin = add_vectors(expand(x), expand(y), coeffs=[c, 1])
    right = add_vectors(ad(expand(x), (1,)), ad(expand(y), (1,)), coeffs=[c, 1])
    assert ad(lin, (1,)) == right


@settings(max_examples=60, deadline=None)
@given(st.lists(monomials(k=3, max_leaves=4).filter(lambda t: isinstance(t, tuple)),
                min_size=1, max_size=8))
def test_elimination_agrees_with_sympy(ms):
    d = degree(ms[0])
    ms = [m for m in ms if degree(m) == d]
    assert rank_of(ms) == sympy_rank([expand(m) for m in ms])


def test_rref_basis_shape():
    space = relation_piece(2, 4)
    rows = space.basis()
    pivots = [min(r) for r in rows]
    assert pivots == sorted(pivots)
    for r, p in zip(rows, pivots):
        assert r[p] == 1
        assert all(isinstance(c, Fraction) for c in r.values())
        for q in pivots:
            if q != p:
                assert q not in r
    again = Subspace(4)
    again.extend(rows)
    assert again.rank == space.rank
    assert all(space.contains(r) for r in rows)


def test_subspace_is_deterministic():
    a = derived_piece(4, 3, 5).basis()
    b = relation_piece(2, 5)
    c = relation_piece(2, 5)
    assert b.basis() == c.basis()
    assert a == derived_piece(4, 3, 5).basis()


def test_tsv_dump():
    space = relation_piece(1, 2)
    assert space.to_tsv() == "1.2\t1\t1\n2.1\t-1\t1\n"


def test_budget_refuses_large_requests():
    with pytest.raises(BudgetExceeded):
        derived_piece(8, 3, 4)
    with pytest.raises(BudgetExceeded):
        relation_piece(2, 9)
    assert relation_piece(2, 3, budget=OracleBudget(4, 3)).rank == 4


def test_subspace_degree_guard():
    s = Subspace(2)
    with pytest.raises(ValueError):
        s.add(((1, 2), 3))
