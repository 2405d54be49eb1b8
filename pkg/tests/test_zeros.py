import random
from collections import Counter
from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, settings, strategies as st

from liedims.combinatorics import binomial
from liedims.oracle import BudgetExceeded
from liedims.zeros import (
    AnnihilatorProfile,
    ExponentMatrix,
    ZeroCountingError,
    count_vanishing_indices,
    enumerate_multi_indices,
    fiber_partition,
    format_delta,
    h2_bound_per_degree,
    kernel_box_count,
    parse_delta,
    prefix_count_bounds,
    vanishing_bound,
)

from bruteforce import brute_kernel_box, brute_multi_indices


@pytest.fixture
def D(pairing_fixture):
    return ExponentMatrix(pairing_fixture)


def test_fixture_example(D):
    rep = fiber_partition(D, 2, 5)
    assert rep.total == 35
    assert rep.max_fiber == 6
    assert rep.kernel_box_count == 49
    assert rep.fibers[(0, 0)] == 1
    assert rep.fibers[(1, 1)] == 4
    assert rep.violations == []


def test_small_enumeration():
    assert sorted(enumerate_multi_indices(1, 3)) == [(0, 0), (0, 1), (1, 0)]


@pytest.mark.parametrize("g", [1, 2])
def test_enumeration_matches_brute_force(g):
    for n in range(2, 9):
        got = enumerate_multi_indices(g, n)
        assert len(got) == len(set(got))
        assert sorted(got) == sorted(brute_multi_indices(g, n))


def test_partition_identity(D):
    for n in range(2, 13):
        rep = fiber_partition(D, 2, n)
        assert sum(rep.fibers.values()) == rep.total == binomial(n - 2 + 4, 4)
        assert rep.max_abs_delta <= rep.delta_bound


def test_fiber_sizes_by_hand(D):
    # alpha D = (a1 + a3, a2 + a4); the fiber over (s, t) has (s+1)(t+1) points
    rep = fiber_partition(D, 2, 7)
    for (s, t), size in rep.fibers.items():
        assert size == (s + 1) * (t + 1)


full_rank_matrices = st.lists(
    st.lists(st.integers(-2, 2), min_size=2, max_size=2), min_size=4, max_size=4,
).filter(lambda rows: sympy.Matrix(rows).rank() == 2)


@settings(max_examples=40, deadline=None)
@given(full_rank_matrices, st.integers(2, 6))
def test_fibers_bounded_by_kernel_box(rows, n):
    D = ExponentMatrix(rows)
    rep = fiber_partition(D, 2, n)
    assert rep.kernel_box_count == brute_kernel_box(rows, n)
    assert rep.max_fiber <= rep.kernel_box_count
    assert rep.violations == []


def test_kernel_box_one_column():
    D = ExponentMatrix([[1], [2]])
    assert kernel_box_count(D, 4) == brute_kernel_box([[1], [2]], 4) == 3


def test_prefix_examples():
    assert prefix_count_bounds(2, 1, 1, 1, 5) == (1, 1)
    assert prefix_count_bounds(1, 2, 1, 1, 6) == (8, 9)
    assert prefix_count_bounds(2, 3, 1, 1, 3) == (14, 25)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_prefix_simplex_below_cube(d):
    for n in range(2, 12):
        for M in (1, 2, 3):
            exact, cube = prefix_count_bounds(2, d, M, Fraction(1, M), n)
            assert exact <= cube


def random_profile(rng, D, n, l):
    deltas = sorted(fiber_partition(D, D.g, n).fibers)
    roots = {}
    for delta in rng.sample(deltas, min(len(deltas), rng.randint(1, 6))):
        roots.setdefault(delta[:-1], set()).add(delta[-1])
    roots = {k: sorted(v)[:l] for k, v in roots.items()}
    return AnnihilatorProfile(l, rng.randint(1, 3), roots)


def test_random_profiles_respect_bound(D):
    rng = random.Random(20240607)
    for _ in range(100):
        n = rng.randint(3, 7)
        profile = random_profile(rng, D, n, rng.randint(1, 3))
        count = count_vanishing_indices(D, profile, 2, n)
        assert count <= vanishing_bound(D, profile, n)


def test_vanishing_example(D):
    profile = AnnihilatorProfile(1, 1, {(0,): [0]})
    assert count_vanishing_indices(D, profile, 2, 5) == 1
    assert vanishing_bound(D, profile, 5) == 637


def test_vanishing_count_by_fiber(D):
    profile = AnnihilatorProfile(2, 1, {(1,): [0, 2], (2,): [1]})
    fibers = fiber_partition(D, 2, 6).fibers
    expected = fibers[(1, 0)] + fibers[(1, 2)] + fibers[(2, 1)]
    assert count_vanishing_indices(D, profile, 2, 6) == expected


def test_profile_json_round_trip():
    p = AnnihilatorProfile(2, 3, {(Fraction(1, 2),): [0, Fraction(-3, 2)]})
    doc = p.to_json()
    assert doc == {"l": 2, "m": 3, "roots": {"1/2": ["-3/2", "0"]}}
    assert AnnihilatorProfile.from_json(doc) == p


def test_profile_rejects_too_many_roots():
    with pytest.raises(ZeroCountingError):
        AnnihilatorProfile(1, 1, {(0,): [0, 1]})


def test_delta_text():
    assert format_delta((Fraction(1, 2), 3)) == "1/2,3"
    assert parse_delta(" 1/2, 3 ") == (Fraction(1, 2), 3)
    assert parse_delta("") == ()


def test_rational_matrix():
    D = ExponentMatrix.from_rationals([["1/2", 0], [0, "1/3"], [1, 1], [0, 0]])
    assert D.M == 6
    assert D.abs_max == 1
    assert D.entries()[0][0] == Fraction(1, 2)
    assert D.apply((1, 1, 0, 0)) == (3, 2)


@pytest.mark.parametrize("rows", [
    [[1, 0], [0, 1], [1, 0]],        # odd number of rows
    [[1, 1], [2, 2], [0, 0], [1, 1]],  # rank one
    [[1, 0, 0], [0, 1, 0]],          # d > 2g
    [],
])
def test_matrix_validation(rows):
    with pytest.raises(ZeroCountingError):
        ExponentMatrix(rows)


def test_matrix_genus_mismatch(D):
    with pytest.raises(ZeroCountingError):
        fiber_partition(D, 3, 4)


def test_index_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_multi_indices(3, 40, limit=1000)


def test_h2_bounds():
    assert h2_bound_per_degree(2, 10, B=1) == 1000
    assert h2_bound_per_degree(2, 2, m=3, A=2, A_prime=1) == 56
    assert h2_bound_per_degree(2, 3, B=Fraction(1, 10)) == 3  # ceil(27/10)
    with pytest.raises(ValueError):
        h2_bound_per_degree(2, 3)
    with pytest.raises(ValueError):
        h2_bound_per_degree(2, 3, B=-1)


def test_fiber_report_serialises(D):
    doc = fiber_partition(D, 2, 4).as_dict()
    assert doc["fibers"]["0,0"] == 1
    assert doc["total"] == 15 and doc["fiber_count"] == len(doc["fibers"])
    assert Counter(doc["fibers"].values())[1] >= 1
