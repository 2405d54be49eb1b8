"""Counting multi-indices, their fibers under an exponent matrix, and zeros.

An exponent matrix D has 2g rows and d columns with entries in (1/M)Z; it is
stored as integer numerators over a common denominator M.  A multi-index
alpha in N^(2g) maps to delta = alpha D.  Fibers are compared against the
number of kernel vectors mu D = 0 in the box sup|mu_i| <= n - 2, which bounds
every fiber because alpha' -> alpha' - alpha is injective on a fiber.

An annihilator profile abstracts a Weierstrass polynomial in the last
variable: for each prefix (delta_1, .., delta_{d-1}) it lists at most l
values of delta_d where the annihilator vanishes.
"""

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import ceil, lcm

import sympy

from .combinatorics import binomial
from .oracle import BudgetExceeded


class ZeroCountingError(ValueError):
    pass


DEFAULT_INDEX_BUDGET = 5_000_000


@dataclass(frozen=True)
class ExponentMatrix:
    numerators: tuple  # 2g rows of d integers
    M: int = 1

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.numerators)
        object.__setattr__(self, "numerators", rows)
        if not rows or not rows[0]:
            raise ZeroCountingError("exponent matrix is empty")
        if len({len(r) for r in rows}) != 1:
            raise ZeroCountingError("exponent matrix rows have different lengths")
        if len(rows) % 2:
            raise ZeroCountingError("exponent matrix needs an even number (2g) of rows")
        if self.M < 1:
            raise ZeroCountingError("denominator M must be positive")
        if self.d > len(rows):
            raise ZeroCountingError("d must not exceed 2g")
        if sympy.Matrix(rows).rank() != self.d:
            raise ZeroCountingError("exponent matrix must have full column rank")

    @classmethod
    def from_rationals(cls, rows):
        """Build from entries given as ints, Fractions or "p/q" strings."""
        entries = [[Fraction(x) for x in r] for r in rows]
        M = 1
        for r in entries:
            for x in r:
                M = lcm(M, x.denominator)
        return cls(tuple(tuple(int(x * M) for x in r) for r in entries), M)

    @property
    def g(self):
        return len(self.numerators) // 2

    @property
    def d(self):
        return len(self.numerators[0])

    @property
    def abs_max(self):
        """|D| = max |q_ij| as an exact rational."""
        return Fraction(max(abs(x) for r in self.numerators for x in r), self.M)

    def apply(self, alpha):
        """Numerators (over M) of alpha D."""
        return tuple(sum(a * r[j] for a, r in zip(alpha, self.numerators) if a)
                     for j in range(self.d))

    def entries(self):
        return [[Fraction(x, self.M) for x in r] for r in self.numerators]


def _check_index_budget(g, n, limit):
    count = binomial(n - 2 + 2 * g, 2 * g)
    if count > limit:
        raise BudgetExceeded(f"{count} multi-indices exceed the budget of {limit}")


def enumerate_multi_indices(g, n, limit=DEFAULT_INDEX_BUDGET):
    """All alpha in N^(2g) with |alpha| <= n - 2, via stars and bars."""
    if n < 2:
        raise ValueError("needs n >= 2")
    _check_index_budget(g, n, limit)
    k = 2 * g
    out = []
    # slot k soaks up the unused weight
    for combo in combinations_with_replacement(range(k + 1), n - 2):
        alpha = [0] * (k + 1)
        for slot in combo:
            alpha[slot] += 1
        out.append(tuple(alpha[:k]))
    return out


def kernel_box_count(D, n):
    """Number of integer mu with mu D = 0 and sup |mu_i| <= n - 2.

    Meet in the middle: tally partial products of the first half of the
    coordinates and match them against the negated second half.
    """
    if n < 2:
        raise ValueError("needs n >= 2")
    r = n - 2
    rows = D.numerators
    half = len(rows) // 2
    first, second = rows[:half], rows[half:]

    def partial_sums(block):
        tally = Counter()
        for mu in product(range(-r, r + 1), repeat=len(block)):
            tally[tuple(sum(m * row[j] for m, row in zip(mu, block)) for j in range(D.d))] += 1
        return tally

    left = partial_sums(first)
    right = partial_sums(second)
    return sum(c * right.get(tuple(-x for x in key), 0) for key, c in left.items())


def _delta_key(nums, M):
    return tuple(Fraction(x, M) for x in nums)


def format_delta(delta):
    return ",".join(str(x) for x in delta)


def parse_delta(text):
    text = text.strip()
    if not text:
        return ()
    return tuple(Fraction(x.strip()) for x in text.split(","))


@dataclass
class FiberReport:
    n: int
    total: int
    fibers: dict  # delta (tuple of Fraction) -> |L_delta|
    max_fiber: int
    kernel_box_count: int
    delta_bound: Fraction
    max_abs_delta: Fraction

    @property
    def violations(self):
        out = []
        if self.max_fiber > self.kernel_box_count:
            out.append("a fiber exceeds the kernel box count")
        if self.max_abs_delta > self.delta_bound:
            out.append("some |alpha D| exceeds (n-2)(2g)|D|")
        return out

    def as_dict(self):
        return {
            "n": self.n,
            "total": self.total,
            "fiber_count": len(self.fibers),
            "max_fiber": self.max_fiber,
            "kernel_box_count": self.kernel_box_count,
            "delta_bound": str(self.delta_bound),
            "max_abs_delta": str(self.max_abs_delta),
            "fibers": {format_delta(k): v for k, v in sorted(self.fibers.items())},
        }


def fiber_partition(D, g, n, limit=DEFAULT_INDEX_BUDGET):
    if D.g != g:
        raise ZeroCountingError(f"matrix has {2 * D.g} rows but g={g}")
    tally = Counter(D.apply(alpha) for alpha in enumerate_multi_indices(g, n, limit))
    total = sum(tally.values())
    if total != binomial(n - 2 + 2 * g, 2 * g):
        raise AssertionError("fibers do not partition the multi-indices")
    fibers = {_delta_key(k, D.M): v for k, v in tally.items()}
    max_abs = max((abs(x) for key in fibers for x in key), default=Fraction(0))
    return FiberReport(
        n=n,
        total=total,
        fibers=fibers,
        max_fiber=max(tally.values()),
        kernel_box_count=kernel_box_count(D, n),
        delta_bound=(n - 2) * 2 * g * D.abs_max,
        max_abs_delta=max_abs,
    )


def _side(g, n, M, absD):
    return int(2 * g * (n - 2) * M * Fraction(absD))


def prefix_count_bounds(g, d, M, absD, n):
    """(simplex count, cube count) for the possible prefixes (delta_1..delta_{d-1})."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if d == 1:
        return 1, 1
    side = _side(g, n, M, absD)
    exact = sum(binomial(i + d - 2, d - 2) for i in range(1, side + 1))
    return exact, (side + 1) ** (d - 1)


@dataclass
class AnnihilatorProfile:
    l: int
    m: int
    roots: dict = field(default_factory=dict)  # prefix tuple -> frozenset of last coordinates

    def __post_init__(self):
        if self.l < 1 or self.m < 1:
            raise ZeroCountingError("l and m must be positive")
        self.roots = {tuple(Fraction(x) for x in k): frozenset(Fraction(x) for x in v)
                      for k, v in self.roots.items()}
        for prefix, vals in self.roots.items():
            if len(vals) > self.l:
                raise ZeroCountingError(
                    f"prefix {format_delta(prefix)} has {len(vals)} roots, more than l={self.l}")

    def vanishes(self, delta):
        return delta[-1] in self.roots.get(delta[:-1], ())

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        roots = {parse_delta(k): [Fraction(str(x)) for x in v]
                 for k, v in obj.get("roots", {}).items()}
        return cls(int(obj["l"]), int(obj["m"]), roots)

    def to_json(self):
        return {"l": self.l, "m": self.m,
                "roots": {format_delta(k): [str(x) for x in sorted(v)]
                          for k, v in sorted(self.roots.items())}}


def count_vanishing_indices(D, profile, g, n, limit=DEFAULT_INDEX_BUDGET):
    """Number of alpha with |alpha| <= n - 2 at which the annihilator vanishes."""
    if D.g != g:
        raise ZeroCountingError(f"matrix has {2 * D.g} rows but g={g}")
    count = 0
    for alpha in enumerate_multi_indices(g, n, limit):
        if profile.vanishes(_delta_key(D.apply(alpha), D.M)):
            count += 1
    return count


def vanishing_bound(D, profile, n):
    """kernel box count * l * (2g(n-2)M|D| + 1)^(d-1)."""
    side = _side(D.g, n, D.M, D.abs_max)
    return kernel_box_count(D, n) * profile.l * (side + 1) ** (D.d - 1)


def h2_bound_per_degree(g, n, B=None, m=None, A=None, A_prime=0):
    """B n^(2g-1), or (m A + A') n^(2g-1); rounded up to an integer."""
    if B is None:
        if m is None or A is None:
            raise ValueError("give either B or both m and A")
        B = Fraction(m) * Fraction(A) + Fraction(A_prime)
    B = Fraction(B)
    if B < 0:
        raise ValueError("constants must be nonnegative")
    return ceil(B * n ** (2 * g - 1))
