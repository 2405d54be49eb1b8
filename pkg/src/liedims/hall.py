"""Hall basis of a free Lie algebra stratified by derived-series level.

Level 0 is the generators, ordered by index.  Level n+1 consists of the
left-normed brackets ``[[..[h1, h2], h3], .., hk]`` with k >= 2, every hj of
level n, and ``h1 < h2 >= h3 >= .. >= hk``.  Inside one level elements are
ordered by ``(degree, bracket tokens)``, where the tokens are the prefix
serialisation of the bracket tree (0 opens a bracket, -1 closes it, a
positive integer is a generator).  Lower levels sit above higher ones.
"""

from bisect import bisect_right
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .combinatorics import witt_dimension
from .oracle import (
    DEFAULT_BUDGET,
    Subspace,
    derived_piece,
    left_normed,
    to_nested_list,
)


def bracket_tokens(t):
    if isinstance(t, int):
        return (t,)
    return (0,) + bracket_tokens(t[0]) + bracket_tokens(t[1]) + (-1,)


@dataclass(frozen=True)
class HallElement:
    monomial: object
    level: int
    degree: int

    @property
    def order_key(self):
        return (self.degree, bracket_tokens(self.monomial))

    def as_dict(self):
        return {"level": self.level, "degree": self.degree,
                "monomial": to_nested_list(self.monomial)}


@dataclass
class HallTable:
    k: int
    max_degree: int
    cells: dict = field(default_factory=dict)  # (level, degree) -> [HallElement]

    def level(self, n):
        """Level-n elements in their total order."""
        out = [h for (lv, _), hs in self.cells.items() if lv == n for h in hs]
        return sorted(out, key=lambda h: h.order_key)

    def of_degree(self, i, min_level=0):
        return [h for (lv, d), hs in sorted(self.cells.items())
                if d == i and lv >= min_level for h in hs]

    @property
    def levels(self):
        return sorted({lv for lv, _ in self.cells})

    def count(self, level, degree):
        return len(self.cells.get((level, degree), ()))

    def as_records(self):
        return [h.as_dict() for key in sorted(self.cells) for h in self.cells[key]]


def _next_level(prev, level, max_degree):
    """All brackets of the next level from the ordered list ``prev``."""
    degs = [h.degree for h in prev]
    out = []

    def fits(room):
        # prev is sorted by degree first, so the fitting indices are a prefix
        return bisect_right(degs, room)

    def tails(head, top, room):
        # non-increasing continuations h3 >= h4 >= .. with h3 <= prev[top]
        yield head
        for j in range(min(top, fits(room) - 1), -1, -1):
            yield from tails(head + (j,), j, room - degs[j])

    for j2, h2 in enumerate(prev[:fits(max_degree - degs[0])]):
        for j1 in range(min(j2, fits(max_degree - degs[j2]))):
            base = degs[j1] + degs[j2]
            for tail in tails((), j2, max_degree - base):
                parts = [prev[j1].monomial, h2.monomial] + [prev[j].monomial for j in tail]
                d = base + sum(degs[j] for j in tail)
                out.append(HallElement(left_normed(*parts), level, d))
    out.sort(key=lambda h: h.order_key)
    return out


def generate_hall(k, max_degree):
    """All Hall elements on k letters of degree at most ``max_degree``."""
    if k < 2 or max_degree < 1:
        raise ValueError("generate_hall needs k >= 2 and max_degree >= 1")
    table = HallTable(k, max_degree)
    current = [HallElement(i, 0, 1) for i in range(1, k + 1)]
    level = 0
    while current:
        for h in current:
            table.cells.setdefault((level, h.degree), []).append(h)
        level += 1
        current = _next_level(current, level, max_degree)
    return table


def h1_monomials(g, n):
    """Left-normed ``[..[e_i1, e_i2], .., e_in]`` with i1 < i2 >= i3 >= .. >= in."""
    if n < 2:
        raise ValueError("h1_monomials needs n >= 2")
    k = 2 * g
    out = []
    for i2 in range(1, k + 1):
        for i1 in range(1, i2):
            for tail in combinations_with_replacement(range(i2, 0, -1), n - 2):
                out.append(left_normed(i1, i2, *tail))
    return out


@dataclass
class SpanReport:
    k: int
    n: int
    rank_all: int
    witt: int
    rank_upper_levels: int
    rank_derived3: int
    upper_levels_inside: bool

    @property
    def ok(self):
        return (self.rank_all == self.witt
                and self.rank_upper_levels == self.rank_derived3
                and self.upper_levels_inside)

    def __bool__(self):
        return self.ok


def verify_hall_spans(k, n, table=None, budget=None):
    """Check the degree-n Hall elements span the free Lie algebra, and that
    levels >= 2 span the third derived piece."""
    (budget or DEFAULT_BUDGET).check(k, n)
    table = table or generate_hall(k, n)
    everything = Subspace(n, [h.monomial for h in table.of_degree(n)])
    upper = Subspace(n, [h.monomial for h in table.of_degree(n, min_level=2)])
    derived = derived_piece(k, 3, n, budget=budget)
    return SpanReport(
        k=k, n=n,
        rank_all=everything.rank,
        witt=witt_dimension(k, n),
        rank_upper_levels=upper.rank,
        rank_derived3=derived.rank,
        upper_levels_inside=derived.contains_subspace(upper),
    )


@dataclass
class GradedDimTable:
    """Counts |H_n(i)| indexed by (level n, degree i)."""
    k: int
    max_degree: int
    counts: dict

    def column(self, i):
        return {lv: c for (lv, d), c in sorted(self.counts.items()) if d == i}

    def degree_total(self, i):
        return sum(self.column(i).values())

    def rows(self):
        return [{"level": lv, "degree": d, "count": c}
                for (lv, d), c in sorted(self.counts.items(), key=lambda kv: (kv[0][1], kv[0][0]))]


def bigrade_dims(k, max_degree, table=None):
    table = table or generate_hall(k, max_degree)
    counts = defaultdict(int)
    for key, hs in table.cells.items():
        counts[key] = len(hs)
    return GradedDimTable(k, max_degree, dict(counts))

