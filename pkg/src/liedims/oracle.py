"""Brute-force free Lie algebra computations inside the tensor algebra.

A Lie monomial is a binary bracket tree: a generator is a positive ``int``
and a bracket ``[x, y]`` is the pair ``(x, y)``.  Expanding a monomial with
``[x, y] = xy - yx`` gives a ``WordVector``: a dict mapping words (tuples of
generator indices) to nonzero integer coefficients.  All ranks are computed
by exact elimination over the rationals; since every expansion has integer
coefficients the elimination is carried out fraction-free on integer rows.

Ideal pieces are generated by iterated brackets with generators only.  The
ideal generated by a set S in a Lie algebra spanned by iterated brackets of
generators is spanned by ``[..[s, x1], .., xm]`` with the xj generators,
because Jacobi rewrites a bracket with a long monomial as iterated brackets
with its letters.

The derived series here is ``A(1) = A``, ``A(r+1) = [A(r), A(r)]``, so the
third level is ``[[A, A], [A, A]]``.  (Writing ``[A, A(r)]`` instead would make
every level equal to ``[A, A]``.)
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd, lcm, log2

from .combinatorics import witt_dimension


class BudgetExceeded(RuntimeError):
    """Raised when a request is larger than the configured oracle budget."""


@dataclass(frozen=True)
class OracleBudget:
    max_letters: int = 6
    max_degree: int = 8

    def check(self, k, n):
        if k > self.max_letters or n > self.max_degree:
            raise BudgetExceeded(
                f"oracle budget is {self.max_letters} letters and degree "
                f"{self.max_degree} (about {self.max_degree * log2(self.max_letters):.1f} "
                f"bits of word space); requested k={k}, n={n}"
            )


DEFAULT_BUDGET = OracleBudget()


# -- monomials ---------------------------------------------------------------

def bracket(x, y):
    return (x, y)


def left_normed(*parts):
    """``[[..[p1, p2], p3], .., pk]``."""
    if not parts:
        raise ValueError("left_normed needs at least one part")
    t = parts[0]
    for p in parts[1:]:
        t = (t, p)
    return t


def degree(t):
    if isinstance(t, int):
        return 1
    return degree(t[0]) + degree(t[1])


def letters(t):
    if isinstance(t, int):
        return (t,)
    return letters(t[0]) + letters(t[1])


def to_nested_list(t):
    """JSON-friendly form: a leaf is its index, a bracket a two-element list."""
    if isinstance(t, int):
        return t
    return [to_nested_list(t[0]), to_nested_list(t[1])]


def from_nested_list(obj):
    if isinstance(obj, int):
        return obj
    left, right = obj
    return (from_nested_list(left), from_nested_list(right))


def format_monomial(t):
    if isinstance(t, int):
        return f"e{t}"
    return f"[{format_monomial(t[0])},{format_monomial(t[1])}]"


# -- expansion ---------------------------------------------------------------

@lru_cache(maxsize=200_000)
def _expand(t):
    if isinstance(t, int):
        if t < 1:
            raise ValueError(f"generator indices start at 1, got {t}")
        return {(t,): 1}
    a = _expand(t[0])
    b = _expand(t[1])
    out = {}
    for u, x in a.items():
        for w, y in b.items():
            c = x * y
            uw = u + w
            wu = w + u
            out[uw] = out.get(uw, 0) + c
            out[wu] = out.get(wu, 0) - c
    return {w: c for w, c in out.items() if c}


def expand(t):
    """Expansion of a Lie monomial in the tensor algebra (a fresh dict)."""
    return dict(_expand(t))


def vector_degree(v):
    degrees = {len(w) for w in v}
    if len(degrees) > 1:
        raise ValueError(f"mixed-degree word vector: degrees {sorted(degrees)}")
    return degrees.pop() if degrees else None


def add_vectors(*vs, coeffs=None):
    coeffs = coeffs or [1] * len(vs)
    out = {}
    for c, v in zip(coeffs, vs):
        for w, x in v.items():
            out[w] = out.get(w, 0) + c * x
    return {w: x for w, x in out.items() if x}


# -- exact elimination -------------------------------------------------------

def _as_vector(x):
    """Monomials are expanded; rational vectors are scaled to integers."""
    if isinstance(x, (int, tuple)):
        return expand(x)
    den = 1
    for c in x.values():
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    if den == 1 and all(isinstance(c, int) for c in x.values()):
        return x
    return {w: int(c * den) for w, c in x.items()}


class Subspace:
    """A subspace of the degree-n tensor space, kept in row-echelon form.

    Rows are primitive integer vectors whose pivot is their smallest word in
    lexicographic order, with positive pivot coefficient.  ``sources`` records
    the inputs that raised the rank, in insertion order, so a subspace built
    from monomials also yields a monomial basis.
    """

    def __init__(self, degree, vectors=()):
        self.degree = degree
        self._pivots = {}
        self.sources = []
        for v in vectors:
            self.add(v)

    @property
    def rank(self):
        return len(self._pivots)

    def __len__(self):
        return self.rank

    def _reduce(self, v):
        v = {w: c for w, c in v.items() if c}
        while v:
            lead = min(v)
            row = self._pivots.get(lead)
            if row is None:
                return v, lead
            a, b = row[lead], v[lead]
            g = gcd(a, b)
            a //= g
            b //= g
            if a != 1:
                v = {w: a * c for w, c in v.items()}
            for w, c in row.items():
                x = v.get(w, 0) - b * c
                if x:
                    v[w] = x
                else:
                    v.pop(w, None)
        return v, None

    def _check_degree(self, v):
        d = vector_degree(v)
        if d is not None and self.degree is not None and d != self.degree:
            raise ValueError(f"vector of degree {d} added to degree-{self.degree} subspace")

    def add(self, x):
        """Add a monomial or word vector; return True if the rank went up."""
        v = _as_vector(x)
        self._check_degree(v)
        v, lead = self._reduce(v)
        if lead is None:
            return False
        content = 0
        for c in v.values():
            content = gcd(content, c)
        if v[lead] < 0:
            content = -content
        self._pivots[lead] = {w: c // content for w, c in v.items()}
        self.sources.append(x)
        return True

    def extend(self, xs):
        return sum(self.add(x) for x in xs)

    def contains(self, x):
        v = _as_vector(x)
        self._check_degree(v)
        return self._reduce(v)[1] is None

    def contains_subspace(self, other):
        return all(self.contains(row) for row in other._pivots.values())

    def copy(self):
        new = Subspace(self.degree)
        new._pivots = dict(self._pivots)
        new.sources = list(self.sources)
        return new

    def __add__(self, other):
        new = self.copy()
        new.extend(other.sources)
        return new

    def basis(self):
        """Reduced row-echelon basis with exact rational coefficients.

        Each returned vector has coefficient 1 on its pivot word and 0 on
        every other pivot word; rows are sorted by pivot.
        """
        order = sorted(self._pivots)
        rows = {p: {w: Fraction(c, self._pivots[p][p]) for w, c in self._pivots[p].items()}
                for p in order}
        for p in reversed(order):
            row = rows[p]
            for q in order:
                if q >= p:
                    break
                other = rows[q]
                c = other.get(p)
                if c:
                    for w, x in row.items():
                        y = other.get(w, 0) - c * x
                        if y:
                            other[w] = y
                        else:
                            other.pop(w, None)
        return [rows[p] for p in order]

    def to_tsv(self):
        """Rows of ``word<TAB>numerator<TAB>denominator``; a blank line separates vectors."""
        lines = []
        for i, row in enumerate(self.basis()):
            if i:
                lines.append("")
            for w in sorted(row):
                c = row[w]
                lines.append(f"{'.'.join(map(str, w))}\t{c.numerator}\t{c.denominator}")
        return "\n".join(lines) + ("\n" if lines else "")


def rank_of(items):
    """Exact rank of a list of monomials or word vectors of a single degree."""
    vectors = [_as_vector(x) for x in items]
    degrees = {vector_degree(v) for v in vectors} - {None}
    if len(degrees) > 1:
        raise ValueError(f"rank_of needs a single degree, got {sorted(degrees)}")
    return Subspace(degrees.pop() if degrees else None, vectors).rank


# -- Lyndon words ------------------------------------------------------------

def lyndon_words(k, n):
    """Lyndon words of length n over 1..k, in lexicographic order (Duval)."""
    if k < 1 or n < 1:
        raise ValueError("lyndon_words needs k >= 1 and n >= 1")
    out = []
    w = [1]
    while w:
        m = len(w)
        if m == n:
            out.append(tuple(w))
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == k:
            w.pop()
        if w:
            w[-1] += 1
    return out


def is_lyndon(w):
    return all(w < w[i:] + w[:i] for i in range(1, len(w)))


def standard_bracketing(w):
    """Bracket a Lyndon word at its longest proper Lyndon suffix."""
    if len(w) == 1:
        return w[0]
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return (standard_bracketing(w[:i]), standard_bracketing(w[i:]))
    raise ValueError(f"{w} is not a Lyndon word")


def lyndon_basis(k, n):
    return [standard_bracketing(w) for w in lyndon_words(k, n)]


# -- derived series and the surface relation ---------------------------------

@lru_cache(maxsize=None)
def _derived_piece(k, r, n):
    if r == 1:
        return Subspace(n, lyndon_basis(k, n))
    space = Subspace(n)
    for a in range(1, n // 2 + 1):
        b = n - a
        left = _derived_piece(k, r - 1, a).sources
        right = left if a == b else _derived_piece(k, r - 1, b).sources
        for i, u in enumerate(left):
            for j, v in enumerate(right):
                if a == b and j <= i:
                    continue
                space.add((u, v))
    return space


def derived_piece(k, r, n, budget=None):
    """Degree-n piece of the r-th derived subalgebra of the free Lie algebra on k letters."""
    if r < 1 or n < 1:
        raise ValueError("derived_piece needs r >= 1 and n >= 1")
    (budget or DEFAULT_BUDGET).check(k, n)
    return _derived_piece(k, r, n).copy()


PAIRINGS = ("consecutive", "split")


def symplectic_pairs(g, pairing="consecutive"):
    """Index pairs (a_i, b_i) of the surface relation."""
    if pairing == "consecutive":
        return [(2 * i - 1, 2 * i) for i in range(1, g + 1)]
    if pairing == "split":
        return [(i, g + i) for i in range(1, g + 1)]
    raise ValueError(f"unknown pairing {pairing!r}; expected one of {PAIRINGS}")


def omega(g, pairing="consecutive"):
    """The surface relation sum_i [a_i, b_i] as a word vector."""
    return add_vectors(*(expand((a, b)) for a, b in symplectic_pairs(g, pairing)))


def ad(v, x):
    """``[..[v, x1], x2], .., xm]`` for a word vector v and generators x."""
    for gen in x:
        out = {}
        for w, c in v.items():
            out[w + (gen,)] = out.get(w + (gen,), 0) + c
            out[(gen,) + w] = out.get((gen,) + w, 0) - c
        v = {w: c for w, c in out.items() if c}
    return v


def relation_piece(g, n, pairing="consecutive", budget=None):
    """Degree-n piece of the ideal generated by the surface relation."""
    if n < 2:
        raise ValueError("relation_piece needs n >= 2")
    (budget or DEFAULT_BUDGET).check(2 * g, n)
    w = omega(g, pairing)
    space = Subspace(n)
    for tail in product(range(1, 2 * g + 1), repeat=n - 2):
        space.add(ad(w, tail))
    return space


def check_witt(k, n):
    """Cross-check the Lyndon basis against the Witt formula."""
    return rank_of(lyndon_basis(k, n)) == witt_dimension(k, n)
