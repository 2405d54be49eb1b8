"""Conjugation eigenspaces and Hodge-filtration counts.

V splits as V+ (g dimensional, conjugation +1) and V- (g dimensional,
conjugation -1).  Sym^m(V) is the sum over i of Sym^i(V+) (x) Sym^(m-i)(V-),
on which conjugation acts by (-1)^(m-i).  F^0 of degree one is spanned by
the first g generators; a Hall monomial lies in F^0 exactly when all its
letters do.
"""

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .combinatorics import (
    binomial,
    kn_upper_bound,
    zn_n_lower_bound,
)


@dataclass(frozen=True)
class EigenSplit:
    plus: int
    minus: int
    m: int

    @property
    def total(self):
        return self.plus + self.minus


@dataclass(frozen=True)
class ConjugationBasis:
    """Generators 1..g are conjugation-fixed, g+1..2g are negated."""
    g: int

    @property
    def plus(self):
        return tuple(range(1, self.g + 1))

    @property
    def minus(self):
        return tuple(range(self.g + 1, 2 * self.g + 1))

    def sign(self, word):
        return -1 if sum(x > self.g for x in word) % 2 else 1


@dataclass(frozen=True)
class HodgeFlag:
    """F^0 of degree one, spanned by generators 1..g."""
    g: int

    @property
    def f0(self):
        return tuple(range(1, self.g + 1))

    def contains(self, word):
        return all(x <= self.g for x in word)


def sym_eigen_dims(g, m):
    if m < 0:
        raise ValueError("m must be >= 0")
    plus = minus = 0
    for i in range(m + 1):
        term = binomial(i + g - 1, g - 1) * binomial(m - i + g - 1, g - 1)
        if (m - i) % 2:
            minus += term
        else:
            plus += term
    return EigenSplit(plus, minus, m)


def sym_eigen_dims_enumerated(g, m):
    """Same split by listing every monomial of Sym^m(V) and its sign."""
    basis = ConjugationBasis(g)
    plus = minus = 0
    for mono in combinations_with_replacement(range(1, 2 * g + 1), m):
        if basis.sign(mono) > 0:
            plus += 1
        else:
            minus += 1
    return EigenSplit(plus, minus, m)


def _need_n(n, lowest):
    if n < lowest:
        raise ValueError(f"needs n >= {lowest}, got {n}")


def _need_g(g):
    if g < 2:
        raise ValueError(f"genus must be >= 2 here, got g={g}")


def sn_minus_dim(g, n):
    """Minus part of the span of [..[f_j, f_2g], f_i3], .., f_in] with j < 2g.

    The head [f_j, f_2g] is odd for j <= g and even for g < j < 2g.
    """
    _need_n(n, 2)
    split = sym_eigen_dims(g, n - 2)
    return g * split.plus + (g - 1) * split.minus


def degree_two_minus_dim(g):
    """Minus dimension of N in degrees 1 and 2.

    Degree 1 gives V-.  In degree 2, Lambda^2 V has minus part V+ (x) V-
    of dimension g^2, and the relation lies there: it is the image of the
    Tate twist, on which conjugation is -1.
    """
    lambda2_minus = sum(1 for i in range(1, 2 * g + 1) for j in range(i + 1, 2 * g + 1)
                        if (i <= g) != (j <= g))
    relation_minus = 1
    return g + lambda2_minus - relation_minus


def minus_partial_sum_bound(g, n):
    """Majorant of the summed minus dimensions of Z_i(N) for i <= n."""
    _need_g(g)
    _need_n(n, 2)
    total = degree_two_minus_dim(g)
    for i in range(3, n + 1):
        total += sn_minus_dim(g, i) + kn_upper_bound(g, i)
    return total


def f0_count(g, n):
    """H_1(n) monomials with every letter in F^0."""
    _need_n(n, 2)
    return sum((i - 1) * binomial(n - 3 + i, i - 1) for i in range(1, g + 1))


def f0_upper_bound(g, n):
    _need_n(n, 2)
    return binomial(g, 2) * binomial(n + g - 3, g - 1)


def wdr2_dim(g):
    """dim W_2/F^0: g from degree one, plus Lambda^2 V mod the relation mod
    Lambda^2 F^0 (the relation is not in Lambda^2 F^0, as F^0 is isotropic)."""
    if g < 1:
        raise ValueError("g must be >= 1")
    return g + (binomial(2 * g, 2) - 1 - binomial(g, 2))


def wdr_lower_bound(g, n):
    _need_g(g)
    _need_n(n, 3)
    total = wdr2_dim(g)
    for i in range(3, n + 1):
        total += max(0, zn_n_lower_bound(g, i) - f0_upper_bound(g, i))
    return total
