"""Exact integer counting formulas.

Every function returns a Python ``int``; nothing here touches floating point.
The closed forms that only make sense from degree two upward raise
``ValueError`` below that instead of extrapolating.
"""

from math import comb

from sympy import divisors, mobius


def binomial(n, k):
    """C(n, k), with C(n, k) = 0 for k > n or negative arguments."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def _require_degree(n, lowest=2):
    if n < lowest:
        raise ValueError(f"formula defined for n >= {lowest}, got n={n}")


def witt_dimension(k, n):
    """Dimension of the degree-n part of the free Lie algebra on k letters."""
    if k < 1 or n < 1:
        raise ValueError("witt_dimension needs k >= 1 and n >= 1")
    total = sum(int(mobius(d)) * k ** (n // d) for d in divisors(n))
    q, r = divmod(total, n)
    assert r == 0
    return q


def zn_nprime_formula(g, n):
    """Degree-n dimension of the free metabelian Lie algebra on 2g letters.

    Sum over the second bracket letter i of (i - 1) choices for the first
    letter times the number of non-increasing tails bounded by i.
    """
    _require_degree(n)
    return sum((i - 1) * binomial(n - 3 + i, i - 1) for i in range(1, 2 * g + 1))


def relation_image_upper_bound(g, n):
    """Number of non-increasing (n-2)-tuples over 2g letters."""
    _require_degree(n)
    return binomial(n - 3 + 2 * g, 2 * g - 1)


def zn_n_lower_bound(g, n):
    _require_degree(n)
    head = (2 * g - 2) * binomial(n - 3 + 2 * g, 2 * g - 1)
    return head + sum((i - 1) * binomial(n - 3 + i, i - 1) for i in range(1, 2 * g))


def kn_upper_bound(g, n):
    """Size bound for the part of degree n not of the form [x, e_2g, Sym]."""
    _require_degree(n)
    return binomial(2 * g, 2) * binomial(n - 4 + 2 * g, 2 * g - 2)
