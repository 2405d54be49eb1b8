"""
Graded dimensions of a free Lie algebra
=======================================

Lyndon words give a basis; expanding their brackets into the tensor
algebra and ranking them exactly recovers the Witt formula.
"""

from liedims.combinatorics import witt_dimension
from liedims.oracle import format_monomial, lyndon_basis, rank_of

# four generators, as for a genus two surface
k = 4
for n in range(1, 7):
    basis = lyndon_basis(k, n)
    print(n, len(basis), rank_of(basis), witt_dimension(k, n))

# the degree three basis written out as brackets
for t in lyndon_basis(2, 3):
    print(format_monomial(t))
