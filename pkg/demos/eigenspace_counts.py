"""
Eigenspaces of conjugation and the Hodge filtration
===================================================

Conjugation fixes half the generators and negates the other half, which
splits Sym^m into plus and minus parts.  F^0 counts feed the local lower
bound, which grows like (2g-2) n^(2g) / (2g)!.
"""

from math import factorial

from liedims.eigen import (
    degree_two_minus_dim,
    f0_count,
    f0_upper_bound,
    sym_eigen_dims,
    wdr_lower_bound,
)

for m in range(6):
    print(m, sym_eigen_dims(2, m))

print("minus part through degree 2:", degree_two_minus_dim(2))

for n in range(2, 8):
    print(n, f0_count(3, n), f0_upper_bound(3, n))

# the normalised lower bound approaches 2g - 2 from above
g = 2
for n in (50, 200, 1000, 4000):
    print(n, wdr_lower_bound(g, n) * factorial(2 * g) / n ** (2 * g))
