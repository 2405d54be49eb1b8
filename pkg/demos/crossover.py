"""
Where the upper bound drops below the lower bound
=================================================

The upper side grows like (2g-1)/2 n^(2g)/(2g)! and the lower side like
(2g-2) n^(2g)/(2g)!, so for g >= 2 the lower side eventually wins.  The
constants B and c0 only move the crossing point.
"""

from fractions import Fraction

from liedims.bounds import BoundParams, find_crossover

rep = find_crossover(BoundParams(g=2))
print(rep.n0, rep.diagnostic)
for n, upper, lower in rep.trace[25:32]:
    print(n, upper, lower)

for B in (Fraction(0), Fraction(1, 10), Fraction(1)):
    for c0 in (0, 10 ** 4):
        print(B, c0, find_crossover(BoundParams(B=B, c0=c0)).n0)
