"""
Quotients by the metabelian ideal and the surface relation
==========================================================

The metabelian quotient has a closed-form dimension in each degree.
Adding the surface relation removes at most C(n-3+2g, 2g-1) more, and in
every computed case it removes exactly that many.
"""

from liedims.quotients import check_lower_bound, minus_dims_exact

g = 2
print("n  L  N'  N  bound  slack")
for n in range(2, 8):
    r = check_lower_bound(g, n)
    print(n, r.dim_L, r.dim_Znprime, r.dim_Zn, r.lower_bound_Zn, r.slack)

# conjugation minus parts, with the relation as an odd vector
for n in range(1, 6):
    print(n, minus_dims_exact(g, n))
