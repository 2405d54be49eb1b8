"""
Fibers of an exponent matrix and counted zeros
==============================================

Multi-indices alpha with |alpha| <= n - 2 are sorted by alpha D.  Each
fiber is no larger than the number of kernel vectors in a box, which in
turn caps the number of zeros an annihilator can have.
"""

from liedims.zeros import (
    AnnihilatorProfile,
    ExponentMatrix,
    count_vanishing_indices,
    fiber_partition,
    format_delta,
    vanishing_bound,
)

D = ExponentMatrix([[1, 0], [0, 1], [1, 0], [0, 1]])
rep = fiber_partition(D, 2, 5)
print(rep.total, rep.max_fiber, rep.kernel_box_count)
for delta, size in sorted(rep.fibers.items())[:6]:
    print(format_delta(delta), size)

# one root above each of two prefixes
profile = AnnihilatorProfile(1, 1, {(0,): [0], (1,): [2]})
print(count_vanishing_indices(D, profile, 2, 5), vanishing_bound(D, profile, 5))
