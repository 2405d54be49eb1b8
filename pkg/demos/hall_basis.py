"""
A Hall basis sorted by derived level
====================================

Level 0 holds the generators, level 1 the left-normed brackets of
generators, level 2 brackets of level-1 elements, and so on.  Summing a
degree column over the levels gives the Witt dimension again.
"""

from liedims.combinatorics import witt_dimension
from liedims.hall import bigrade_dims, generate_hall, verify_hall_spans

table = generate_hall(4, 8)
dims = bigrade_dims(4, 8, table)
for i in range(1, 9):
    print(i, dims.column(i), dims.degree_total(i), witt_dimension(4, i))

# levels >= 2 span exactly the third derived piece
for n in (4, 5, 6):
    print(verify_hall_spans(4, n, table=table))
