"""
Building a {3,5}-cycle decomposition
====================================

The constructor covers every extension cell with partial trades, then
completes each one with cells from the core.  Core cells left over stay
triangles.  The result is checked by an independent verifier.
"""

from collections import Counter

from tripartite5 import Params, construct, verify

con = construct(Params(25, 27, 33))
dec = con.decomposition()

###############################################################################
# How many trades of each kind, and which steps placed them.

print(Counter(tr.kind for tr in con.trades))
print(Counter(tr.step for tr in con.trades))

###############################################################################
# The decomposition: triangles plus 5-cycles, 2391 edges in all.

print(Counter(len(c) for c in dec.cycles))
print(verify(dec).summary())

###############################################################################
# Each trade uses twice as many extension cells as core cells.  The budget
# report counts core cells passed over during expansion against 9(r+s).

b = con.budget
print(b.outside_cells, b.a_cells_used, b.total_ignored, b.bound)
