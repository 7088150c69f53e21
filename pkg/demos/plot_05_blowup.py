"""
From {3,5}-cycles to pure 5-cycles
==================================

Replacing each vertex by five copies turns a triangle into K_{5,5,5} and a
5-cycle into its 5-fold blowup.  Both split into 5-cycles, so a {3,5}-cycle
decomposition of K_{r,s,t} gives a 5-cycle decomposition of K_{5r,5s,5t}.
"""

import time

from tripartite5 import Params, blowup_decomposition, construct, verify
from tripartite5.blowup import b5_c5_cycles, k555_cycles
from tripartite5.core import R, S, T

###############################################################################
# A triangle becomes 15 cycles, a 5-cycle becomes 25.

print(len(k555_cycles((R(1), S(1), T(1)))), len(b5_c5_cycles((R(1), S(1), R(2), S(2), T(1)))))

###############################################################################
# The full pipeline on K_{25,27,33}.

dec = construct(Params(25, 27, 33)).decomposition()
start = time.perf_counter()
big = blowup_decomposition(dec)
print(big.params, len(big.cycles))
print(verify(big, (5,)).summary(), f"{time.perf_counter() - start:.2f}s")
