"""
Exhaustive search on small graphs
=================================

For graphs with a few dozen edges a backtracking search settles existence
outright.  It knows nothing about latin squares, so it gives an
independent check on the counting conditions.
"""

import time

from tripartite5 import Params
from tripartite5.oracle import SearchConfig, cross_validate, search

###############################################################################
# K_{5,5,5} splits into fifteen 5-cycles.

res = search(Params(5, 5, 5))
print(res.found, len(res.cycles), res.nodes)

###############################################################################
# Every instance with at most 30 edges, searched without counting shortcuts.
# A decomposition turns up only where the necessary conditions hold.

start = time.perf_counter()
for t in range(1, 31):
    for s in range(1, t + 1):
        for r in range(1, s + 1):
            if r * s + r * t + s * t <= 30:
                c = cross_validate(Params(r, s, t), SearchConfig(pruning=False))
                if c.found or c.necessary:
                    print((r, s, t), c.to_dict())
print(f"{time.perf_counter() - start:.1f}s")
