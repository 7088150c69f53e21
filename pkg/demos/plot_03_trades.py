"""
Trading triangles for 5-cycles
==============================

A trade is a handful of grid cells whose triangles and edges can be
rearranged into 5-cycles.  Four shapes are used.  Here each one is built on
the K_{6,12,16} grid and expanded.
"""

from tripartite5 import Params
from tripartite5.core import CellRef as C
from tripartite5.trades import cycles_edges, expand_trade_to_cycles, make_trade, trade_edges

p = Params(6, 12, 16)

trades = [
    make_trade("1A", "row", [C(1, 2), C(2, 1)], [C(1, 13), C(1, 14), C(2, 13), C(2, 14)], p),
    make_trade("1B", "row", [C(3, 2), C(4, 1)], [C(3, 13), C(3, 14), C(13, 1), C(14, 1)], p),
    make_trade("1C", "row", [C(5, 1), C(6, 1)], [C(5, 13), C(5, 14), C(6, 13), C(6, 14)], p),
    make_trade("1E", "col", [C(7, 2), C(7, 3), C(7, 4)],
               [C(13, 2), C(14, 2), C(14, 3), C(15, 3), C(13, 4), C(15, 4)], p),
]

###############################################################################
# The roles are read off the cells.  Each trade turns two or three triangles
# plus a few loose edges into two or three 5-cycles on exactly the same edges.

for tr in trades:
    cycles = expand_trade_to_cycles(tr)
    same = cycles_edges(cycles) == trade_edges(tr, p)
    print(tr.kind, same)
    for cyc in cycles:
        print("   ", " ".join(str(v) for v in cyc))
