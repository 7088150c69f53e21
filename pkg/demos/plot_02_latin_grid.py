"""
The latin representation
========================

Every edge of K_{r,s,t} is a cell of one grid.  The s x r core holds a
back-circulant latin square; each core cell is the triangle on its row,
column and entry.  The extra columns and rows hold single S-T and R-T edges.
"""

from collections import Counter

from tripartite5 import Params
from tripartite5.core import CellRef, LatinRep, build_latin_rep, cell_edges, region_of

p = Params(6, 12, 16)
rep = build_latin_rep(p)

###############################################################################
# The first two rows, and the first row below the square.  Row 13 is the
# R-T extension: every cell in it holds t13.

for line in rep.to_csv().splitlines()[:2] + rep.to_csv().splitlines()[12:13]:
    print(line)

###############################################################################
# Each cell belongs to one region.  A is the core; B, C and D are the
# extensions, each split in two by how the construction treats them.

print(Counter(region_of(c, p) for c in rep.cells()))

###############################################################################
# The grid is an exact edge model: counting the edges of all cells gives each
# edge of K_{6,12,16} once.

seen = Counter()
for c in LatinRep(p).cells():
    seen.update(cell_edges(c, p))
print(len(seen), p.edge_count, set(seen.values()))

###############################################################################
# A cell reads as a triangle (core) or an edge (extension).

print(rep.entry(CellRef(3, 2)), rep.entry(CellRef(1, 13)), rep.entry(CellRef(13, 1)))
