"""Tripartite vertices, cycles, and the latin representation of K_{r,s,t}.

The latin representation is a t x t grid of which only part is occupied:

* rows 1..s, columns 1..s hold the back-circulant square of order s,
* rows 1..s, columns s+1..t hold the entry equal to the column index,
* rows s+1..t, columns 1..r hold the entry equal to the row index.

A cell (i, j) with j <= r and i <= s is the triangle r_j s_i t_k, where k is
the entry.  Any other occupied cell in rows 1..s is the edge s_i t_k, and a
cell in rows s+1..t is the edge r_j t_k.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

PARTS = ("R", "S", "T")


class ConstructionError(RuntimeError):
    """Raised when the construction cannot proceed.

    ``step`` names the pipeline step that failed so harnesses can triage.
    """

    def __init__(self, message: str, step: str = "unknown"):
        super().__init__(f"[{step}] {message}")
        self.step = step


def wrap1(x: int, m: int) -> int:
    """Reduce ``x`` into 1..m (1-based residue)."""
    if m < 1:
        raise ValueError("modulus must be positive")
    return (x - 1) % m + 1


@dataclass(frozen=True)
class Params:
    r: int
    s: int
    t: int

    def __post_init__(self):
        if min(self.r, self.s, self.t) < 1:
            raise ValueError(f"part sizes must be positive: {self}")
        if not self.r <= self.s <= self.t:
            raise ValueError(f"part sizes must satisfy r <= s <= t: {self}")

    def size(self, part: str) -> int:
        return {"R": self.r, "S": self.s, "T": self.t}[part]

    @property
    def edge_count(self) -> int:
        return self.r * self.s + self.r * self.t + self.s * self.t

    def scaled(self, k: int) -> "Params":
        return Params(k * self.r, k * self.s, k * self.t)


class Vertex(NamedTuple):
    part: str
    index: int

    def __str__(self):
        return f"{self.part.lower()}{self.index}"

    @classmethod
    def parse(cls, label: str) -> "Vertex":
        part = label[:1].upper()
        if part not in PARTS or not label[1:].isdigit():
            raise ValueError(f"bad vertex label {label!r}")
        return cls(part, int(label[1:]))


def R(i: int) -> Vertex:
    return Vertex("R", i)


def S(i: int) -> Vertex:
    return Vertex("S", i)


def T(i: int) -> Vertex:
    return Vertex("T", i)


Cycle = tuple  # tuple[Vertex, ...] of length 3 or 5


def edge(u: Vertex, v: Vertex) -> frozenset:
    return frozenset((u, v))


def cycle_edges(cycle: Cycle) -> list[frozenset]:
    n = len(cycle)
    return [edge(cycle[k], cycle[(k + 1) % n]) for k in range(n)]


def cycle_is_valid(cycle: Cycle) -> bool:
    """Distinct vertices and every cyclic step crosses between parts."""
    n = len(cycle)
    if n < 3 or len(set(cycle)) != n:
        return False
    return all(cycle[k].part != cycle[(k + 1) % n].part for k in range(n))


@dataclass
class Decomposition:
    params: Params
    cycles: list = field(default_factory=list)

    def length_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for c in self.cycles:
            counts[len(c)] = counts.get(len(c), 0) + 1
        return counts


class CellRef(NamedTuple):
    row: int
    col: int


REGIONS = ("A", "B1", "B2", "C1", "C2", "D1", "D2")


def is_valid_cell(cell: CellRef, p: Params) -> bool:
    i, j = cell
    return (1 <= i <= p.s and 1 <= j <= p.t) or (p.s < i <= p.t and 1 <= j <= p.r)


def entry_of(cell: CellRef, p: Params) -> int:
    i, j = cell
    if i <= p.s:
        return wrap1(i + j - 1, p.s) if j <= p.s else j
    return i


def region_of(cell: CellRef, p: Params) -> str:
    if not is_valid_cell(cell, p):
        raise ValueError(f"cell {tuple(cell)} is outside the latin representation of {p}")
    i, j = cell
    if i > p.s:
        return "D1" if i <= p.t - 4 else "D2"
    if j <= p.r:
        return "A"
    if j <= p.s:
        e = entry_of(cell, p)
        in_b1 = (
            (j == p.r + 1 and e % 2 == 0)
            or (j == p.s - 1 and e % 2 == 1)
            or j == p.s
            or e == p.s
        )
        return "B1" if in_b1 else "B2"
    return "C1" if j <= p.t - 4 else "C2"


def cell_vertices(cell: CellRef, p: Params) -> tuple[Vertex, ...]:
    """The vertices of the triangle or edge a cell represents."""
    i, j = cell
    k = entry_of(cell, p)
    if i > p.s:
        return (R(j), T(k))
    if j <= p.r:
        return (R(j), S(i), T(k))
    return (S(i), T(k))


def cell_edges(cell: CellRef, p: Params) -> list[frozenset]:
    vs = cell_vertices(cell, p)
    if len(vs) == 2:
        return [edge(*vs)]
    return [edge(vs[0], vs[1]), edge(vs[0], vs[2]), edge(vs[1], vs[2])]


class LatinRep:
    """The filled latin representation plus a usage ledger.

    Every cell is claimed by at most one trade; a second claim raises.
    """

    def __init__(self, p: Params):
        self.params = p
        self.usage: dict[CellRef, int] = {}

    def entry(self, cell: CellRef) -> int:
        if not is_valid_cell(cell, self.params):
            raise ValueError(f"cell {tuple(cell)} is outside the latin representation")
        return entry_of(cell, self.params)

    def cells(self) -> Iterable[CellRef]:
        p = self.params
        for i in range(1, p.t + 1):
            for j in range(1, (p.t if i <= p.s else p.r) + 1):
                yield CellRef(i, j)

    def is_used(self, cell: CellRef) -> bool:
        return cell in self.usage

    def claim(self, cells: Iterable[CellRef], owner: int, step: str = "claim") -> None:
        cells = list(cells)
        for c in cells:
            if not is_valid_cell(c, self.params):
                raise ConstructionError(f"cell {tuple(c)} is not in the representation", step)
            if c in self.usage:
                raise ConstructionError(
                    f"cell {tuple(c)} already used by trade {self.usage[c]}", step
                )
        if len(set(cells)) != len(cells):
            raise ConstructionError(f"repeated cell in claim {cells}", step)
        for c in cells:
            self.usage[c] = owner

    def release(self, cells: Iterable[CellRef]) -> None:
        for c in cells:
            self.usage.pop(c, None)

    def to_csv(self, annotations: dict[CellRef, str] | None = None) -> str:
        """Dump rows 1..t as CSV; cells outside the representation are blank.

        With ``annotations`` each entry gets a ``_tag`` suffix, as in ``13_1A``.
        """
        p = self.params
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for i in range(1, p.t + 1):
            row = []
            for j in range(1, p.t + 1):
                c = CellRef(i, j)
                if not is_valid_cell(c, p):
                    row.append("")
                    continue
                text = str(entry_of(c, p))
                if annotations and c in annotations:
                    text += "_" + annotations[c]
                row.append(text)
            writer.writerow(row)
        return buf.getvalue()


def build_latin_rep(p: Params) -> LatinRep:
    return LatinRep(p)


def diagonal_cells(v: int, p: Params) -> list[CellRef]:
    """Cells of part A carrying entry ``v``, from column r down to column 1."""
    if not 1 <= v <= p.s:
        raise ValueError(f"diagonal {v} out of range 1..{p.s}")
    return [CellRef(wrap1(v - j + 1, p.s), j) for j in range(p.r, 0, -1)]


class DualCell(NamedTuple):
    """Two cells of diagonal ``diagonal`` in rows ``top_row`` and ``top_row + 1``."""

    diagonal: int
    top_row: int

    def offset(self, s: int) -> int:
        # column of the lower cell; the upper cell sits one column to the right
        return (self.diagonal - self.top_row) % s

    def cells(self, s: int) -> tuple[CellRef, CellRef]:
        c = self.offset(s)
        return CellRef(self.top_row, c + 1), CellRef(wrap1(self.top_row + 1, s), c)

    @property
    def is_odd(self) -> bool:
        return self.top_row % 2 == 1


def dual_cells_of_diagonal(v: int, p: Params) -> list[DualCell]:
    """All dual cells of diagonal ``v``, ordered from the column-r end."""
    if not 1 <= v <= p.s:
        raise ValueError(f"diagonal {v} out of range 1..{p.s}")
    # offset (v - i) mod s runs r-1 .. 1
    return [DualCell(v, wrap1(v - off, p.s)) for off in range(p.r - 1, 0, -1)]


def compare_dual_cells(a: DualCell, b: DualCell, label) -> int:
    """Three-way comparison in the dual-cell order; negative means ``a < b``.

    ``label`` is a :class:`~tripartite5.expansion.LabelMap`.  Diagonals are
    ranked by label; within one diagonal the dual cell nearer column r comes
    first.
    """
    s = label.s
    la, lb = label.label(a.diagonal), label.label(b.diagonal)
    if la != lb:
        return -1 if la < lb else 1
    oa, ob = a.offset(s), b.offset(s)
    if oa != ob:
        return -1 if oa > ob else 1
    return 0
