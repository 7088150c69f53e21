"""The four trades used by the construction (types 1A, 1B, 1C and 1E).

A trade is a set of cells of the latin representation whose triangles and
edges can be re-partitioned into 5-cycles.  Each type comes in two
orientations, because the exchange identities are symmetric in the two
non-T parts:

``row``
    the "lines" of the trade are rows (S vertices); the non-A cells are
    B/C cells on those rows, i.e. S-T edges.
``col``
    the lines are columns (R vertices); the non-A cells are D cells in those
    columns, i.e. R-T edges.

Roles use the symbols of the exchange table: ``i_a, j_a`` for the lines,
``k_b, l_b`` for the crossing vertices and ``1_c ..`` for T vertices.  For
type 1E the crossing vertex is ``i_a`` and the lines are ``j_b, k_b, l_b``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .core import (
    CellRef,
    LatinRep,
    Params,
    R,
    S,
    T,
    cell_edges,
    cycle_edges,
    entry_of,
)

KINDS = ("1A", "1B", "1C", "1E")
ORIENTATIONS = ("row", "col")

# number of part-A cells and of outside cells in a complete trade
A_ARITY = {"1A": 2, "1B": 2, "1C": 2, "1E": 3}
OUTSIDE_ARITY = {"1A": 4, "1B": 4, "1C": 4, "1E": 6}


class PatternError(ValueError):
    pass


@dataclass
class PartialTrade:
    """Non-A cells of a trade, waiting for their part-A cells.

    ``lines`` lists the rows (or columns, for ``col`` orientation) that still
    need an A cell, in the order the binder fills them.
    """

    kind: str
    orient: str
    cells: tuple
    lines: tuple
    step: str
    group: int = 0
    ident: int = -1


@dataclass
class Trade:
    kind: str
    orient: str
    a_cells: tuple
    outside: tuple
    roles: dict = field(default_factory=dict)
    step: str = ""
    ident: int = -1

    @property
    def cells(self) -> tuple:
        return tuple(self.a_cells) + tuple(self.outside)


def _line(cell: CellRef, orient: str) -> int:
    return cell.row if orient == "row" else cell.col


def _cross(cell: CellRef, orient: str) -> int:
    return cell.col if orient == "row" else cell.row


def _line_vertex(orient: str):
    return S if orient == "row" else R


def _cross_vertex(orient: str):
    return R if orient == "row" else S


def _is_a(cell: CellRef, p: Params) -> bool:
    return 1 <= cell.row <= p.s and 1 <= cell.col <= p.r


def _is_outside(cell: CellRef, orient: str, p: Params) -> bool:
    if orient == "row":
        return 1 <= cell.row <= p.s and p.r < cell.col <= p.t
    return p.s < cell.row <= p.t and 1 <= cell.col <= p.r


def _values_on(cells, line: int, orient: str, p: Params, perpendicular=False) -> list[int]:
    # perpendicular=True selects outside cells of the *other* orientation
    o = ("col" if orient == "row" else "row") if perpendicular else orient
    return sorted(entry_of(c, p) for c in cells if _line(c, o) == line)


def bind_roles(kind: str, orient: str, a_cells, outside, p: Params) -> dict:
    """Derive the role binding of a trade from its cells.

    Raises :class:`PatternError` when the cells do not form the pattern.
    """
    if kind not in KINDS or orient not in ORIENTATIONS:
        raise PatternError(f"unknown trade {kind}/{orient}")
    a_cells, outside = list(a_cells), list(outside)
    if len(a_cells) != A_ARITY[kind] or len(outside) != OUTSIDE_ARITY[kind]:
        raise PatternError(f"{kind} needs {A_ARITY[kind]}+{OUTSIDE_ARITY[kind]} cells")
    if len(set(a_cells + outside)) != len(a_cells) + len(outside):
        raise PatternError("repeated cell")
    if not all(_is_a(c, p) for c in a_cells):
        raise PatternError("A cells must lie in part A")
    line_v, cross_v = _line_vertex(orient), _cross_vertex(orient)

    if kind == "1E":
        return _bind_1e(orient, a_cells, outside, p)

    a_i, a_j = a_cells
    i, j = _line(a_i, orient), _line(a_j, orient)
    if i == j:
        raise PatternError("A cells must lie on two different lines")
    e_i, e_j = entry_of(a_i, p), entry_of(a_j, p)

    if kind == "1B":
        # row i carries two outside cells; the crossing line of a_j carries
        # two cells of the other orientation with the same values
        k = _cross(a_j, orient)
        l = _cross(a_i, orient)
        other = "col" if orient == "row" else "row"
        if e_i != e_j or k == l:
            raise PatternError("1B needs two equal entries in distinct crossings")
        on_i = [c for c in outside if _is_outside(c, orient, p) and _line(c, orient) == i]
        on_k = [c for c in outside if _is_outside(c, other, p) and _line(c, other) == k]
        if len(on_i) != 2 or len(on_k) != 2:
            raise PatternError("1B outside cells misplaced")
        vals_i = sorted(entry_of(c, p) for c in on_i)
        vals_k = sorted(entry_of(c, p) for c in on_k)
        if vals_i != vals_k:
            raise PatternError("1B outside values differ")
        x, y = vals_i
        return {
            "i_a": line_v(i), "j_a": line_v(j), "k_b": cross_v(k), "l_b": cross_v(l),
            "1_c": T(e_i), "2_c": T(x), "3_c": T(y),
        }

    on_i = [c for c in outside if _is_outside(c, orient, p) and _line(c, orient) == i]
    on_j = [c for c in outside if _is_outside(c, orient, p) and _line(c, orient) == j]
    if len(on_i) != 2 or len(on_j) != 2:
        raise PatternError(f"{kind} outside cells misplaced")
    vals_i = sorted(entry_of(c, p) for c in on_i)
    vals_j = sorted(entry_of(c, p) for c in on_j)
    if vals_i != vals_j:
        raise PatternError(f"{kind} outside values differ between lines")
    x, y = vals_i

    if kind == "1A":
        if e_i != e_j:
            raise PatternError("1A needs equal entries")
        return {
            "i_a": line_v(i), "j_a": line_v(j),
            "k_b": cross_v(_cross(a_j, orient)), "l_b": cross_v(_cross(a_i, orient)),
            "1_c": T(e_i), "2_c": T(x), "3_c": T(y),
        }
    # 1C
    if _cross(a_i, orient) != _cross(a_j, orient):
        raise PatternError("1C needs both A cells on one crossing line")
    return {
        "i_a": line_v(i), "j_a": line_v(j), "k_b": cross_v(_cross(a_i, orient)),
        "1_c": T(e_i), "2_c": T(e_j), "3_c": T(x), "4_c": T(y),
    }


def _bind_1e(orient, a_cells, outside, p) -> dict:
    line_v, cross_v = _line_vertex(orient), _cross_vertex(orient)
    crosses = {_cross(c, orient) for c in a_cells}
    lines = [_line(c, orient) for c in a_cells]
    if len(crosses) != 1 or len(set(lines)) != 3:
        raise PatternError("1E needs three A cells on one crossing line")
    sets = []
    for ln in lines:
        on = [c for c in outside if _is_outside(c, orient, p) and _line(c, orient) == ln]
        if len(on) != 2:
            raise PatternError("1E outside cells misplaced")
        sets.append({entry_of(c, p) for c in on})
    sj, sk, sl = sets
    five, six, four = sj & sk, sk & sl, sl & sj
    if not (len(five) == len(six) == len(four) == 1) or len(sj | sk | sl) != 3:
        raise PatternError("1E outside values do not form a triangle")
    (cross,) = crosses
    j, k, l = lines
    return {
        "i_a": cross_v(cross), "j_b": line_v(j), "k_b": line_v(k), "l_b": line_v(l),
        "1_c": T(entry_of(a_cells[0], p)), "2_c": T(entry_of(a_cells[1], p)),
        "3_c": T(entry_of(a_cells[2], p)),
        "4_c": T(four.pop()), "5_c": T(five.pop()), "6_c": T(six.pop()),
    }


def make_trade(kind, orient, a_cells, outside, p: Params, step="", ident=-1) -> Trade:
    roles = bind_roles(kind, orient, a_cells, outside, p)
    return Trade(kind, orient, tuple(a_cells), tuple(outside), roles, step, ident)


def expand_roles(kind: str, roles: dict) -> list[tuple]:
    """The 5-cycles on the right-hand side of the exchange table."""
    g = roles.__getitem__
    if kind == "1A":
        return [
            (g("i_a"), g("l_b"), g("1_c"), g("j_a"), g("2_c")),
            (g("i_a"), g("1_c"), g("k_b"), g("j_a"), g("3_c")),
        ]
    if kind == "1B":
        return [
            (g("i_a"), g("l_b"), g("1_c"), g("k_b"), g("2_c")),
            (g("i_a"), g("1_c"), g("j_a"), g("k_b"), g("3_c")),
        ]
    if kind == "1C":
        return [
            (g("i_a"), g("k_b"), g("2_c"), g("j_a"), g("3_c")),
            (g("i_a"), g("1_c"), g("k_b"), g("j_a"), g("4_c")),
        ]
    if kind == "1E":
        return [
            (g("i_a"), g("1_c"), g("j_b"), g("4_c"), g("l_b")),
            (g("i_a"), g("2_c"), g("k_b"), g("5_c"), g("j_b")),
            (g("i_a"), g("3_c"), g("l_b"), g("6_c"), g("k_b")),
        ]
    raise ValueError(f"unknown trade kind {kind}")


def left_side_edges(kind: str, roles: dict) -> Counter:
    """Edge multiset of the left-hand side of the exchange table, from roles."""
    g = roles.__getitem__

    def tri(a, b, c):
        return [frozenset((a, b)), frozenset((b, c)), frozenset((a, c))]

    def path(*vs):
        return [frozenset((vs[n], vs[(n + 1) % len(vs)])) for n in range(len(vs))]

    if kind == "1A":
        es = tri(g("i_a"), g("l_b"), g("1_c")) + tri(g("j_a"), g("k_b"), g("1_c"))
        es += path(g("i_a"), g("2_c"), g("j_a"), g("3_c"))
    elif kind == "1B":
        es = tri(g("i_a"), g("l_b"), g("1_c")) + tri(g("j_a"), g("k_b"), g("1_c"))
        es += path(g("i_a"), g("2_c"), g("k_b"), g("3_c"))
    elif kind == "1C":
        es = tri(g("i_a"), g("k_b"), g("1_c")) + tri(g("j_a"), g("k_b"), g("2_c"))
        es += path(g("i_a"), g("3_c"), g("j_a"), g("4_c"))
    elif kind == "1E":
        es = tri(g("i_a"), g("j_b"), g("1_c")) + tri(g("i_a"), g("k_b"), g("2_c"))
        es += tri(g("i_a"), g("l_b"), g("3_c"))
        es += path(g("j_b"), g("4_c"), g("l_b"), g("6_c"), g("k_b"), g("5_c"))
    else:
        raise ValueError(f"unknown trade kind {kind}")
    return Counter(es)


def trade_edges(tr: Trade, p: Params) -> Counter:
    """Edge multiset represented by the trade's cells in the latin model."""
    out: Counter = Counter()
    for c in tr.cells:
        out.update(cell_edges(c, p))
    return out


def expand_trade_to_cycles(tr: Trade) -> list[tuple]:
    return expand_roles(tr.kind, tr.roles)


def cycles_edges(cycles) -> Counter:
    out: Counter = Counter()
    for c in cycles:
        out.update(cycle_edges(c))
    return out


def validate_trade_pattern(tr: Trade, rep: LatinRep) -> bool:
    """True iff the trade's cells realise its kind's pattern with its roles."""
    try:
        roles = bind_roles(tr.kind, tr.orient, tr.a_cells, tr.outside, rep.params)
    except PatternError:
        return False
    return roles == tr.roles
