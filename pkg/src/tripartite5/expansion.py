"""Bind part-A cells to every partial trade and emit the decomposition.

Part A is traversed diagonal by diagonal in the order given by the labelling
``L``; within a diagonal, from column r towards column 1.  Columns 1-3 and
r-1, r are kept out of the general traversal: the correction trades pt1-pt3
take their cells from columns 1 and 2, and the C1/D1/D2 trades take whole
diagonals.

Binding order: correction trades, whole-diagonal trades (taken from the end
of the label order), then the row-driven steps B1, C2, B2 and C1 scanning
from the front.  Every trade owns disjoint cells, so the order only affects
which cells are chosen, never correctness.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .conditions import check_construction_domain
from .core import (
    CellRef,
    ConstructionError,
    Decomposition,
    DualCell,
    Params,
    cell_vertices,
    wrap1,
)
from .placement import (
    PlacementState,
    cover_C1_D1,
    place_fixed,
)
from .trades import Trade, expand_trade_to_cycles, make_trade

TAIL_STEPS = ("C1D1", "D1", "D2")
STEPS = ("pt", "C1D1", "D1", "D2", "B1_even", "B1_odd", "B1_s", "C2", "B2", "C1")


class LabelMap:
    """The bijection diagonal -> label and its inverse.

    ``from_label[1] = r+2``; each next diagonal is ``r-3`` further on, or
    ``r-5`` further when that one is already labelled (all mod s).
    """

    def __init__(self, r: int, s: int):
        self.r, self.s = r, s
        inv = [wrap1(r + 2, s)]
        seen = {inv[0]}
        for _ in range(s - 1):
            nxt = wrap1(inv[-1] + r - 3, s)
            if nxt in seen:
                nxt = wrap1(inv[-1] + r - 5, s)
            if nxt in seen:
                raise ConstructionError(
                    f"labelling stalls after {len(inv)} diagonals", "label_map")
            inv.append(nxt)
            seen.add(nxt)
        self.from_label = {i + 1: v for i, v in enumerate(inv)}
        self.to_label = {v: i for i, v in self.from_label.items()}

    def label(self, v: int) -> int:
        return self.to_label[v]

    def diagonal(self, lab: int) -> int:
        return self.from_label[lab]

    def in_order(self) -> list[int]:
        return [self.from_label[i] for i in range(1, self.s + 1)]


def build_label_map(p: Params) -> LabelMap:
    return LabelMap(p.r, p.s)


def find_x(label: LabelMap, p: Params) -> int:
    """Smallest x with both x and x+r+1 labelled below s-2."""
    for x in range(1, p.s + 1):
        if label.label(x) < p.s - 2 and label.label(wrap1(x + p.r + 1, p.s)) < p.s - 2:
            return x
    raise ConstructionError("no diagonal pair with small labels", "find_x")


@dataclass
class BudgetReport:
    reserved_columns_cells: int
    ignored_by_step: dict
    total_ignored: int
    bound: int
    a_cells_used: int
    outside_cells: int
    leftover_triangles: int

    def to_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass
class Construction:
    params: Params
    placement: PlacementState
    label: LabelMap
    x: int
    trades: list = field(default_factory=list)
    triangles: list = field(default_factory=list)
    budget: BudgetReport | None = None

    def decomposition(self) -> Decomposition:
        cycles = []
        for tr in self.trades:
            cycles.extend(expand_trade_to_cycles(tr))
        cycles.extend(self.triangles)
        return Decomposition(self.params, cycles)


class Binder:
    """Shared cursor machinery over part A."""

    def __init__(self, state: PlacementState, label: LabelMap):
        self.state = state
        self.rep = state.rep
        self.p = state.params
        self.label = label
        self.order = label.in_order()
        self.lo, self.hi = 4, self.p.r - 2  # allowed columns
        self.trades: list[Trade] = []
        self.span: dict[int, list] = {}  # diagonal -> [first step, min col, max col]
        self.tail_diagonals: dict[int, str] = {}  # diagonal -> whole-diagonal step
        self.step = ""

    # -- cells ---------------------------------------------------------
    def free(self, cell: CellRef) -> bool:
        return not self.rep.is_used(cell)

    def allowed(self, col: int) -> bool:
        return self.lo <= col <= self.hi

    def diag_cell(self, v: int, col: int) -> CellRef:
        return CellRef(wrap1(v - col + 1, self.p.s), col)

    def diag_of(self, cell: CellRef) -> int:
        return wrap1(cell.row + cell.col - 1, self.p.s)

    def dual_order(self, start: int = 0):
        """Allowed dual cells in the global order, from label index ``start``."""
        s = self.p.s
        for v in self.order[start:]:
            for off in range(self.hi - 1, self.lo - 1, -1):
                yield DualCell(v, wrap1(v - off, s))

    def dual_free(self, dc: DualCell) -> bool:
        a, b = dc.cells(self.p.s)
        return self.free(a) and self.free(b)

    # -- binding -------------------------------------------------------
    def bind(self, pt, a_cells) -> Trade:
        tr = make_trade(pt.kind, pt.orient, a_cells, pt.cells, self.p, pt.step, pt.ident)
        self.rep.claim(a_cells, pt.ident, self.step)
        for c in a_cells:
            if not self.allowed(c.col):
                continue
            if self.step in TAIL_STEPS:
                self.tail_diagonals.setdefault(self.diag_of(c), self.step)
            else:
                span = self.span.setdefault(self.diag_of(c), [self.step, c.col, c.col])
                span[1], span[2] = min(span[1], c.col), max(span[2], c.col)
        self.trades.append(tr)
        return tr

    def bind_rows_by_dual_cells(self, partials, start: int = 0) -> None:
        """First-fit scan: each free dual cell serves a pending partial on its rows."""
        pending: dict[int, list] = {}
        for pt in partials:
            pending.setdefault(pt.lines[0], []).append(pt)
        left = len(partials)
        if not left:
            return
        for dc in self.dual_order(start):
            queue = pending.get(dc.top_row)
            if not queue or not self.dual_free(dc):
                continue
            pt = queue.pop(0)
            if pt.lines[1] != wrap1(dc.top_row + 1, self.p.s):
                raise ConstructionError(f"partial {pt.ident} rows are not adjacent", self.step)
            self.bind(pt, dc.cells(self.p.s))
            left -= 1
            if not left:
                return
        rows = sorted(r for r, q in pending.items() if q)
        raise ConstructionError(f"ran out of dual cells for rows {rows}", self.step)


def expand_pt(b: Binder) -> None:
    """The correction trades sit at fixed cells of columns 1 and 2."""
    state, s = b.state, b.p.s
    b.step = "pt"
    for pt in state.by_step("pt1") + state.by_step("pt2"):
        (row,) = pt.lines
        b.bind(pt, (CellRef(row, 2), CellRef(wrap1(row + 1, s), 1)))
    for pt in state.by_step("pt3"):
        b.bind(pt, tuple(CellRef(row, 2) for row in pt.lines))


def expand_B1_C2(b: Binder, x: int) -> None:
    state, p = b.state, b.p
    s, r = p.s, p.r

    # even B1 cells: 1C trades, both A cells in one column, on diagonals v and v+r+1
    b.step = "B1_even"
    pos = b.order.index(x)
    for pt in sorted(state.by_step("B1_even"), key=lambda q: q.group):
        u, w = pt.lines
        for k in range(pos, pos + s):
            v = b.order[k % s]
            col = wrap1(v - u + 1, s)
            cu, cw = CellRef(u, col), CellRef(w, col)
            if col <= r and b.allowed(col) and b.free(cu) and b.free(cw):
                pos = k % s
                b.bind(pt, (cu, cw))
                break
        else:
            raise ConstructionError(f"no column for even entry {pt.group}", b.step)

    b.step = "B1_odd"
    b.bind_rows_by_dual_cells(state.by_step("B1_odd"))
    b.step = "B1_s"
    b.bind_rows_by_dual_cells(state.by_step("B1_s"))

    # C2: rows at distance 2 use every other cell of a diagonal, then distance 1
    b.step = "C2"
    far = [pt for pt in state.by_step("C2") if pt.lines[1] - pt.lines[0] == 2]
    near = [pt for pt in state.by_step("C2") if pt.lines[1] - pt.lines[0] == 1]
    for pt in far:
        u, w = pt.lines
        for v in b.order:
            col = wrap1(v - u + 1, s)
            cu, cw = CellRef(u, col), CellRef(w, col - 2)
            if b.allowed(col) and b.allowed(col - 2) and b.free(cu) and b.free(cw):
                b.bind(pt, (cu, cw))
                break
        else:
            raise ConstructionError(f"no diagonal for C2 rows {pt.lines}", b.step)
    b.bind_rows_by_dual_cells(near)


def psi(b: Binder, anchor: DualCell, i: int) -> DualCell:
    """Smallest free allowed dual cell >= anchor with top row anchor.top_row + i."""
    s = b.p.s
    want = wrap1(anchor.top_row + i, s)
    started = False
    for dc in b.dual_order(b.order.index(anchor.diagonal)):
        if not started:
            started = dc == anchor
            if not started:
                continue
        if dc.top_row == want and b.dual_free(dc):
            return dc
    raise ConstructionError(f"psi exhausted for row {want}", b.step)


def expand_B2(b: Binder) -> None:
    """Bind each B2 partial to the first free dual cell on its two rows.

    This is repeated psi from the smallest dual cell; the per-row demand is
    max(0, a-k+1) for rows (2k-1, 2k) and min(k-1, a) for rows (2k, 2k+1).
    """
    b.step = "B2"
    b.bind_rows_by_dual_cells(b.state.by_step("B2"))


def choose_C1D1_anchors(b: Binder) -> tuple[int, list]:
    """Last fully unused diagonal, cut into l/2 dual cells from column r."""
    p = b.p
    groups = (p.t - p.s - 4) // 2
    if groups == 0:
        return 0, []
    for v in reversed(b.order):
        if all(b.free(b.diag_cell(v, c)) for c in range(1, p.r + 1)):
            anchors = []
            for g in range(1, groups + 1):
                top = b.diag_cell(v, p.r - 2 * g + 2)
                anchors.append((top.row, p.r - 2 * g + 1))
            return v, anchors
    raise ConstructionError("no unused diagonal for the C1/D1 type 1B trades", "C1D1")


def expand_D(b: Binder) -> list:
    """Bind everything that needs whole diagonals: the C1/D1 type 1B trades, D1, D2.

    These run before the row-driven steps and take diagonals from the end of
    the label order, so the row steps still see an almost empty part A.
    Returns the C1/D1 anchors.
    """
    state, p = b.state, b.p
    s = p.s
    tail = list(reversed(b.order))

    b.step = "C1D1"
    _, anchors = choose_C1D1_anchors(b)
    cover_C1_D1(state, anchors)
    for pt in state.by_step("C1D1_1B"):
        x, k = anchors[pt.group - 1]
        b.bind(pt, (CellRef(x, k + 1), CellRef(wrap1(x + 1, s), k)))

    def same(v, c1, c2):
        return b.diag_cell(v, c1), b.diag_cell(v, c2)

    def adjacent(v, c1, c2):
        return b.diag_cell(v, c1), b.diag_cell(wrap1(v + 1, s), c2)

    # D1 (1A, one diagonal per row group) and D2 (1C on diagonals v, v+1)
    jobs = [("D1", g, same) for g in range(1, len(anchors) + 1)]
    jobs += [("D2", rows, adjacent) for rows in (p.t - 3, p.t - 2)]
    for step, group_id, cells_on in jobs:
        b.step = step
        group = [pt for pt in state.by_step(step) if pt.group == group_id]
        for v in tail:
            cells = [cells_on(v, *pt.lines) for pt in group]
            if all(b.free(x) and b.free(y) for x, y in cells):
                for pt, pair in zip(group, cells):
                    b.bind(pt, pair)
                break
        else:
            raise ConstructionError(f"no free diagonal for {step} group {group_id}", step)
    return anchors


def expand_C1(b: Binder, groups: int) -> None:
    b.step = "C1"
    for g in range(1, groups + 1):
        b.bind_rows_by_dual_cells([pt for pt in b.state.by_step("C1") if pt.group == g])


def _budget(b: Binder) -> BudgetReport:
    """Count the part-A cells the traversal passed over without using.

    On a diagonal used by a row-driven step, the unused allowed cells between
    the outermost bound cells were skipped and are charged to the first step
    that used the diagonal.  A diagonal taken whole by the C1/D1/D2 steps is
    charged all of its unused allowed cells.  Untouched stretches are spare
    capacity, not ignored cells.
    """
    p = b.p
    ignored = {step: 0 for step in STEPS}
    for v in b.order:
        if v in b.tail_diagonals:
            step, lo, hi = b.tail_diagonals[v], b.lo, b.hi
        elif v in b.span:
            step, lo, hi = b.span[v]
        else:
            continue
        ignored[step] += sum(1 for col in range(lo, hi + 1) if b.free(b.diag_cell(v, col)))
    a_used = sum(1 for c in b.rep.usage if c.row <= p.s and c.col <= p.r)
    outside = len(b.rep.usage) - a_used
    reserved = 5 * p.s
    return BudgetReport(
        reserved_columns_cells=reserved,
        ignored_by_step=ignored,
        total_ignored=reserved + sum(ignored.values()),
        bound=9 * (p.r + p.s),
        a_cells_used=a_used,
        outside_cells=outside,
        leftover_triangles=p.r * p.s - a_used,
    )


def construct(p: Params) -> Construction:
    """Run placement and expansion; returns the full construction record."""
    report = check_construction_domain(p)
    if not report.construction_supported:
        raise ConstructionError(f"unsupported instance {p}: {report.reasons}", "gate")
    state = place_fixed(p)
    label = build_label_map(p)
    x = find_x(label, p)
    b = Binder(state, label)
    expand_pt(b)
    anchors = expand_D(b)
    expand_B1_C2(b, x)
    expand_B2(b)
    expand_C1(b, len(anchors))

    missing = [c for c in state.rep.cells() if not (c.row <= p.s and c.col <= p.r)
               and not state.rep.is_used(c)]
    if missing:
        raise ConstructionError(f"{len(missing)} cells outside A left uncovered", "final")
    triangles = []
    for i in range(1, p.s + 1):
        for j in range(1, p.r + 1):
            c = CellRef(i, j)
            if not state.rep.is_used(c):
                rv, sv, tv = cell_vertices(c, p)
                triangles.append((rv, sv, tv))
    con = Construction(p, state, label, x, b.trades, triangles)
    con.budget = _budget(b)
    return con


def construct_decomposition(p: Params) -> tuple[Decomposition, BudgetReport]:
    con = construct(p)
    return con.decomposition(), con.budget
