"""Cover parts B, C and D of the latin representation with partial trades.

Partial trades claim their outside cells in the representation's usage
ledger immediately; the part-A cells are bound later by
:mod:`tripartite5.expansion`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import CellRef, ConstructionError, LatinRep, Params, wrap1
from .trades import PartialTrade

C2_PAIRS = ((-3, -1), (-3, 0), (-2, -1), (-1, 0), (-3, -2), (-2, 0))  # offsets from t


@dataclass(frozen=True)
class DerivedConstants:
    a: int
    l: int

    @classmethod
    def of(cls, p: Params) -> "DerivedConstants":
        if (p.s - p.r) % 2 or (p.t - p.s) % 2:
            raise ConstructionError("part sizes must share parity", "constants")
        a, l = (p.s - p.r - 2) // 2, p.t - p.s - 4
        if a < 0 or l < 0:
            raise ConstructionError(f"a={a}, l={l} must be non-negative", "constants")
        return cls(a, l)


@dataclass
class PlacementState:
    rep: LatinRep
    partials: list = field(default_factory=list)
    f_formula: dict = field(default_factory=dict)
    f_measured: dict = field(default_factory=dict)
    f_after: dict = field(default_factory=dict)
    correction: str = "None"
    rerouted: bool = False
    max_c2_distance: int = 0

    @property
    def f(self) -> dict:
        """Current column-pair counts: after correction once it has run."""
        return self.f_after or self.f_measured

    @property
    def params(self) -> Params:
        return self.rep.params

    def add(self, kind, orient, cells, lines, step, group=0) -> PartialTrade:
        pt = PartialTrade(kind, orient, tuple(cells), tuple(lines), step, group, len(self.partials))
        self.rep.claim(pt.cells, pt.ident, step)
        self.partials.append(pt)
        return pt

    def by_step(self, step: str) -> list:
        return [pt for pt in self.partials if pt.step == step]


def _pair_key(p: Params, i: int, j: int) -> tuple[int, int]:
    return (p.t + i, p.t + j)


def compute_f(p: Params) -> dict:
    """Closed-form count of rows whose uncovered C2 cells sit in each column pair."""
    r, s, t = p.r, p.s, p.t
    if (s - r) % 2 or s <= r:
        raise ConstructionError("f is defined for odd r < s only", "compute_f")
    a = (s - r - 2) // 2
    if s < 2 * r + 4:
        f = {(t - 3, t - 1): 2 * r + 2 - s + a, (t - 3, t): a}
    else:
        f = {
            (t - 3, t - 1): (2 * r + 3 - (s - r) - 1) // 2 + s - (2 * r + 3),
            (t - 3, t): (2 * r + 4 - (s - r)) // 2,
        }
    f[(t - 2, t - 1)] = 1
    f[(t - 1, t)] = (s - r) // 2
    f[(t - 3, t - 2)] = 0
    f[(t - 2, t)] = 0
    for key, val in f.items():
        if val < 0:
            raise ConstructionError(f"f{key} = {val} is negative", "compute_f")
    return f


def uncovered_c2(state: PlacementState) -> dict[int, tuple[int, ...]]:
    """Row -> uncovered C2 columns, for rows with any."""
    p, rep = state.params, state.rep
    out = {}
    for row in range(1, p.s + 1):
        cols = tuple(c for c in range(p.t - 3, p.t + 1) if not rep.is_used(CellRef(row, c)))
        if cols:
            out[row] = cols
    return out


def measure_f(state: PlacementState) -> dict:
    p = state.params
    f = {_pair_key(p, i, j): 0 for i, j in C2_PAIRS}
    for row, cols in uncovered_c2(state).items():
        if len(cols) != 2:
            raise ConstructionError(f"row {row} has {len(cols)} uncovered C2 cells", "measure_f")
        f[cols] += 1
    return f


def rows_of_class(state: PlacementState, cols: tuple[int, int]) -> list[int]:
    """The rows l^{i,j}_1, l^{i,j}_2, ... with uncovered cells exactly in ``cols``."""
    return [row for row, c in sorted(uncovered_c2(state).items()) if c == cols]


def cover_B1(state: PlacementState) -> PlacementState:
    p, rep = state.params, state.rep
    r, s, t = p.r, p.s, p.t

    # odd entries: cells in columns s and s-1, rows e+1 and e+2
    for e in range(1, s - 1, 2):
        u, w = e + 1, e + 2
        cells = [CellRef(u, s), CellRef(w, s - 1)]
        _expect_entries(rep, cells, e, "cover_B1")
        state.add("1A", "row", cells + [CellRef(u, t - 2), CellRef(w, t - 2)],
                  (u, w), "B1_odd", e)

    # even entries: cells in columns r+1 and s, rows e-r and e+1 (distance r+1)
    for e in range(2, s, 2):
        u, w = wrap1(e - r, s), e + 1
        cells = [CellRef(u, r + 1), CellRef(w, s)]
        _expect_entries(rep, cells, e, "cover_B1")
        if e <= r + 1 or e >= 2 * r + 4:
            col = t
        elif r + 3 <= e <= min(2 * r + 3, s):
            col = t - 1
        else:  # unreachable for odd r: r+2 is odd
            raise ConstructionError(f"even entry {e} has no covering group", "cover_B1")
        state.add("1C", "row", cells + [CellRef(u, col), CellRef(w, col)],
                  (u, w), "B1_even", e)

    # s-cells of B: row i holds it in column s+1-i
    for i in range(1, (s - r) // 2 + 1):
        u, w = 2 * i - 1, 2 * i
        cells = [CellRef(u, s + 1 - u), CellRef(w, s + 1 - w)]
        _expect_entries(rep, cells, s, "cover_B1")
        state.add("1A", "row", cells + [CellRef(u, t - 3), CellRef(w, t - 3)],
                  (u, w), "B1_s", i)
    return state


def _expect_entries(rep: LatinRep, cells, value: int, step: str) -> None:
    for c in cells:
        if rep.entry(c) != value:
            raise ConstructionError(f"cell {tuple(c)} holds {rep.entry(c)}, expected {value}", step)


def cover_B2(state: PlacementState) -> PlacementState:
    p, rep = state.params, state.rep
    r, s = p.r, p.s
    for i in range(1, s - 1, 2):
        for j in range(2, (s - r) // 2 + 1):
            u, w = wrap1(i + 2 * j - 1, s), wrap1(i + 2 * j, s)
            cells = []
            for row in (u, w):
                for e in (i, i + 1):
                    col = wrap1(e - row + 1, s)
                    if not r < col <= s:
                        raise ConstructionError(
                            f"entry {e} of row {row} is not in part B", "cover_B2")
                    cells.append(CellRef(row, col))
            state.add("1A", "row", cells, (u, w), "B2", i)
    return state


def reroute_s_eq_r_plus_2(state: PlacementState) -> PlacementState:
    """For s = r+2, move the rows 3/4 partial trade from t-cells to (t-1)-cells."""
    p, rep = state.params, state.rep
    t = p.t
    for pt in state.by_step("B1_even"):
        if set(pt.lines) == {3, 4}:
            old = [c for c in pt.cells if c.col == t]
            if len(old) != 2:
                raise ConstructionError("rows 3/4 partial does not use t-cells", "reroute")
            new = [CellRef(c.row, t - 1) for c in old]
            rep.release(old)
            rep.claim(new, pt.ident, "reroute")
            pt.cells = tuple(c for c in pt.cells if c.col != t) + tuple(new)
            state.rerouted = True
            return state
    raise ConstructionError("no even B1 partial trade in rows 3 and 4", "reroute")


def apply_parity_correction(state: PlacementState) -> PlacementState:
    """Place pt1 and pt2 (type 1B), plus pt3 (type 1E) when (s-r-2)/2 is even."""
    p = state.params
    t = p.t
    a = (p.s - p.r - 2) // 2

    def row(cols, k):
        rows = rows_of_class(state, cols)
        if len(rows) < k:
            raise ConstructionError(f"no row l^{cols}_{k}", "parity_correction")
        return rows[k - 1]

    l1 = row((t - 2, t - 1), 1)
    l2 = row((t - 3, t), 1)
    pt3_rows = None
    if a % 2 == 0:
        pt3_rows = (row((t - 3, t - 1), 1), row((t - 3, t), 2), row((t - 1, t), 1))

    state.add("1B", "row",
              [CellRef(l1, t - 2), CellRef(l1, t - 1), CellRef(t - 2, 1), CellRef(t - 1, 1)],
              (l1,), "pt1")
    state.add("1B", "row",
              [CellRef(l2, t - 3), CellRef(l2, t), CellRef(t - 3, 1), CellRef(t, 1)],
              (l2,), "pt2")
    state.correction = "Pt1Pt2"
    if pt3_rows:
        x, y, z = pt3_rows
        state.add("1E", "row",
                  [CellRef(x, t - 3), CellRef(x, t - 1), CellRef(y, t - 3), CellRef(y, t),
                   CellRef(z, t - 1), CellRef(z, t)],
                  (x, z, y), "pt3")
        state.correction = "Pt1Pt2AndPt3"
    state.f_after = measure_f(state)
    odd = {k: v for k, v in state.f_after.items() if v % 2}
    if odd:
        raise ConstructionError(f"f still odd after correction: {odd}", "parity_correction")
    return state


def cover_C2_D2(state: PlacementState) -> PlacementState:
    p = state.params
    t = p.t
    pending: dict[tuple, int] = {}
    for row, cols in sorted(uncovered_c2(state).items()):
        if cols in pending:
            u = pending.pop(cols)
            state.max_c2_distance = max(state.max_c2_distance, row - u)
            state.add("1A", "row",
                      [CellRef(u, cols[0]), CellRef(u, cols[1]),
                       CellRef(row, cols[0]), CellRef(row, cols[1])],
                      (u, row), "C2")
        else:
            pending[cols] = row
    if pending:
        raise ConstructionError(f"unpaired C2 rows {pending}", "cover_C2")

    for rows in ((t - 3, t), (t - 2, t - 1)):
        free = [c for c in range(1, p.r + 1)
                if not any(state.rep.is_used(CellRef(d, c)) for d in rows)]
        if len(free) % 2:
            raise ConstructionError(f"odd number of free D2 columns for rows {rows}", "cover_D2")
        for k in range(0, len(free), 2):
            c1, c2 = free[k], free[k + 1]
            state.add("1C", "col",
                      [CellRef(rows[0], c1), CellRef(rows[1], c1),
                       CellRef(rows[0], c2), CellRef(rows[1], c2)],
                      (c1, c2), "D2", rows[0])
    return state


def cover_C1_D1(state: PlacementState, anchors) -> PlacementState:
    """Cover C1 and D1, one column group and one row group at a time.

    ``anchors[g-1] = (x, k)`` fixes the type 1B partial trade of group ``g``:
    C1 cells in row ``x`` and D1 cells in column ``k``.  It is chosen during
    expansion, where the matching A cells are picked.
    """
    p = state.params
    r, s = p.r, p.s
    groups = (p.t - s - 4) // 2
    if len(anchors) != groups:
        raise ConstructionError(f"need {groups} anchors, got {len(anchors)}", "cover_C1_D1")
    for g, (x, k) in enumerate(anchors, start=1):
        c1, c2 = s + 2 * g - 1, s + 2 * g
        state.add("1B", "row",
                  [CellRef(x, c1), CellRef(x, c2), CellRef(c1, k), CellRef(c2, k)],
                  (x,), "C1D1_1B", g)
        for m in range(1, s - 1, 2):
            u, w = wrap1(x + m, s), wrap1(x + m + 1, s)
            state.add("1A", "row",
                      [CellRef(u, c1), CellRef(u, c2), CellRef(w, c1), CellRef(w, c2)],
                      (u, w), "C1", g)
        for m in range(1, r - 1, 2):
            u, w = wrap1(k + m, r), wrap1(k + m + 1, r)
            state.add("1A", "col",
                      [CellRef(c1, u), CellRef(c2, u), CellRef(c1, w), CellRef(c2, w)],
                      (u, w), "D1", g)
    return state


def place_fixed(p: Params) -> PlacementState:
    """Everything up to (but excluding) C1/D1, whose anchors come from expansion."""
    state = PlacementState(LatinRep(p))
    DerivedConstants.of(p)
    cover_B1(state)
    cover_B2(state)
    state.f_formula = compute_f(p)
    state.f_measured = measure_f(state)
    if p.s == p.r + 2:
        reroute_s_eq_r_plus_2(state)
    apply_parity_correction(state)
    cover_C2_D2(state)
    return state


def coverage_table(state: PlacementState) -> dict[str, tuple[int, int]]:
    """Region -> (covered cells, total cells) for the diagnostic dump."""
    from .core import region_of

    out: dict[str, list[int]] = {}
    for c in state.rep.cells():
        reg = region_of(c, state.params)
        tot = out.setdefault(reg, [0, 0])
        tot[1] += 1
        if state.rep.is_used(c):
            tot[0] += 1
    return {k: tuple(v) for k, v in sorted(out.items())}
