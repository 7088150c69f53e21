from collections import Counter

import pytest
from hypothesis import given, strategies as st

from tripartite5.core import (
    CellRef,
    ConstructionError,
    DualCell,
    LatinRep,
    Params,
    R,
    S,
    T,
    Vertex,
    build_latin_rep,
    cell_edges,
    cell_vertices,
    compare_dual_cells,
    cycle_is_valid,
    diagonal_cells,
    dual_cells_of_diagonal,
    entry_of,
    region_of,
    wrap1,
)
from tripartite5.expansion import LabelMap

GRID = Params(6, 12, 16)


@pytest.mark.parametrize("x, m, want", [(13, 12, 1), (12, 12, 12), (-3, 12, 9), (1, 1, 1)])
def test_wrap1(x, m, want):
    assert wrap1(x, m) == want


def test_wrap1_rejects_bad_modulus():
    with pytest.raises(ValueError):
        wrap1(3, 0)


@given(st.integers(-10**6, 10**6), st.integers(1, 500))
def test_wrap1_range_and_congruence(x, m):
    y = wrap1(x, m)
    assert 1 <= y <= m and (y - x) % m == 0


def test_params_validation():
    assert Params(1, 2, 3).edge_count == 2 + 3 + 6
    with pytest.raises(ValueError):
        Params(3, 2, 4)
    with pytest.raises(ValueError):
        Params(0, 2, 4)


def test_vertex_labels_round_trip():
    v = R(12)
    assert str(v) == "r12"
    assert Vertex.parse("r12") == v
    assert Vertex.parse("T3") == T(3)
    for bad in ("x1", "r", "s1a", ""):
        with pytest.raises(ValueError):
            Vertex.parse(bad)


def test_cycle_validity():
    assert cycle_is_valid((R(1), S(1), T(1)))
    assert not cycle_is_valid((R(1), R(2), S(1), T(1), S(2)))
    assert not cycle_is_valid((R(1), S(1), R(1), S(2), T(1)))


class TestSmallGrid:
    """Entries of the K_{6,12,16} representation."""

    def test_part_a_entries(self):
        rep = build_latin_rep(GRID)
        assert rep.entry(CellRef(1, 2)) == 2
        assert rep.entry(CellRef(2, 1)) == 2
        assert rep.entry(CellRef(3, 2)) == 4
        assert rep.entry(CellRef(7, 4)) == 10

    def test_extension_entries(self):
        rep = build_latin_rep(GRID)
        assert rep.entry(CellRef(1, 13)) == 13
        assert rep.entry(CellRef(1, 14)) == 14
        assert rep.entry(CellRef(13, 1)) == 13
        assert rep.entry(CellRef(16, 6)) == 16

    def test_whole_rows(self):
        rows = build_latin_rep(GRID).to_csv().splitlines()
        assert rows[0] == "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16"
        assert rows[11] == "12,1,2,3,4,5,6,7,8,9,10,11,13,14,15,16"
        assert rows[12] == "13,13,13,13,13,13,,,,,,,,,,"

    def test_outside_cell_rejected(self):
        with pytest.raises(ValueError):
            build_latin_rep(GRID).entry(CellRef(13, 7))


def test_back_circulant_core_is_latin():
    p = Params(7, 11, 15)
    for i in range(1, p.s + 1):
        assert sorted(entry_of(CellRef(i, j), p) for j in range(1, p.s + 1)) == list(range(1, p.s + 1))
        assert sorted(entry_of(CellRef(j, i), p) for j in range(1, p.s + 1)) == list(range(1, p.s + 1))


@pytest.mark.parametrize("cell, region", [
    (CellRef(2, 7), "B1"),   # column r+1, even entry 8
    (CellRef(1, 13), "C2"),
    (CellRef(5, 5), "A"),
    (CellRef(13, 1), "D2"),
])
def test_region_examples(cell, region):
    assert region_of(cell, GRID) == region


@given(st.integers(1, 15).map(lambda k: 2 * k + 1), st.integers(1, 8), st.integers(0, 8))
def test_regions_partition(r, ds, dt):
    p = Params(r, r + 2 * ds, r + 2 * ds + 2 * dt)
    counts = Counter(region_of(c, p) for c in LatinRep(p).cells())
    assert counts["A"] == p.r * p.s
    assert counts["B1"] + counts["B2"] == p.s * (p.s - p.r)
    assert counts["C1"] + counts["C2"] == p.s * (p.t - p.s)
    assert counts["D1"] + counts["D2"] == p.r * (p.t - p.s)


def test_region_of_invalid_cell():
    with pytest.raises(ValueError):
        region_of(CellRef(14, 9), GRID)


def test_cell_edges_model():
    assert set(cell_vertices(CellRef(1, 13), GRID)) == {S(1), T(13)}
    assert set(cell_vertices(CellRef(13, 1), GRID)) == {R(1), T(13)}
    assert set(cell_vertices(CellRef(1, 1), GRID)) == {R(1), S(1), T(1)}
    assert len(cell_edges(CellRef(1, 1), GRID)) == 3


def test_cells_encode_every_edge_once():
    # only the A, C and D cells plus B cells (as S-T edges) form the model
    p = Params(5, 7, 11)
    seen = Counter()
    for c in LatinRep(p).cells():
        seen.update(cell_edges(c, p))
    assert len(seen) == p.edge_count
    assert set(seen.values()) == {1}


def test_diagonal_cells():
    cells = diagonal_cells(7, GRID)
    assert cells[0] == CellRef(2, 6)
    assert all(entry_of(c, GRID) == 7 for c in cells)
    assert {CellRef(1, 1), CellRef(8, 6)} <= set(diagonal_cells(1, GRID))
    assert diagonal_cells(5, GRID)[-1] == CellRef(5, 1)
    covered = Counter(c for v in range(1, 13) for c in diagonal_cells(v, GRID))
    assert len(covered) == GRID.r * GRID.s and set(covered.values()) == {1}


def test_dual_cells_of_diagonal():
    for v in (1, 5, 12):
        dcs = dual_cells_of_diagonal(v, GRID)
        assert len(dcs) == GRID.r - 1
        assert dcs[0].offset(GRID.s) == GRID.r - 1
        assert dcs[-1].offset(GRID.s) == 1
        for dc in dcs:
            a, b = dc.cells(GRID.s)
            assert entry_of(a, GRID) == entry_of(b, GRID) == v
            assert b.row == wrap1(a.row + 1, GRID.s)
            assert a.col <= GRID.r and b.col <= GRID.r


def test_compare_dual_cells_examples():
    label = LabelMap(25, 27)
    v1, v2 = label.diagonal(1), label.diagonal(2)
    a, b = DualCell(v1, wrap1(v1 - 3, 27)), DualCell(v2, wrap1(v2 - 20, 27))
    assert compare_dual_cells(a, b, label) < 0
    five, three = DualCell(v1, wrap1(v1 - 5, 27)), DualCell(v1, wrap1(v1 - 3, 27))
    assert compare_dual_cells(five, three, label) < 0
    assert compare_dual_cells(a, a, label) == 0


_label = LabelMap(19, 23)
_dual = st.builds(lambda v, off: DualCell(v, wrap1(v - off, 23)),
                  st.integers(1, 23), st.integers(1, 18))


@given(_dual, _dual, _dual)
def test_compare_dual_cells_total_order(a, b, c):
    ab, ba = compare_dual_cells(a, b, _label), compare_dual_cells(b, a, _label)
    assert (ab < 0) == (ba > 0) and (ab == 0) == (a == b)
    if ab <= 0 and compare_dual_cells(b, c, _label) <= 0:
        assert compare_dual_cells(a, c, _label) <= 0


class TestUsageLedger:
    def test_double_claim_raises(self):
        rep = LatinRep(GRID)
        rep.claim([CellRef(1, 1)], owner=0)
        with pytest.raises(ConstructionError, match="already used"):
            rep.claim([CellRef(1, 1)], owner=1)

    def test_claim_is_atomic(self):
        rep = LatinRep(GRID)
        rep.claim([CellRef(2, 2)], owner=0)
        with pytest.raises(ConstructionError):
            rep.claim([CellRef(3, 3), CellRef(2, 2)], owner=1)
        assert not rep.is_used(CellRef(3, 3))

    def test_release(self):
        rep = LatinRep(GRID)
        rep.claim([CellRef(1, 13)], owner=4)
        rep.release([CellRef(1, 13)])
        assert not rep.is_used(CellRef(1, 13))

    def test_csv_annotations(self):
        text = LatinRep(GRID).to_csv({CellRef(1, 2): "1A"})
        assert text.splitlines()[0].startswith("1,2_1A,3")
