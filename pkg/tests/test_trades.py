import pytest
from hypothesis import given, strategies as st

from tripartite5.core import CellRef, LatinRep, Params, R, S, T, cycle_is_valid
from tripartite5.expansion import construct
from tripartite5.trades import (
    KINDS,
    PatternError,
    bind_roles,
    cycles_edges,
    expand_roles,
    expand_trade_to_cycles,
    left_side_edges,
    make_trade,
    trade_edges,
    validate_trade_pattern,
)
from tripartite5.verifier import verify_trade_exchange

GRID = Params(6, 12, 16)
C = CellRef

# the four trades drawn on the K_{6,12,16} grid
GRID_TRADES = {
    "1A": ("row", [C(1, 2), C(2, 1)], [C(1, 13), C(1, 14), C(2, 13), C(2, 14)]),
    "1B": ("row", [C(3, 2), C(4, 1)], [C(3, 13), C(3, 14), C(13, 1), C(14, 1)]),
    "1C": ("row", [C(5, 1), C(6, 1)], [C(5, 13), C(5, 14), C(6, 13), C(6, 14)]),
    "1E": ("col", [C(7, 2), C(7, 3), C(7, 4)],
           [C(13, 2), C(14, 2), C(14, 3), C(15, 3), C(13, 4), C(15, 4)]),
}


@pytest.mark.parametrize("kind", KINDS)
def test_grid_trades_bind(kind):
    orient, a, out = GRID_TRADES[kind]
    tr = make_trade(kind, orient, a, out, GRID)
    assert validate_trade_pattern(tr, LatinRep(GRID))
    assert verify_trade_exchange(tr, GRID).ok


def test_grid_1a_roles():
    orient, a, out = GRID_TRADES["1A"]
    roles = bind_roles("1A", orient, a, out, GRID)
    assert roles == {"i_a": S(1), "j_a": S(2), "k_b": R(1), "l_b": R(2),
                     "1_c": T(2), "2_c": T(13), "3_c": T(14)}


def test_grid_1e_roles():
    orient, a, out = GRID_TRADES["1E"]
    roles = bind_roles("1E", orient, a, out, GRID)
    assert roles["i_a"] == S(7)
    assert [roles[k] for k in ("j_b", "k_b", "l_b")] == [R(2), R(3), R(4)]
    assert [roles[k] for k in ("1_c", "2_c", "3_c")] == [T(8), T(9), T(10)]
    assert {roles["4_c"], roles["5_c"], roles["6_c"]} == {T(13), T(14), T(15)}


@pytest.mark.parametrize("kind", KINDS)
def test_grid_trades_cover_their_cells(kind):
    orient, a, out = GRID_TRADES[kind]
    tr = make_trade(kind, orient, a, out, GRID)
    cycles = expand_trade_to_cycles(tr)
    assert all(len(c) == 5 and cycle_is_valid(c) for c in cycles)
    assert cycles_edges(cycles) == trade_edges(tr, GRID)


@pytest.mark.parametrize("kind, orient, a, out, msg", [
    ("1A", "row", [C(1, 2), C(3, 1)], [C(1, 13), C(1, 14), C(3, 13), C(3, 14)], "equal"),
    ("1A", "row", [C(1, 2), C(2, 1)], [C(1, 13), C(1, 14), C(2, 13), C(2, 15)], "differ"),
    ("1C", "row", [C(5, 1), C(6, 2)], [C(5, 13), C(5, 14), C(6, 13), C(6, 14)], "crossing"),
    ("1E", "col", [C(7, 2), C(7, 3), C(7, 4)],
     [C(13, 2), C(14, 2), C(14, 3), C(15, 3), C(13, 4), C(16, 4)], "triangle"),
    ("1A", "row", [C(1, 2)], [C(1, 13)], "needs"),
    ("1Z", "row", [], [], "unknown"),
])
def test_malformed_patterns(kind, orient, a, out, msg):
    with pytest.raises(PatternError, match=msg):
        bind_roles(kind, orient, a, out, GRID)


def test_tampered_roles_fail_validation():
    orient, a, out = GRID_TRADES["1B"]
    tr = make_trade("1B", orient, a, out, GRID)
    tr.roles = {**tr.roles, "2_c": T(15)}
    assert not validate_trade_pattern(tr, LatinRep(GRID))
    assert not verify_trade_exchange(tr, GRID).ok


# abstract role bindings: every exchange identity must balance for any
# distinct choice of vertices in the right parts
_ROLE_PARTS = {
    "1A": {"i_a": "a", "j_a": "a", "k_b": "b", "l_b": "b", "1_c": "c", "2_c": "c", "3_c": "c"},
    "1B": {"i_a": "a", "j_a": "a", "k_b": "b", "l_b": "b", "1_c": "c", "2_c": "c", "3_c": "c"},
    "1C": {"i_a": "a", "j_a": "a", "k_b": "b", "1_c": "c", "2_c": "c", "3_c": "c", "4_c": "c"},
    "1E": {"i_a": "a", "j_b": "b", "k_b": "b", "l_b": "b", "1_c": "c", "2_c": "c", "3_c": "c",
           "4_c": "c", "5_c": "c", "6_c": "c"},
}


@st.composite
def role_bindings(draw):
    kind = draw(st.sampled_from(KINDS))
    parts = draw(st.permutations([R, S]))
    makers = {"a": parts[0], "b": parts[1], "c": T}
    roles = {}
    for part in "abc":
        names = [n for n, x in _ROLE_PARTS[kind].items() if x == part]
        idx = draw(st.lists(st.integers(1, 40), min_size=len(names), max_size=len(names),
                            unique=True))
        roles.update({n: makers[part](i) for n, i in zip(names, idx)})
    return kind, roles


@given(role_bindings())
def test_exchange_identities_balance(binding):
    kind, roles = binding
    cycles = expand_roles(kind, roles)
    assert all(cycle_is_valid(c) for c in cycles)
    assert cycles_edges(cycles) == left_side_edges(kind, roles)


@pytest.mark.parametrize("triple", [(23, 25, 29), (23, 29, 33), (27, 33, 41)])
def test_constructed_trades_are_valid(triple):
    con = construct(Params(*triple))
    rep = LatinRep(con.params)
    kinds = set()
    for tr in con.trades:
        kinds.add((tr.kind, tr.orient))
        assert validate_trade_pattern(tr, rep), tr
        assert verify_trade_exchange(tr, con.params).ok, tr
    assert {k for k, _ in kinds} == set(KINDS)
