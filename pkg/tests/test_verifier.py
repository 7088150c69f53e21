from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from tripartite5.core import Decomposition, Params, R, S, T, wrap1
from tripartite5.expansion import construct
from tripartite5.verifier import verify

K333 = Params(3, 3, 3)


def latin_triangles(n):
    return [(R(j), S(i), T(wrap1(i + j - 1, n))) for i in range(1, n + 1) for j in range(1, n + 1)]


def kinds(outcome):
    return Counter(v.kind for v in outcome.violations)


def test_k333_latin_square():
    out = verify(Decomposition(K333, latin_triangles(3)))
    assert out.ok
    assert out.edges_seen == out.edges_expected == 27
    assert out.length_counts == {3: 9}
    assert out.summary() == "valid: 27 edges in 9x C3"


def test_duplicate_triangle():
    cycles = latin_triangles(3)
    cycles[-1] = cycles[0]
    out = verify(Decomposition(K333, cycles))
    assert not out.ok
    assert kinds(out) == {"DuplicateEdge": 3, "MissingEdge": 3}
    assert out.first().kind == "DuplicateEdge"


def test_intra_part_edge():
    cycles = latin_triangles(3) + [(R(1), R(2), S(1), T(1), S(2))]
    assert "IntraPartEdge" in kinds(verify(Decomposition(K333, cycles)))


def test_bad_length_and_index():
    assert "BadLength" in kinds(verify(Decomposition(K333, latin_triangles(3)), (5,)))
    bad = latin_triangles(3)[:-1] + [(R(4), S(3), T(1))]
    assert "BadIndex" in kinds(verify(Decomposition(K333, bad)))


def test_repeated_vertex():
    cyc = (R(1), S(1), R(1), S(2), T(1))
    assert "RepeatedVertex" in kinds(verify(Decomposition(K333, [cyc])))


def test_empty_decomposition_lists_missing_edges():
    out = verify(Decomposition(K333, []), max_violations=100)
    assert kinds(out) == {"MissingEdge": 27}


def test_violation_cap():
    out = verify(Decomposition(Params(10, 10, 10), []), max_violations=5)
    assert len(out.violations) == 5


_CON = construct(Params(25, 27, 33))
_GOOD = _CON.decomposition().cycles


def test_constructed_certificate_is_valid():
    assert verify(Decomposition(_CON.params, _GOOD)).ok


@settings(max_examples=40, deadline=None)
@given(st.integers(0, len(_GOOD) - 1), st.integers(0, 4), st.integers(1, 25))
def test_single_relabel_is_detected(idx, pos, new):
    cycles = list(_GOOD)
    cyc = list(cycles[idx])
    pos %= len(cyc)
    v = cyc[pos]
    new_v = type(v)(v.part, wrap1(v.index + new, _CON.params.size(v.part)))
    if new_v == v:
        return
    cyc[pos] = new_v
    cycles[idx] = tuple(cyc)
    assert not verify(Decomposition(_CON.params, cycles)).ok


@settings(max_examples=20, deadline=None)
@given(st.integers(0, len(_GOOD) - 1))
def test_dropping_a_cycle_is_detected(idx):
    cycles = _GOOD[:idx] + _GOOD[idx + 1:]
    out = verify(Decomposition(_CON.params, cycles))
    assert kinds(out) == {"MissingEdge": len(_GOOD[idx])}


@settings(max_examples=20, deadline=None)
@given(st.integers(0, len(_GOOD) - 1))
def test_duplicating_a_cycle_is_detected(idx):
    out = verify(Decomposition(_CON.params, _GOOD + [_GOOD[idx]]))
    assert kinds(out) == {"DuplicateEdge": len(_GOOD[idx])}


def test_cycle_order_and_rotation_do_not_matter():
    cycles = [c[1:] + c[:1] for c in reversed(_GOOD)]
    assert verify(Decomposition(_CON.params, cycles)).ok
