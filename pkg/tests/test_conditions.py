import json

import pytest
from hypothesis import given, strategies as st

from tripartite5.conditions import (
    check_construction_domain,
    check_necessary,
    check_scaled,
    lemma_rs_lower_bound,
)
from tripartite5.core import Params


def test_k555_meets_necessary_conditions():
    rep = check_necessary(Params(5, 5, 5))
    assert rep.parity_ok and rep.divisibility_ok and rep.bound_ok
    assert rep.reasons == []


def test_divisibility_failure():
    rep = check_necessary(Params(1, 1, 3))
    assert rep.parity_ok and not rep.divisibility_ok
    assert "NotDivisibleBy5" in rep.reasons


def test_bound_failure():
    rep = check_necessary(Params(1, 1, 5))
    assert not rep.bound_ok and "BoundViolated" in rep.reasons


def test_supported_example():
    # 51 * 52 = 2652 <= 4 * 675 = 2700
    assert check_construction_domain(Params(25, 27, 33)).construction_supported


def test_smallest_t_equals_s_plus_4_example():
    # 47 * 48 = 2256 <= 4 * 575 = 2300
    assert check_construction_domain(Params(23, 25, 29)).construction_supported


@pytest.mark.parametrize("triple, tag", [
    ((19, 21, 23), "TIsSPlus2"),
    ((19, 19, 19), "EqualPartsUnsupported"),
    ((19, 19, 19), "TEqualsSUnsupported"),
    ((25, 27, 34), "ParityMismatch"),
    ((24, 26, 30), "EvenPartsUnsupported"),
    ((25, 27, 35), "InsufficientSlack"),
])
def test_rejection_reasons(triple, tag):
    rep = check_construction_domain(Params(*triple))
    assert not rep.construction_supported
    assert tag in rep.reasons


def test_divisibility_does_not_gate_construction():
    rep = check_construction_domain(Params(25, 27, 33))
    assert not rep.divisibility_ok and rep.construction_supported


def test_report_serialisation():
    rep = check_construction_domain(Params(19, 21, 23))
    data = json.loads(rep.to_json())
    assert data["params"] == [19, 21, 23]
    assert data["construction_supported"] is False
    assert "reasons: InsufficientSlack,TIsSPlus2" in rep.to_text()


def test_scaled_gate():
    assert check_scaled(Params(125, 135, 165)).construction_supported
    assert "NotMultipleOf5" in check_scaled(Params(126, 135, 165)).reasons


@pytest.mark.parametrize("triple", [(25, 27, 33), (10, 100, 20), (1, 2, 3)])
def test_lemma_examples(triple):
    assert lemma_rs_lower_bound(*triple)


def test_lemma_exhaustive_to_500():
    # for fixed r <= s the premise is weakest at t = s
    for s in range(1, 501):
        for r in range(1, s + 1):
            if (s + 18) * (r + s) <= 4 * r * s:
                assert r >= 18 and s >= 18


@given(st.integers(1, 120), st.integers(0, 120), st.integers(0, 120))
def test_supported_implies_necessary_parity_and_bound(r, ds, dt):
    p = Params(r, r + ds, r + ds + dt)
    rep = check_construction_domain(p)
    if rep.construction_supported:
        assert rep.parity_ok and rep.bound_ok
        assert p.s < 3 * p.r
        assert lemma_rs_lower_bound(p.r, p.s, p.t)
