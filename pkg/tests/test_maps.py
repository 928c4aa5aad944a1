import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dp1.algebra import VVARS, parse_wpoly
from dp1.generators import random_case_d_instance
from dp1.maps import (CaseClass, MapError, case_d_map, check_constraints, classify_case,
                      coefficient_constraints, parse_map, solve_weights, transform_fibration)
from dp1.normal_form import Fibration

EX1_X = "w^2+z^3+x^5*y+t^24*x*y^5"
EX1_V = "s^2+r^3+p^5*q+p*q^5"


def fib(text, variables="xyzw"):
    return Fibration.from_wpoly(parse_wpoly(text, variables), allow_degenerate=True)


# -- weights -------------------------------------------------------------

@pytest.mark.parametrize("fwd,inv,m", [
    ((0, 6, 2, 3), (6, 0, 10, 15), 6),
    ((0, 0, 0, 0), (0, 0, 0, 0), 0),
    ((2, 0, 2, 3), (0, 2, 2, 3), 2),
])
def test_solve_weights(fwd, inv, m):
    mp = solve_weights(fwd)
    assert mp.inv == inv and mp.m == m


def test_solve_weights_rejects_bad_cd():
    with pytest.raises(MapError, match="2d = 3c"):
        solve_weights((0, 1, 2, 4))


def test_solve_weights_needs_a_zero():
    with pytest.raises(MapError):
        solve_weights((1, 1, 2, 3))


def test_parse_map_errors():
    with pytest.raises(MapError):
        parse_map("1,2")
    with pytest.raises(MapError):
        parse_map("a,b,c,d")


@given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 4))
def test_level_system_holds(a, b, k):
    if min(a, b, 2 * k) != 0:
        return
    mp = solve_weights((a, b, 2 * k, 3 * k))
    al, be, ga, de = mp.inv
    assert (a + al, b + be, 2 * k + ga, 3 * k + de) == (mp.m, mp.m, 2 * mp.m, 3 * mp.m)
    assert min(mp.inv) == 0 and 2 * de == 3 * ga


# -- case classes --------------------------------------------------------

def test_classify_examples():
    assert classify_case(solve_weights((2, 5, 0, 0))).tag == "A"
    d = classify_case(solve_weights((0, 6, 2, 3)))
    assert (d.tag, d.k, d.l, d.m) == ("D", 1, 5, 6)
    assert classify_case(solve_weights((3, 3, 0, 0))).tag == "C"
    assert classify_case(solve_weights((0, 3, 0, 0))).tag == "B"
    assert classify_case(solve_weights((0, 0, 0, 0))).tag == "IDENTITY"


def test_classify_reversed_and_swapped():
    c = classify_case(solve_weights((0, 0, 4, 6)))  # inverse is (2,2,0,0): shape C
    assert c.tag == "C" and c.reversed
    d = classify_case(solve_weights((2, 0, 2, 3)))
    assert d.tag == "D" and d.swapped and (d.k, d.l) == (1, 1)


@given(st.integers(0, 8), st.integers(0, 8), st.integers(0, 4))
def test_classification_invariant_under_swap(a, b, k):
    if min(a, b, 2 * k) != 0:
        return
    try:
        mp = solve_weights((a, b, 2 * k, 3 * k))
        c1 = classify_case(mp)
    except MapError:
        with pytest.raises(MapError):
            classify_case(solve_weights((b, a, 2 * k, 3 * k)))
        return
    c2 = classify_case(mp.swapped())
    assert (c1.tag, c1.k, c1.l, c1.a, c1.m) == (c2.tag, c2.k, c2.l, c2.a, c2.m)
    if c1.tag not in ("IDENTITY",) and a != b:
        assert c1.swapped != c2.swapped


# -- transforms ----------------------------------------------------------

def test_example1_transform():
    res = transform_fibration(fib(EX1_X), solve_weights((0, 6, 2, 3)))
    assert res.ok
    assert res.target.to_wpoly() == parse_wpoly(EX1_V, VVARS)
    assert res.cleared_valuation == 30


def test_identity_map():
    X = fib(EX1_X)
    res = transform_fibration(X, solve_weights((0, 0, 0, 0)))
    assert res.ok and res.target.to_wpoly().terms == X.to_wpoly().terms


def test_example3_transform_from_displayed_v():
    V = "s^2+r^3+t*r*p^2*q^2+t^7*p^6+t*q^6"
    X = fib("w^2+z^3+t*z*x^2*y^2+t*x^6+t^7*y^6")
    res = transform_fibration(X, solve_weights((0, 2, 2, 3)))
    assert res.ok and res.target.to_wpoly() == parse_wpoly(V, VVARS)


def test_failure_lists_every_violation():
    X = fib("w^2+z^3+x^5*y+x*y^5+y^6")
    res = transform_fibration(X, solve_weights((0, 6, 2, 3)))
    assert not res.ok
    sources = {v["source_monomial"] for v in res.violations}
    assert sources == {"x*y^5", "y^6"}
    req = {v["source_monomial"]: v["required_source_valuation"] for v in res.violations}
    assert req["x*y^5"] == 24


# -- valuation table -----------------------------------------------------

def test_constraint_table_k1_m6():
    table = dict(coefficient_constraints(CaseClass("D", 6, k=1, l=5)))
    assert table["b1"] == 0 and table["b2"] == 0
    assert table["a0"] == 4 and table["b0"] == 6
    assert table["f6[5]"] == 24


def test_constraint_table_k_equals_l():
    for k in range(1, 5):
        table = dict(coefficient_constraints(CaseClass("D", 2 * k, k=k, l=k)))
        assert table["b2"] == 2 * k


def test_k_zero_rejected():
    with pytest.raises(MapError):
        CaseClass("D", 6, k=0, l=6)


def test_check_constraints_examples():
    case = CaseClass("D", 6, k=1, l=5)
    assert check_constraints(fib(EX1_X), case).ok
    rep = check_constraints(fib("w^2+z^3+x*y^5"), case)
    assert not rep.ok
    assert rep.violations == [{"coefficient": "f6[5]", "valuation": 0, "required": 24}]
    assert check_constraints(fib("w^2+z^3"), case).degenerate


# -- properties on random case-D instances ---------------------------------

@settings(max_examples=40)
@given(st.integers(0, 10 ** 6))
def test_constraints_agree_with_transform(seed):
    rng = random.Random(seed)
    inst = random_case_d_instance(rng)
    X = inst.fibration
    # perturb a coefficient half the time so both verdicts occur
    if rng.random() < 0.5:
        X = Fibration.from_wpoly(X.to_wpoly() + parse_wpoly("x*y^5"), allow_degenerate=True)
    assert check_constraints(X, inst.case).ok == transform_fibration(X, inst.map).ok


@settings(max_examples=40)
@given(st.integers(0, 10 ** 6))
def test_round_trip(seed):
    inst = random_case_d_instance(random.Random(seed))
    fwd = transform_fibration(inst.fibration, inst.map)
    assert fwd.ok
    back = transform_fibration(fwd.target, inst.map.inverse())
    assert back.ok
    assert back.target.to_wpoly() == inst.fibration.to_wpoly()
    # the two clearings account for the full weighted degree 6m
    assert fwd.cleared_valuation + back.cleared_valuation == 6 * inst.m


@given(st.integers(1, 6), st.integers(1, 6), st.booleans())
def test_case_d_map_classifies_back(k, l, swap):
    c = classify_case(case_d_map(k, l, swap))
    assert c.tag == "D" and {c.k, c.l} == {k, l} and c.swapped == swap
