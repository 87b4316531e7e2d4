import math

import pytest
from hypothesis import given, settings, strategies as st

from apsieve.cases import (
    EVEN_CONTRADICTION,
    LEHMER,
    SIEVE,
    build_case_templates,
    case_of,
    eliminate_even_case,
    get_template,
    instantiate,
    seven_cube_sum,
)


def test_twelve_templates():
    ts = build_case_templates()
    assert [t.id for t in ts] == list(range(1, 13))
    assert [t.branch for t in ts].count(EVEN_CONTRADICTION) == 4
    assert {t.id for t in ts if t.branch == EVEN_CONTRADICTION} == {5, 6, 11, 12}
    assert {t.id for t in ts if t.branch == SIEVE} == {1, 2, 3, 4}
    assert {t.id for t in ts if t.branch == LEHMER} == {7, 8, 9, 10}
    assert sorted({t.c0 for t in ts}) == [1, 2, 3, 4, 6, 12]


def test_case1_ternary_at_p5():
    t = get_template(1)
    assert t.a.value(5) == 2401
    assert t.b.value(5) == 1
    assert t.c0 == 12


def test_case10_descent_coefficient():
    t = get_template(10)
    # x = 2^(p-2) * 3^(p-1) * 7^(p-1) * w1^p
    assert t.x_coefficient.value(5) == 2**3 * 3**4 * 7**4
    assert t.x_coefficient.value(7) == 2**5 * 3**6 * 7**6


def test_instantiate():
    inst = instantiate(get_template(1), 7, 1)
    assert inst.a_value() == 7**6
    assert inst.b_value() == 1
    assert inst.c == 12

    inst = instantiate(get_template(4), 5, 2)
    assert inst.a_value() == 7**4
    assert inst.b_value() == 2**4 * 3**7
    assert inst.c == 4

    inst = instantiate(get_template(3), 5, 1)
    assert inst.a_value() == 2401
    assert inst.b_value() == 16
    assert inst.c == 3


def test_instantiate_errors():
    with pytest.raises(ValueError):
        instantiate(get_template(5), 5, 1)
    with pytest.raises(ValueError):
        instantiate(get_template(1), 3, 1)
    with pytest.raises(ValueError):
        instantiate(get_template(1), 5, 10**6 + 1)


def test_even_case_witnesses():
    for cid in (5, 6, 11, 12):
        w = eliminate_even_case(get_template(cid))
        assert w.c_v2 == 1
        for p in (5, 7, 11, 101, 20771):
            assert w.verify(p)
    with pytest.raises(ValueError):
        eliminate_even_case(get_template(1))


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=-10**6, max_value=10**6), st.integers(min_value=1, max_value=10**6))
def test_seven_cube_sum_identity(x, r):
    assert seven_cube_sum(x, r) == 7 * x * (x * x + 12 * r * r)


@settings(max_examples=500, deadline=None)
@given(st.integers(min_value=1, max_value=10**9), st.integers(min_value=1, max_value=10**6))
def test_gcd_class_of_coprime_pairs(x, r):
    if math.gcd(x, r) != 1:
        return
    g = math.gcd(x, x * x + 12 * r * r)
    assert g in {1, 2, 3, 4, 6, 12}
    assert g == math.gcd(x, 12)
    assert case_of(x, r) in range(1, 13)


def test_descent_reconstruction_for_sieve_cases():
    # Building (w1, w2) backwards: for each sieve case take w1, w2 and p,
    # form x from descent_eq1; if the ternary equation holds for some r,
    # then x, y = 7*w1*w2 satisfy the original seven-cube equation.
    for cid, p, w1, w2 in [(1, 5, 1, 1), (2, 5, 1, 1), (3, 5, 1, 1), (4, 5, 1, 1)]:
        t = get_template(cid)
        x = t.x_coefficient.value(p) * w1**p
        lhs = t.a.value(p) * w2**p - t.b.value(p) * w1 ** (2 * p)
        if lhs <= 0 or lhs % t.c0:
            continue
        rr = lhs // t.c0
        if math.isqrt(rr) ** 2 != rr:
            continue
        r = math.isqrt(rr)
        y = 7 * w1 * w2
        assert seven_cube_sum(x, r) == y**p
