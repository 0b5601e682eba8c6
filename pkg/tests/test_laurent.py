"""Core exact-arithmetic checks: Laurent polynomials and rational functions."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symgroupoid.laurent import (
    GeneratorTable,
    LaurentPoly,
    Q,
    RationalFn,
    SingularPointError,
    exact_poly_div,
)

T = GeneratorTable(["w:a", "w:b", "w:c"])
W1 = GeneratorTable(["w:x"])


def gen(name, power=1, table=T):
    return LaurentPoly.generator(table, name, power)


def rf(p):
    return RationalFn.from_poly(p)


def test_difference_of_squares():
    w = gen("w:x", table=W1)
    one = LaurentPoly.one(W1)
    assert (w + one) * (w - one) == w ** 2 - one


def test_division_keeps_normalized_pair():
    w = gen("w:x", table=W1)
    one = LaurentPoly.one(W1)
    f = rf(w ** 2 - one) / rf(w - one)
    # no gcd is taken: value stays a pair, but compares equal to w+1
    assert f == rf(w + one)
    at7 = f.evaluate({"w:x": Q(7)})
    assert at7 == Q(8)


def test_three_term_sum_common_denominator():
    # 1 + 1/d + 1/(de) with d = w_d^2, e = w_e^2
    t = GeneratorTable(["w:d", "w:e"])
    d = RationalFn.generator(t, "w:d", 2)
    e = RationalFn.generator(t, "w:e", 2)
    one = RationalFn.constant(t, 1)
    f = one + one / d + one / (d * e)
    expected_num = (
        LaurentPoly.monomial(t, 1, {"w:d": 2, "w:e": 2})
        + LaurentPoly.monomial(t, 1, {"w:e": 2})
        + LaurentPoly.one(t)
    )
    assert f.num == expected_num
    assert f.den == LaurentPoly.monomial(t, 1, {"w:d": 2, "w:e": 2})
    assert f.num.term_count() == 3


def test_division_by_zero_raises():
    w = gen("w:x", table=W1)
    with pytest.raises(ZeroDivisionError):
        rf(w) / RationalFn.constant(W1, 0)


def test_substitute_inversion():
    w = gen("w:x", table=W1)
    f = rf(w ** 2)
    g = f.substitute({"w:x": rf(w).inverse()})
    assert g == rf(w).inverse() ** 2
    # double substitution of an invertible monomial map returns the original
    h = g.substitute({"w:x": rf(w).inverse()})
    assert h == f


def test_substitute_exchange_rule():
    # 1 + z_f under w_f -> 1/w_f becomes 1 + 1/z_f
    t = GeneratorTable(["w:f", "w:a"])
    wf = RationalFn.generator(t, "w:f")
    wa = RationalFn.generator(t, "w:a")
    one = RationalFn.constant(t, 1)
    f2 = wf ** 2
    image = (one + f2).substitute({"w:f": wf.inverse(), "w:a": wa})
    assert image == one + f2.inverse()


def test_substitute_invertible_monomial_map_round_trip():
    t = GeneratorTable(["w:f", "w:a"])
    wf = RationalFn.generator(t, "w:f")
    wa = RationalFn.generator(t, "w:a")
    one = RationalFn.constant(t, 1)
    f = (wf ** 2 + wa * wf + one) / (wa - wf)
    # (f, a) -> (1/f, a f) is an involutive invertible monomial map
    sigma = {"w:f": wf.inverse(), "w:a": wa * wf}
    g = f.substitute(sigma)
    assert g != f
    assert g.substitute(sigma) == f


def test_unbound_generator_raises():
    w = gen("w:x", table=W1)
    with pytest.raises(KeyError):
        rf(w).substitute({})


def test_partial_derivatives():
    w = gen("w:x", table=W1)
    assert rf(w ** 2).derivative("w:x") == rf(w.scale(2))
    assert rf(w).inverse().derivative("w:x") == -(rf(w) ** -2)
    t = GeneratorTable(["w:1", "w:2"])
    w1 = RationalFn.generator(t, "w:1")
    w2 = RationalFn.generator(t, "w:2")
    f = (w1 + w2) / w1
    assert f.derivative("w:1") == -w2 / (w1 ** 2)


def test_derivative_matches_central_difference():
    t = GeneratorTable(["w:u", "w:v"])
    u = RationalFn.generator(t, "w:u")
    v = RationalFn.generator(t, "w:v")
    f = (u ** 2 * v + RationalFn.constant(t, 3)) / (u + v)
    h = Q(1, 10_000)
    p = {"w:u": Q(5, 3), "w:v": Q(7, 2)}
    exact = f.derivative("w:u").evaluate(p)
    up = f.evaluate({"w:u": p["w:u"] + h, "w:v": p["w:v"]})
    down = f.evaluate({"w:u": p["w:u"] - h, "w:v": p["w:v"]})
    approx = (up - down) / (2 * h)
    assert abs(approx - exact) < Q(1, 100_000)


def test_evaluate_at_singular_point():
    w = gen("w:x", table=W1)
    f = rf(LaurentPoly.one(W1)) / rf(w - LaurentPoly.one(W1))
    with pytest.raises(SingularPointError) as err:
        f.evaluate({"w:x": Q(1)})
    assert err.value.denominator == w - LaurentPoly.one(W1)


def test_w_over_w_at_seven():
    w = gen("w:x", table=W1)
    f = rf(w) / rf(w)
    assert f.evaluate({"w:x": Q(7)}) == 1


def test_negative_monomial_power():
    m = LaurentPoly.monomial(T, Fraction(2), {"w:a": 2, "w:b": -1})
    assert m ** -2 == LaurentPoly.monomial(T, Fraction(1, 4), {"w:a": -4, "w:b": 2})
    with pytest.raises(ArithmeticError):
        (m + LaurentPoly.one(T)) ** -1


def test_rationalfn_normalization_invariants():
    w = gen("w:x", table=W1)
    one = LaurentPoly.one(W1)
    f = RationalFn(w + one, (w ** 3).scale(-2))
    # no common monomial content and positive denominator leading coefficient
    joint = tuple(
        min(a, b) for a, b in zip(f.num.content_exponents(), f.den.content_exponents())
    )
    assert joint == (0,)
    assert f.den.leading_coefficient() > 0
    g = RationalFn(w ** 2 - one, w ** 5 - w ** 3)
    joint = tuple(
        min(a, b) for a, b in zip(g.num.content_exponents(), g.den.content_exponents())
    )
    assert joint == (0,)


def test_text_and_json_round_trip():
    p = (
        LaurentPoly.monomial(T, Fraction(3, 7), {"w:a": 2, "w:c": -5})
        + LaurentPoly.monomial(T, Fraction(-1), {"w:b": 1})
        + LaurentPoly.constant(T, Fraction(11, 2))
    )
    assert LaurentPoly.from_text(T, p.to_text()) == p
    assert LaurentPoly.from_json(T, p.to_json()) == p
    f = RationalFn(p, LaurentPoly.monomial(T, 2, {"w:a": 1}) + LaurentPoly.one(T))
    assert RationalFn.from_json(T, f.to_json()) == f


def test_exact_poly_div():
    w = gen("w:x", table=W1)
    one = LaurentPoly.one(W1)
    assert exact_poly_div(w ** 2 - one, w - one) == w + one
    assert exact_poly_div(w ** 2 + one, w - one) is None


small_fractions = st.fractions(
    min_value=-4, max_value=4, max_denominator=5
)


@st.composite
def laurent_polys(draw):
    n_terms = draw(st.integers(min_value=0, max_value=4))
    terms = {}
    for _ in range(n_terms):
        exps = tuple(draw(st.integers(min_value=-3, max_value=3)) for _ in range(3))
        terms[exps] = draw(small_fractions)
    return LaurentPoly(T, terms)


@given(laurent_polys(), laurent_polys(), laurent_polys())
@settings(max_examples=60, deadline=None)
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


@given(laurent_polys())
@settings(max_examples=30, deadline=None)
def test_evaluate_commutes_with_arithmetic(a):
    p = {"w:a": Q(3, 2), "w:b": Q(5), "w:c": Q(7, 3)}
    b = LaurentPoly.monomial(T, Fraction(2), {"w:a": 1}) + LaurentPoly.one(T)
    assert (a * b).evaluate(p) == a.evaluate(p) * b.evaluate(p)
    assert (a + b).evaluate(p) == a.evaluate(p) + b.evaluate(p)
