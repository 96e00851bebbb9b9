from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bivfib.polyring import (
    ONE,
    W2,
    X,
    Y,
    ZERO,
    BiPoly,
    DivisionByZero,
    ExtElem,
    NotDivisible,
    PoleAtZero,
    RatFunc,
    alpha,
    beta,
    neg_y_pow,
)
from conftest import bipolys, points


@given(bipolys(), bipolys(), bipolys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a and a + ZERO == a


@given(bipolys(), bipolys(), points)
def test_evaluation_is_a_homomorphism(a, b, pt):
    x, y = pt
    assert (a * b).evaluate(x, y) == a.evaluate(x, y) * b.evaluate(x, y)
    assert (a - b).evaluate(x, y) == a.evaluate(x, y) - b.evaluate(x, y)


@given(bipolys(), st.integers(0, 4), points)
def test_power_matches_repeated_product(a, k, pt):
    acc = ONE
    for _ in range(k):
        acc = acc * a
    assert a ** k == acc
    assert (a ** k).evaluate(*pt) == a.evaluate(*pt) ** k


@given(bipolys(), bipolys())
def test_exact_division_inverts_multiplication(a, b):
    if b.is_zero():
        with pytest.raises(DivisionByZero):
            a.exact_div(b)
        return
    prod = a * b
    assert prod.exact_div(b) == a
    assert b.divides(prod)


def test_exact_division_rejects_remainder():
    with pytest.raises(NotDivisible):
        (X + 1).exact_div(X - 1)
    with pytest.raises(NotDivisible):
        (X + 1).exact_div(2)
    assert not (X - 1).divides(X + 1)
    assert (X * X - Y * Y).exact_div(X - Y) == X + Y


@given(bipolys(), bipolys())
def test_leibniz_rule(a, b):
    assert (a * b).d_dx() == a.d_dx() * b + a * b.d_dx()
    assert (a * b).d_dy() == a.d_dy() * b + a * b.d_dy()


def test_laurent_derivative():
    assert BiPoly.monomial(3, 1, -2).d_dy() == BiPoly.monomial(-6, 1, -3)


@given(bipolys())
def test_text_and_json_round_trip(a):
    assert BiPoly.parse(str(a)) == a
    assert BiPoly.from_json(a.to_json()) == a


@pytest.mark.parametrize(
    "text, value",
    [
        ("0", ZERO),
        ("x^2 + 3 y^-1", X * X + 3 * BiPoly.monomial(1, 0, -1)),
        ("-2 x y + 7", -2 * X * Y + 7),
        ("2*x*y^2 - x", 2 * X * Y * Y - X),
    ],
)
def test_parse_examples(text, value):
    assert BiPoly.parse(text) == value


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        BiPoly.parse("x + + ")
    with pytest.raises(ValueError):
        BiPoly.parse("q^2")
    # only expanded sums of monomials are accepted
    with pytest.raises(ValueError):
        BiPoly.parse("(x + y)^2")


def test_pole_at_zero():
    with pytest.raises(PoleAtZero):
        BiPoly.monomial(1, 0, -1).evaluate(1, 0)
    assert (X + Y).evaluate(2, 0) == 2


def test_neg_y_pow():
    assert neg_y_pow(3) == -Y ** 3
    assert neg_y_pow(-2) * Y * Y == ONE
    assert neg_y_pow(0) == ONE


@given(bipolys(laurent=False), bipolys(laurent=False), bipolys(laurent=False))
def test_ratfunc_cross_multiplication(a, b, c):
    if b.is_zero() or c.is_zero():
        return
    assert RatFunc(a * c, b * c) == RatFunc(a, b)
    assert RatFunc(a, b) * RatFunc(b, c) == RatFunc(a, c)
    assert RatFunc(a, b) + RatFunc(c, b) == RatFunc(a + c, b)


def test_ratfunc_zero_denominator():
    with pytest.raises(DivisionByZero):
        RatFunc(X, ZERO)
    assert RatFunc(1, X).evaluate(2, 3) == Fraction(1, 2)


def test_binet_roots():
    a, b = alpha(), beta()
    assert a + b == ExtElem(X)
    assert a * b == ExtElem(-Y)
    assert (a - b) ** 2 == ExtElem(W2)
    assert a * a == X * a + Y  # each root satisfies t^2 = x t + y
    assert a * a ** -1 == ExtElem(ONE)
    assert a.conj() == b
