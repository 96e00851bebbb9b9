from fractions import Fraction
from math import prod

import pytest
from hypothesis import assume, given, strategies as st

from bivfib.fibopoly import (
    fibopolynomial,
    fibopolynomial_by_quotient,
    gibopolynomial,
    s_factorial,
    specialize,
    triangle,
)
from bivfib.polyring import ONE, X, Y, ZERO, RatFunc
from bivfib.sequences import GibSpec, fib, lucas
from conftest import fib_int, fib_xy, points


def fibonomial(s, n, k):
    """Integer s-Fibonomial from plain Fibonacci numbers."""
    if k < 0 or k > n:
        return 0
    top = prod(fib_int(s * (n - k + i)) for i in range(1, k + 1))
    bottom = prod(fib_int(s * i) for i in range(1, k + 1))
    assert top % bottom == 0
    return top // bottom


@given(st.integers(1, 3), st.integers(0, 9), st.integers(0, 9), points)
def test_fibopolynomial_matches_numeric_quotient(s, n, k, pt):
    if k > n:
        assert fibopolynomial(s, n, k) == ZERO
        return
    x, y = pt
    want = Fraction(1)
    for i in range(1, k + 1):
        assume(fib_xy(s * i, x, y) != 0)
        want *= fib_xy(s * (n - k + i), x, y) / fib_xy(s * i, x, y)
    assert fibopolynomial(s, n, k).evaluate(x, y) == want


@pytest.mark.parametrize("s", [1, 2, 3])
def test_fibopolynomial_integer_specialization(s):
    for n in range(10):
        for k in range(n + 1):
            assert specialize(fibopolynomial(s, n, k), 1, 1) == fibonomial(s, n, k)


def test_quotient_oracle_agrees():
    for s in (1, 2):
        for n in range(8):
            for k in range(n + 1):
                assert fibopolynomial(s, n, k) == fibopolynomial_by_quotient(s, n, k)


def test_fibonomial_sequence():
    assert [specialize(fibopolynomial(1, n, 4), 1, 1) for n in range(8)] == [0, 0, 0, 0, 1, 5, 40, 260]


def test_fibopolynomials_are_polynomials_with_unit_edges():
    for s in (1, 2, 3):
        for n in range(8):
            row = [fibopolynomial(s, n, k) for k in range(n + 1)]
            assert row[0] == ONE and row[-1] == ONE
            assert row == row[::-1]
            assert all(c.is_polynomial() for c in row)


def test_s_factorial():
    assert s_factorial("F", 0, 2) == ONE
    assert s_factorial("F", 3, 2) == fib(2) * fib(4) * fib(6)
    assert s_factorial("L", 2, 1) == lucas(1) * lucas(2)


def test_triangle_shape_and_rows():
    assert triangle(1, 0) == []
    t = triangle(2, 3)
    assert [len(r) for r in t] == [1, 2, 3]
    assert t[2] == [ONE, X * X + 2 * Y, ONE]
    assert triangle(1, 5)[4][2] == X ** 4 + 3 * X * X * Y + 2 * Y * Y


def test_gibopolynomial_lucas_quotient():
    c = gibopolynomial("L", 2, 4, 2)
    assert c == RatFunc(lucas(8) * lucas(6), lucas(2) * lucas(4))


def test_gibopolynomial_below_lower_index_uses_negative_indices():
    # n < k: the falling product runs through negative indices
    spec = GibSpec(X, Y, "G")
    from bivfib.sequences import gib_term

    got = gibopolynomial(spec, 1, 1, 3)
    want = RatFunc(gib_term(spec, -1) * gib_term(spec, 0) * gib_term(spec, 1),
                   gib_term(spec, 1) * gib_term(spec, 2) * gib_term(spec, 3))
    assert got == want
    assert gibopolynomial("F", 1, 2, 4) == RatFunc(ZERO)


def test_gibopolynomial_fib_kind_is_fibopolynomial():
    for n in range(7):
        for k in range(n + 1):
            assert gibopolynomial("F", 2, n, k) == RatFunc(fibopolynomial(2, n, k))
