import pytest
from hypothesis import given, strategies as st

from bivfib.polyring import ONE, X, Y, ZERO, PoleAtZero
from bivfib.sequences import (
    FIB,
    LUCAS,
    GibSpec,
    PolySeq,
    convolve,
    fib,
    fib_at,
    gib_term,
    gibonacci,
    kind_term,
    lucas,
    product_term,
)
from conftest import fib_int, fib_xy, points


def test_first_terms():
    assert [fib(n) for n in range(5)] == [ZERO, ONE, X, X * X + Y, X ** 3 + 2 * X * Y]
    assert lucas(0) == 2 * ONE and lucas(1) == X and lucas(2) == X * X + 2 * Y


@given(st.integers(-12, 25), points)
def test_fib_matches_numeric_loop(n, pt):
    assert fib(n).evaluate(*pt) == fib_xy(n, *pt)
    if n >= 0:
        assert fib_at(n, *pt) == fib_xy(n, *pt)
    else:
        with pytest.raises(ValueError):
            fib_at(n, *pt)


@given(st.integers(-12, 20), points)
def test_lucas_is_sum_of_neighbours(n, pt):
    # L_n = F_{n-1} + F_{n+1} under the same recurrence
    x, y = pt
    assert lucas(n).evaluate(x, y) == y * fib_xy(n - 1, x, y) + fib_xy(n + 1, x, y)


def test_fibonacci_numbers():
    assert [fib(n).evaluate(1, 1) for n in range(20)] == [fib_int(n) for n in range(20)]


def test_negative_index_has_pole_at_y_zero():
    assert fib(-3) * Y ** 3 == X * X + Y
    with pytest.raises(PoleAtZero):
        fib(-1).evaluate(1, 0)


def test_gibonacci_seeds_and_recurrence():
    spec = GibSpec(X, Y, "G")
    assert gibonacci(spec, 0) == X and gibonacci(spec, 1) == Y
    for n in range(-6, 10):
        assert gib_term(spec, n + 2) == X * gib_term(spec, n + 1) + Y * gib_term(spec, n)
    assert [gibonacci(FIB, n) for n in range(6)] == [fib(n) for n in range(6)]
    assert [gibonacci(LUCAS, n) for n in range(6)] == [lucas(n) for n in range(6)]
    with pytest.raises(ValueError):
        gibonacci(spec, -1)


def test_kind_term_dispatch():
    assert kind_term("F", 7) == fib(7)
    assert kind_term("L", -4) == lucas(-4)


@given(st.integers(1, 3), st.integers(0, 8))
def test_product_term(s, n):
    fac = [(1, 0, 2), (2, 1, 1)]
    assert product_term(s, fac, n) == fib(s * n) ** 2 * fib(2 * s * n + 1)


def test_polyseq_and_convolution():
    ps = PolySeq.fib(2, 1)
    assert ps.terms(3) == [ONE, X * X + Y, fib(5)]
    direct = sum((fib(t) * fib(4 - t) for t in range(5)), ZERO)
    assert convolve(PolySeq.fib(), PolySeq.fib(), 4) == direct == 3 * X * X + 2 * Y
    assert (PolySeq.fib() * 2)[5] == 2 * fib(5)
    assert PolySeq.fib().shifted(2)[0] == fib(2)
