from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bivfib.fibopoly import fibopolynomial
from bivfib.polyring import ONE, X, Y, ZERO, BiPoly
from bivfib.sequences import GibSpec, fib, product_term
from bivfib.ztransform import (
    NonUnitLeading,
    ZPoly,
    ZRat,
    d_poly_binet,
    d_poly_factored,
    d_poly_sum,
    dsign,
    verify_zrat,
    z_const,
    z_fib,
    z_fibopoly,
    z_gib_product,
    z_lucas,
    z_product,
)
from conftest import fib_xy

PT = (Fraction(3, 2), Fraction(-2, 3))


def _num(c, x, y):
    return c.evaluate(x, y) if isinstance(c, BiPoly) else Fraction(c)


def series(zr, count, x=PT[0], y=PT[1]):
    """Numeric expansion of num/den in powers of 1/z by long division."""
    q = [_num(c, x, y) for c in zr.den.desc()]
    d = len(q) - 1
    p = [_num(zr.num[d - m], x, y) if d - m >= 0 else Fraction(0) for m in range(count)]
    out = []
    for m in range(count):
        acc = p[m] - sum(q[i] * out[m - i] for i in range(1, min(m, d) + 1))
        out.append(acc / q[0])
    return out


@pytest.mark.parametrize("s", [1, 2, 3])
@pytest.mark.parametrize("m", [-3, 0, 2])
def test_fib_and_lucas_transforms_expand_to_the_sequence(s, m):
    x, y = PT
    assert series(z_fib(s, m), 12) == [fib_xy(s * n + m, x, y) for n in range(12)]
    want = [y * fib_xy(s * n + m - 1, x, y) + fib_xy(s * n + m + 1, x, y) for n in range(12)]
    assert series(z_lucas(s, m), 12) == want


def test_fib_transform_closed_form():
    assert z_fib(1, 0) == ZRat(ZPoly([ZERO, ONE]), ZPoly([-Y, -X, ONE]))
    assert series(z_const(), 5) == [1] * 5


@pytest.mark.parametrize("s,p", [(1, 1), (1, 4), (2, 3), (3, 2)])
def test_fibopoly_transform_expands(s, p):
    x, y = PT
    got = series(z_fibopoly(s, p), 10)
    assert got == [fibopolynomial(s, n, p).evaluate(x, y) for n in range(10)]


def test_product_transform_expands():
    fac = [(1, 0, 1), (2, 1, 1)]
    x, y = PT
    got = series(z_product(2, fac), 10)
    assert got == [fib_xy(2 * n, x, y) * fib_xy(4 * n + 1, x, y) for n in range(10)]


def test_gibonacci_product_transform():
    spec = GibSpec(X, ONE + X, "G")
    zr = z_gib_product(1, spec, [(1, 0, 2)])
    assert verify_zrat(zr, lambda n: product_term(1, [(1, 0, 2)], n, spec))


def test_verify_rejects_wrong_sequence_and_nonunit_leading():
    assert verify_zrat(z_fib(1, 0), fib)
    assert not verify_zrat(z_fib(1, 0), lambda n: fib(n + 1))
    assert not verify_zrat(z_fib(1, 0), lambda n: fib(n) + (X * Y if n == 9 else 0), extra=8)
    bad = ZRat(ZPoly([ONE]), ZPoly([ONE, 2 * ONE]))
    with pytest.raises(NonUnitLeading):
        verify_zrat(bad, fib)


def test_dsign_table():
    # (-1)^((s i + 2(s+1))(i+1)/2)
    for s in range(1, 5):
        for i in range(8):
            e = (s * i + 2 * (s + 1)) * (i + 1)
            assert e % 2 == 0
            assert dsign(s, i) == (-1) ** (e // 2)


@pytest.mark.parametrize("s", [1, 2, 3])
def test_d_polynomial_three_ways(s):
    for k in range(6):
        a = d_poly_sum(s, k)
        assert a == d_poly_factored(s, k)
        assert ZPoly(a.coeffs) == d_poly_binet(s, k)
        assert a.degree == k + 1
        assert a.lead() == (-1) ** (s + 1) * ONE


def test_d_polynomial_small_case():
    # D_{1,2} = z^2 - x z - y, the Fibonacci denominator; for s = 2 it is -(z - a^2)(z - b^2)
    assert ZPoly(d_poly_sum(1, 1).coeffs) == ZPoly([-Y, -X, ONE])
    assert ZPoly(d_poly_sum(2, 1).coeffs) == ZPoly([-Y * Y, X * X + 2 * Y, -ONE])


def test_zrat_algebra():
    a, b = z_fib(1, 0), z_lucas(1, 0)
    x, y = PT
    s = series(a + b, 8)
    assert s == [u + v for u, v in zip(series(a, 8), series(b, 8))]
    assert series(a.times_n(), 8) == [n * v for n, v in enumerate(series(a, 8))]
    adv = a.advance(2, [fib(0), fib(1)])
    assert series(adv, 8) == [fib_xy(n + 2, x, y) for n in range(8)]
    # lam^n F_n with lam = y
    sc = a.scale_argument(Y, BiPoly.monomial(1, 0, -1))
    assert series(sc, 8) == [y ** n * fib_xy(n, x, y) for n in range(8)]


def test_zpoly_basics():
    p = ZPoly.from_desc([ONE, X, ZERO])
    assert p == ZPoly([ZERO, X, ONE]) and p.degree == 2 and p.lead() == ONE
    assert p.d_dz() == ZPoly([X, 2 * ONE])
    assert p.shift(1) == ZPoly([ZERO, ZERO, X, ONE])
    assert (p * p).degree == 4


@given(st.integers(1, 4), st.integers(-5, 5), st.integers(0, 3))
def test_product_of_two_strides_property(s, m, k):
    fac = [(1, m, 1), (2, 0, k)] if k else [(1, m, 1)]
    x, y = PT
    want = [fib_xy(s * n + m, x, y) * fib_xy(2 * s * n, x, y) ** k for n in range(9)]
    assert series(z_product(s, fac), 9) == want
