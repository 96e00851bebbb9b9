"""Checkers for every registered identity.

Importing this module fills the registry in :mod:`bivfib.identities`.  Each
checker works in ``Z[x, y, 1/y]`` where possible; fractions are cleared by
cross-multiplication or compared through :class:`RatFunc`.
"""

from __future__ import annotations

from .fibopoly import (
    fibopolynomial_by_quotient,
    gibopolynomial,
    s_factorial,
    triangle,
)
from .identities import (
    GIBOPOLY_CASES,
    NS,
    PRODUCT_CASES,
    SEEDS,
    S,
    C,
    F,
    L,
    P,
    R,
    _conv,
    _expand,
    _order,
    _sign,
    corollary43,
    corollary48,
    corollary49,
    corollary410,
    decompose_gibopoly,
    decompose_product,
    derivative_formulas,
    identity,
    ny,
    partial_fractions,
    recurrence_vanishing,
    remark519,
    yp,
)
from .polyring import ONE, W2, X, Y, ZERO, BiPoly, ExtElem, RatFunc, alpha, beta
from .sequences import gibonacci, kind_term, product_term
from .ztransform import (
    ZPoly,
    ZRat,
    _d_root_scaled,
    d_poly_binet,
    d_poly_factored,
    d_poly_sum,
    dsign,
    gibopoly_product_term,
    prop22_identity,
    prop25_sum,
    verify_zrat,
    z_const,
    z_fib,
    z_fibopoly,
    z_gib_product,
    z_gibopoly_product,
    z_lucas,
    z_product,
)

XY = BiPoly.monomial(1, 1, 1)


def _quad(s: int) -> ZPoly:
    return ZPoly([ny(s), -L(s), ONE])


def _gibo_order(factors) -> int:
    return sum(t * p * r for t, p, r in factors)


def _rf(num, den=ONE) -> RatFunc:
    return RatFunc(num, den)


# ---------------------------------------------------------------------------
# sequences, Binet forms, quotient and index-reduction identities
# ---------------------------------------------------------------------------


@identity("EQ_1_1", "G_n = y G_0 F_{n-1} + G_1 F_n", g=R(0, 4), n=R(0, 14))
def _eq_1_1(g, n):
    spec = SEEDS[g]
    return gibonacci(spec, n), Y * spec.g0 * F(n - 1) + spec.g1 * F(n)


@identity("EQ_1_2", "Binet forms: w F_n = alpha^n - beta^n, L_n = alpha^n + beta^n", n=R(-6, 12))
def _eq_1_2(n):
    a, b = alpha(), beta()
    return [(a ** n - b ** n, ExtElem(0, F(n))), (a ** n + b ** n, ExtElem(L(n)))]


@identity("EQ_1_3", "alpha + beta = x, alpha beta = -y, alpha^2 = x alpha + y", n=R(0, 0))
def _eq_1_3(n):
    a, b = alpha(), beta()
    w = ExtElem(0, 1)
    return [(a + b, ExtElem(X)), (a * b, ExtElem(-Y)), (a * a, a * X + Y), (w * w, ExtElem(W2))]


@identity("EQ_1_6", "F_{(2p-1)s}/F_s as an alternating Lucas sum", s=S, p=R(1, 5))
def _eq_1_6(s, p):
    rhs = ZERO
    for k in range(p):
        rhs = rhs + ny(s * k) * L(2 * (p - k - 1) * s)
    return F((2 * p - 1) * s), F(s) * (rhs - ny(s * (p - 1)))


@identity("EQ_1_7", "F_{2ps}/F_s as a Lucas sum", s=S, p=R(1, 5))
def _eq_1_7(s, p):
    rhs = ZERO
    for k in range(p):
        rhs = rhs + ny(s * k) * L((2 * p - 2 * k - 1) * s)
    return F(2 * p * s), F(s) * rhs


@identity("EQ_1_71", "F_{ps}/F_s = F_p(L_s, -(-y)^s)", s=S, p=R(0, 7))
def _eq_1_71(s, p):
    return F(p * s), F(s) * F(p).substitute(L(s), -ny(s))


@identity("EQ_1_71_EX", "F_{ps}/F_s for p = 2..5 in closed form", s=R(1, 4))
def _eq_1_71_ex(s):
    Ls, q = L(s), ny(s)
    return [
        (F(2 * s), F(s) * Ls),
        (F(3 * s), F(s) * (L(2 * s) + q)),
        (F(3 * s), F(s) * (Ls * Ls - q)),
        (F(4 * s), F(s) * (L(3 * s) + q * Ls)),
        (F(4 * s), F(s) * Ls * (Ls * Ls - 2 * q)),
        (F(5 * s), F(s) * (L(4 * s) + q * L(2 * s) + yp(2 * s))),
        (F(5 * s), F(s) * (Ls ** 4 - 3 * q * Ls * Ls + yp(2 * s))),
    ]


@identity("EQ_1_8", "F_{s(n+1)} - (-y)^s F_{s(n-1)} = F_s L_{sn}", s=S, n=R(-3, 10))
def _eq_1_8(s, n):
    return F(s * (n + 1)) - ny(s) * F(s * (n - 1)), F(s) * L(s * n)


@identity("EQ_1_81", "F_{s(n+1)} + (-y)^s F_{s(n-1)} = L_s F_{sn}", s=S, n=R(-3, 10))
def _eq_1_81(s, n):
    return F(s * (n + 1)) + ny(s) * F(s * (n - 1)), L(s) * F(s * n)


@identity("EQ_1_9", "index reduction for F_a F_b - F_c F_d with a + b = c + d", a=R(-3, 3), b=R(-3, 3), c=R(-3, 3), r=R(-2, 2))
def _eq_1_9(a, b, c, r):
    d = a + b - c
    return F(a) * F(b) - F(c) * F(d), ny(r) * (F(a - r) * F(b - r) - F(c - r) * F(d - r))


@identity("EQ_1_10", "index reduction for L_a F_b - L_c F_d with a + b = c + d", a=R(-3, 3), b=R(-3, 3), c=R(-3, 3), r=R(-2, 2))
def _eq_1_10(a, b, c, r):
    d = a + b - c
    return L(a) * F(b) - L(c) * F(d), ny(r) * (L(a - r) * F(b - r) - L(c - r) * F(d - r))


@identity("EQ_1_11", "F_M F_N - F_{M+K} F_{N-K} = (-y)^{N-K} F_{M+K-N} F_K", m=R(-4, 4), n=R(-4, 4), k=R(-4, 4))
def _eq_1_11(m, n, k):
    return F(m) * F(n) - F(m + k) * F(n - k), ny(n - k) * F(m + k - n) * F(k)


@identity("EQ_1_12", "L_M F_N - L_{M+K} F_{N-K} = (-y)^{N-K} L_{M+K-N} F_K", m=R(-4, 4), n=R(-4, 4), k=R(-4, 4))
def _eq_1_12(m, n, k):
    return L(m) * F(n) - L(m + k) * F(n - k), ny(n - k) * L(m + k - n) * F(k)


# ---------------------------------------------------------------------------
# factorials, Gibopolynomials, the recurrence and the triangles
# ---------------------------------------------------------------------------


@identity(
    "EQ_1_13",
    "Gibopolynomial times the two factorials is the top factorial; symmetry",
    g=R(0, 4), s=S, n=R(0, 7), k=R(0, 7),
    where=lambda g, s, n, k: k <= n,
)
def _eq_1_13(g, s, n, k):
    spec = SEEDS[g]
    c = gibopolynomial(spec, s, n, k)
    return [
        (c * (s_factorial(spec, k, s) * s_factorial(spec, n - k, s)), s_factorial(spec, n, s)),
        (c, gibopolynomial(spec, s, n, n - k)),
    ]


@identity(
    "EQ_1_14",
    "Gibopolynomial as a falling product quotient; F case is the Fibopolynomial",
    g=R(0, 4), s=R(1, 3), n=R(0, 7), k=R(0, 7),
    where=lambda g, s, n, k: k <= n,
)
def _eq_1_14(g, s, n, k):
    spec = SEEDS[g]
    top, bottom = ONE, ONE
    for i in range(1, k + 1):
        top = top * kind_term(spec, s * (n - i + 1))
        bottom = bottom * kind_term(spec, s * i)
    pairs = [(gibopolynomial(spec, s, n, k) * bottom, _rf(top))]
    if g == 0:
        pairs.append((C(s, n, k), fibopolynomial_by_quotient(s, n, k)))
    return pairs


@identity("EQ_1_14_EX", "Lucapolynomial C(4,2) for s = 2 as the displayed quotient", n=R(0, 0))
def _eq_1_14_ex(n):
    num = P("x^4 + 4 x^2 y + y^2") * P("x^8 + 8 x^6 y + 20 x^4 y^2 + 16 x^2 y^3 + 2 y^4")
    return [
        (gibopolynomial("L", 2, 4, 2), _rf(num, P("x^4 + 4 x^2 y + 2 y^2"))),
        (gibopolynomial("L", 2, 4, 2), _rf(L(8) * L(6), L(2) * L(4))),
    ]


@identity(
    "EQ_2_121",
    "Fibopolynomial recurrence on the quotient values, the auxiliary identity, and agreement",
    s=S, n=R(0, 10), k=R(0, 10),
    where=lambda s, n, k: k <= n,
)
def _eq_2_121(s, n, k):
    q = fibopolynomial_by_quotient
    pairs = [(C(s, n, k), q(s, n, k))]
    if 1 <= k <= n - 1:
        pairs.append((q(s, n, k), F(s * (n - k) + 1) * q(s, n - 1, k - 1) + Y * F(s * k - 1) * q(s, n - 1, k)))
        pairs.append((F(s * (n - k) + 1) * F(s * k) + Y * F(s * k - 1) * F(s * (n - k)), F(s * n)))
    return pairs


TRIANGLE_S1 = [
    ["1"],
    ["1", "1"],
    ["1", "x", "1"],
    ["1", "x^2 + y", "x^2 + y", "1"],
    ["1", "x^3 + 2 x y", "x^4 + 3 x^2 y + 2 y^2", "x^3 + 2 x y", "1"],
    ["1", "x^4 + 3 x^2 y + y^2", "x^6 + 5 x^4 y + 7 x^2 y^2 + 2 y^3",
     "x^6 + 5 x^4 y + 7 x^2 y^2 + 2 y^3", "x^4 + 3 x^2 y + y^2", "1"],
]

TRIANGLE_S2 = [
    ["1"],
    ["1", "1"],
    ["1", "x^2 + 2 y", "1"],
    ["1", "x^4 + 4 x^2 y + 3 y^2", "x^4 + 4 x^2 y + 3 y^2", "1"],
    ["1", "x^6 + 6 x^4 y + 10 x^2 y^2 + 4 y^3", "x^8 + 8 x^6 y + 21 x^4 y^2 + 20 x^2 y^3 + 6 y^4",
     "x^6 + 6 x^4 y + 10 x^2 y^2 + 4 y^3", "1"],
    ["1", "x^8 + 8 x^6 y + 21 x^4 y^2 + 20 x^2 y^3 + 5 y^4",
     "x^12 + 12 x^10 y + 55 x^8 y^2 + 120 x^6 y^3 + 127 x^4 y^4 + 60 x^2 y^5 + 10 y^6",
     "x^12 + 12 x^10 y + 55 x^8 y^2 + 120 x^6 y^3 + 127 x^4 y^4 + 60 x^2 y^5 + 10 y^6",
     "x^8 + 8 x^6 y + 21 x^4 y^2 + 20 x^2 y^3 + 5 y^4", "1"],
]


def _table_check(s, table, row):
    got = triangle(s, len(table))[row]
    want = [P(e) for e in table[row]]
    return len(got) == len(want) and all(a == b for a, b in zip(got, want))


@identity("TAB_1_S1", "s = 1 triangle, rows 0..5", row=R(0, 5))
def _tab_s1(row):
    return _table_check(1, TRIANGLE_S1, row)


@identity("TAB_1_S2", "s = 2 triangle, rows 0..5", row=R(0, 5))
def _tab_s2(row):
    return _table_check(2, TRIANGLE_S2, row)


# ---------------------------------------------------------------------------
# integer specializations at x = y = 1
# ---------------------------------------------------------------------------


def _int_at_one(p) -> int:
    v = p.evaluate(1, 1)
    if v.denominator != 1:
        raise ArithmeticError("value at x = y = 1 is not an integer")
    return int(v)


def _fibonomial(s, n, k) -> BiPoly:
    return BiPoly.const(_int_at_one(C(s, n, k)))


def _fibnum(n) -> BiPoly:
    return BiPoly.const(_int_at_one(F(n)))


def _unweighted_transform(s, factors) -> ZRat:
    """The transform with integer Fibonomials and no y-weights, as quoted for x = y = 1."""
    order = _order(factors)
    den = [_fibonomial(s, order + 1, i) * dsign(s, i) for i in range(order + 2)]
    terms = [ONE] * (order + 1)
    for n in range(order + 1):
        v = ONE
        for t, m, k in factors:
            v = v * _fibnum(m + t * s * n) ** k
        terms[n] = v
    coeffs = [ZERO] * (order + 2)
    for i in range(order + 1):
        acc = ZERO
        for j in range(i + 1):
            acc = acc + den[j] * terms[i - j]
        coeffs[order - i + 1] = acc
    return ZRat(ZPoly(coeffs), ZPoly.from_desc(den))


def _int_seq(s, factors):
    def term(n):
        v = ONE
        for t, m, k in factors:
            v = v * _fibnum(m + t * s * n) ** k
        return v

    return term


@identity("EQ_1_15", "transform of F_n^k over the Fibonomials", k=R(0, 5))
def _eq_1_15(k):
    fac = ((1, 0, k),)
    return verify_zrat(_unweighted_transform(1, fac), _int_seq(1, fac))


@identity(
    "EQ_1_16", "transform of F_{n+m1}^{k1} F_{n+m2}^{k2} over the Fibonomials",
    k1=R(0, 3), k2=R(0, 3), m1=R(-2, 2), m2=R(-2, 2),
    where=lambda k1, k2, m1, m2: k1 + k2 <= 5,
)
def _eq_1_16(k1, k2, m1, m2):
    fac = ((1, m1, k1), (1, m2, k2))
    return verify_zrat(_unweighted_transform(1, fac), _int_seq(1, fac))


@identity("EQ_1_17", "transform of the Fibonomial sequence", p=R(0, 6))
def _eq_1_17(p):
    den = ZPoly.from_desc([_fibonomial(1, p + 1, i) * dsign(1, i) for i in range(p + 2)])
    return verify_zrat(ZRat(ZPoly([ZERO, ONE]), den), lambda n: _fibonomial(1, n, p))


@identity("EQ_1_18", "transform of products of F_{tsn+m}^k at x = y = 1", s=S, c=R(0, len(PRODUCT_CASES) - 1))
def _eq_1_18(s, c):
    fac = PRODUCT_CASES[c]
    return verify_zrat(_unweighted_transform(s, fac), _int_seq(s, fac))


@identity("EQ_1_172", "F_n^4 in shifted Fibonomials at x = y = 1", n=R(0, 14))
def _eq_1_172(n):
    c = lambda m: _fibonomial(1, m, 4)
    return _fibnum(n) ** 4, c(n + 3) - 4 * c(n + 2) - 4 * c(n + 1) + c(n)


@identity("EQ_1_181", "F_{sn}^4 in shifted s-Fibonomials at x = y = 1", s=S, n=R(0, 10))
def _eq_1_181(s, n):
    c = lambda m: _int_at_one(C(s, m, 4))
    fs, f3s = _int_at_one(F(s)), _int_at_one(F(3 * s))
    # F_s^4 (3 (-1)^s F_{3s} / F_s + 2) is the integer 3 (-1)^s F_{3s} F_s^3 + 2 F_s^4
    mid = 3 * _sign(s) * f3s * fs ** 3 + 2 * fs ** 4
    rhs = fs ** 4 * (c(n + 3) + c(n)) + mid * (c(n + 2) + c(n + 1))
    return _fibnum(s * n) ** 4, BiPoly.const(rhs)


@identity("EQ_1_191", "F_{sn}^4 in shifted s-Fibopolynomials", s=S, n=NS)
def _eq_1_191(s, n):
    fs = F(s)
    lhs = F(s * n) ** 4
    rhs = fs ** 4 * (C(s, n + 3, 4) + yp(6 * s) * C(s, n, 4))
    rhs = rhs + fs ** 3 * (3 * ny(s) * F(3 * s) + 2 * yp(2 * s) * fs) * (C(s, n + 2, 4) + yp(2 * s) * C(s, n + 1, 4))
    return lhs, rhs


# ---------------------------------------------------------------------------
# transform properties and basic transforms
# ---------------------------------------------------------------------------


@identity("EQ_2_1", "advance shift of a transform", s=S, m=R(-3, 3), k=R(0, 4))
def _eq_2_1(s, m, k):
    init = [F(m + s * j) for j in range(k)]
    return z_fib(s, m).advance(k, init), z_fib(s, m + s * k)


@identity("EQ_2_2", "multiplication by lambda^n rescales the argument", s=S, m=R(-3, 3), lam=R(0, 2))
def _eq_2_2(s, m, lam):
    base, inv = [(Y, yp(-1)), (-Y, -yp(-1)), (-ONE, -ONE)][lam]
    zr = z_fib(s, m).scale_argument(base, inv)
    return verify_zrat(zr, lambda n: base ** n * F(s * n + m))


@identity("EQ_2_201", "multiplication by n is -z d/dz", s=S, m=R(-3, 3))
def _eq_2_201(s, m):
    return verify_zrat(z_lucas(s, m).times_n(), lambda n: n * L(s * n + m)) and verify_zrat(
        z_fib(s, m).times_n(), lambda n: n * F(s * n + m)
    )


@identity("EQ_2_3", "convolution theorem", s=S, m1=R(-2, 2), m2=R(-2, 2))
def _eq_2_3(s, m1, m2):
    zr = z_fib(s, m1) * z_lucas(s, m2)
    return verify_zrat(zr, lambda n: _conv(lambda t: F(s * t + m1), lambda u: L(s * u + m2), n))


@identity("EQ_2_4", "alternating signs evaluate the transform at -z", s=S, m=R(-3, 3))
def _eq_2_4(s, m):
    zr = z_fib(s, m)
    flipped = ZRat(ZPoly(c * _sign(i) for i, c in enumerate(zr.num.coeffs)),
                   ZPoly(c * _sign(i) for i, c in enumerate(zr.den.coeffs)))
    return verify_zrat(flipped, lambda n: _sign(n) * F(s * n + m))


@identity("EQ_2_5", "multiplication by L_{sn+m} through the roots", s=S, m=R(-2, 2), m2=R(-1, 1))
def _eq_2_5(s, m, m2):
    a, b = alpha(), beta()
    base = z_fib(s, m2)
    ext = ZRat(base.num.map(ExtElem), base.den.map(ExtElem))
    ainv, binv = b * ExtElem(-yp(-1)), a * ExtElem(-yp(-1))
    left = ext.scale_argument(a ** s, ainv ** s) * (a ** m) + ext.scale_argument(b ** s, binv ** s) * (b ** m)
    return verify_zrat(left, lambda n: ExtElem(L(s * n + m) * F(s * n + m2)))


@identity("EQ_2_6", "transform of lambda^n", lam=R(0, 3))
def _eq_2_6(lam):
    v = [Y, -Y, X, X + Y][lam]
    return verify_zrat(ZRat(ZPoly([ZERO, ONE]), ZPoly([-v, ONE])), lambda n: v ** n)


@identity("EQ_2_7", "transform of the constant sequence", n=R(0, 0))
def _eq_2_7(n):
    return verify_zrat(z_const(), lambda k: ONE)


@identity("EQ_2_8", "transform of F_{sn+m}", s=S, m=R(-3, 3))
def _eq_2_8(s, m):
    return verify_zrat(z_fib(s, m), lambda n: F(s * n + m))


@identity("EQ_2_9", "transform of L_{sn+m}", s=S, m=R(-3, 3))
def _eq_2_9(s, m):
    return verify_zrat(z_lucas(s, m), lambda n: L(s * n + m))


@identity("EQ_2_10", "transform of F_{sn}", s=R(1, 5))
def _eq_2_10(s):
    return z_fib(s, 0), ZRat(ZPoly([ZERO, F(s)]), _quad(s))


@identity("EQ_2_11", "transform of L_{sn}", s=R(1, 5))
def _eq_2_11(s):
    return z_lucas(s, 0), ZRat(ZPoly([ZERO, -L(s), 2 * ONE]), _quad(s))


@identity("EQ_2_12", "split of the F transform and the identity it yields", s=S, m=R(-3, 3), n=R(0, 6))
def _eq_2_12(s, m, n):
    q = _quad(s)
    split = ZRat(ZPoly([ZERO, ZERO, F(m) * F(s)]), q) + ZRat(ZPoly([ZERO, ny(m) * F(s - m) * F(s)]), q)
    return [
        (z_fib(s, m) * F(s), split),
        (F(s) * F(s * n + m) - F(m) * F(s * (n + 1)), ny(m) * F(s - m) * F(s * n)),
    ]


@identity("EQ_2_14", "split of the L transform and the identity it yields", s=S, m=R(-3, 3), n=R(0, 6))
def _eq_2_14(s, m, n):
    q = _quad(s)
    split = ZRat(ZPoly([ZERO, ZERO, L(m) * F(s)]), q) - ZRat(ZPoly([ZERO, ny(m) * L(s - m) * F(s)]), q)
    return [
        (z_lucas(s, m) * F(s), split),
        (L(s * n + m) * F(s) - L(m) * F(s * (n + 1)), -(ny(m) * L(s - m) * F(s * n))),
    ]


@identity("EQ_2_156", "n L_n - x F_n = (x^2 + 4y) (F * F)_n", n=R(0, 14))
def _eq_2_156(n):
    return n * L(n) - X * F(n), W2 * _conv(F, F, n)


@identity("EQ_2_157", "transform of n L_n - x F_n", n=R(0, 0))
def _eq_2_157(n):
    q = _quad(1)
    nl = z_lucas(1, 0).times_n()
    return [
        (nl, ZRat(ZPoly([-X * Y, 4 * Y, X]).shift(1), q * q)),
        (nl - z_fib(1, 0) * X, ZRat(ZPoly([ZERO, ZERO, W2]), q * q)),
    ]


# ---------------------------------------------------------------------------
# D-polynomials
# ---------------------------------------------------------------------------


@identity("EQ_2_16", "D-polynomial: signed Fibopolynomial sum equals the root product", s=S, k=R(0, 6))
def _eq_2_16(s, k):
    return d_poly_binet(s, k), d_poly_sum(s, k).map(ExtElem)


@identity("EQ_2_17", "D_{s,2p+1} as a linear factor times quadratics", s=S, p=R(0, 4))
def _eq_2_17(s, p):
    return d_poly_sum(s, 2 * p), d_poly_factored(s, 2 * p)


@identity("EQ_2_18", "D_{s,2p} as a product of quadratics", s=S, p=R(1, 4))
def _eq_2_18(s, p):
    return d_poly_sum(s, 2 * p - 1), d_poly_factored(s, 2 * p - 1)


def _ysp_terms(s, p, shift):
    total = ZERO
    for i in range(2 * p + 2):
        total = total + C(s, 2 * p + 1, i).monomial_mul(dsign(s, i), 0, s * i * (i - 1) // 2 + shift(i))
    return total


@identity(
    "EQ_2_17_YSP_A", "D_{s,2p+1} at z = y^{sp} vanishes when s or p is even",
    s=R(1, 4), p=R(0, 4), where=lambda s, p: (s * p) % 2 == 0,
)
def _eq_2_17_ysp_a(s, p):
    return _ysp_terms(s, p, lambda i: -s * p * i), ZERO


@identity(
    "EQ_2_17_YSP_B", "D_{s,2p+1} at z = y^{sp} for odd s and p",
    s=R(1, 5), p=R(1, 4), where=lambda s, p: (s * p) % 2 == 1,
)
def _eq_2_17_ysp_b(s, p):
    rhs = 2 * ONE
    for j in range(p):
        rhs = rhs * ny(s * (p + j)) * L(s * (p - j)) ** 2
    return _ysp_terms(s, p, lambda i: s * p * (2 * p - i)), rhs


@identity("EQ_2_24", "alpha/beta partial fractions with Lucas numerator", s=S, t=R(0, 4), k=R(0, 5))
def _eq_2_24(s, t, k):
    return prop22_identity(s, t, k, 0, "a")


@identity(
    "EQ_2_24_PRINTED", "alpha/beta partial fractions, y-weight y^{i(i-1)/2} as printed",
    expect="typo", note="denominator y-weight lacks the factor s; agrees only for s = 1",
    s=S, t=R(0, 4), k=R(0, 5),
)
def _eq_2_24_printed(s, t, k):
    a, b = alpha(), beta()
    da, db = _d_root_scaled(s, t, a), _d_root_scaled(s, t, b)
    big = ZPoly.from_desc(
        [ExtElem(C(s, t + 2, i).monomial_mul(dsign(s, i), 0, i * (i - 1) // 2)) for i in range(t + 3)]
    )
    left = (db * (a ** (s * k)) + da * (b ** (s * k))) * big
    rnum = ZPoly([-(ny(s * k) * L(s * (t - k + 1))), L(s * k)]).map(ExtElem)
    return left == rnum * da * db


@identity("EQ_2_25", "alpha/beta partial fractions with Fibonacci numerator", s=S, t=R(0, 4), k=R(0, 4), m=R(-2, 2))
def _eq_2_25(s, t, k, m):
    return prop22_identity(s, t, k, m, "b")


@identity("EQ_2_26", "three-term product identity for F_{s(t+2)} F_{s(t+1)}", s=S, t=R(0, 6), i=R(0, 8))
def _eq_2_26(s, t, i):
    rhs = ny(s * i) * F(s * (t + 2 - i)) * F(s * (t + 1 - i))
    rhs = rhs + L(s * (t + 1)) * F(s * (t + 2 - i)) * F(s * i)
    rhs = rhs + ny(s * (t - i + 2)) * F(s * i) * F(s * (i - 1))
    return [
        (F(s * (t + 2)) * F(s * (t + 1)), rhs),
        (ny(s * i) * F(s * (t + 1 - i)) + L(s * (t + 1)) * F(s * i), F(s * (t + 1 + i))),
    ]


@identity("EQ_2_27", "D_{s,t+2} splits off the quadratic with L_{s(t+1)}", s=S, t=R(0, 8))
def _eq_2_27(s, t):
    desc = [C(s, t, i).monomial_mul(dsign(s, i) * _sign(s * i), 0, s * i * (i + 1) // 2) for i in range(t + 1)]
    quad = ZPoly([ny(s * (t + 1)), -L(s * (t + 1)), ONE])
    return d_poly_sum(s, t + 1), quad * ZPoly.from_desc(desc)


@identity(
    "EQ_2_28", "partial alternating sums of F_{ts(i-j)+m} collapse to one term",
    s=S, t=R(0, 5), i=R(0, 5), m=R(-3, 3), where=lambda s, t, i, m: i <= t,
)
def _eq_2_28(s, t, i, m):
    return prop25_sum(s, t, m, i, "F")


@identity(
    "EQ_2_29", "partial alternating sums of L_{ts(i-j)+m} collapse to one term",
    s=S, t=R(0, 5), i=R(0, 5), m=R(-3, 3), where=lambda s, t, i, m: i <= t,
)
def _eq_2_29(s, t, i, m):
    return prop25_sum(s, t, m, i, "L")


# ---------------------------------------------------------------------------
# product transforms
# ---------------------------------------------------------------------------


@identity(
    "EQ_3_2", "transform of F_{sn+m1}^{k1} F_{sn+m2}^{k2}",
    s=S, k1=R(0, 3), k2=R(0, 3), m1=R(-2, 2), m2=R(-2, 2),
    where=lambda s, k1, k2, m1, m2: 1 <= k1 + k2 <= 4,
)
def _eq_3_2(s, k1, k2, m1, m2):
    fac = ((1, m1, k1), (1, m2, k2))
    return verify_zrat(z_product(s, fac), lambda n: product_term(s, fac, n))


@identity(
    "EQ_3_5", "transform of F_{t1 sn+m1} F_{t2 sn+m2}",
    s=S, t1=R(0, 3), t2=R(0, 3), m1=R(-2, 2), m2=R(-2, 2),
    where=lambda s, t1, t2, m1, m2: t1 + t2 <= 5,
)
def _eq_3_5(s, t1, t2, m1, m2):
    fac = ((t1, m1, 1), (t2, m2, 1))
    return verify_zrat(z_product(s, fac), lambda n: product_term(s, fac, n))


@identity("EQ_3_11", "transform of general products of F_{tsn+m}^k", s=S, c=R(0, len(PRODUCT_CASES) - 1))
def _eq_3_11(s, c):
    fac = PRODUCT_CASES[c]
    return verify_zrat(z_product(s, fac), lambda n: product_term(s, fac, n))


# ---------------------------------------------------------------------------
# Fibopolynomial transforms and linear combinations
# ---------------------------------------------------------------------------


@identity("EQ_4_1", "transform of C(n, p)_{F_s}", s=S, p=R(0, 5))
def _eq_4_1(s, p):
    return verify_zrat(z_fibopoly(s, p), lambda n: C(s, n, p))


@identity("EQ_4_2", "transform of the shifted C(n + p0, p)_{F_s}", s=S, p=R(0, 5), p0=R(0, 5), where=lambda s, p, p0: p0 <= p)
def _eq_4_2(s, p, p0):
    return verify_zrat(z_fibopoly(s, p, p0), lambda n: C(s, n + p0, p))


@identity("EQ_4_3", "transform of products of Gibonacci powers", s=S, g=R(0, 4), c=R(0, len(PRODUCT_CASES) - 1))
def _eq_4_3(s, g, c):
    fac = PRODUCT_CASES[c]
    return verify_zrat(z_gib_product(s, SEEDS[g], fac), lambda n: product_term(s, fac, n, SEEDS[g]))


@identity(
    "EQ_4_4", "products of Gibonacci powers as combinations of shifted Fibopolynomials",
    s=S, g=R(0, 4), c=R(0, len(PRODUCT_CASES) - 1), n=NS,
)
def _eq_4_4(s, g, c, n):
    fac = PRODUCT_CASES[c]
    return product_term(s, fac, n, SEEDS[g]), _expand(decompose_product(s, fac, SEEDS[g]), s, n)


@identity(
    "EQ_4_52", "single Gibonacci power G_{stn+m}^k as a Fibopolynomial combination",
    s=S, g=R(0, 4), t=R(0, 2), m=R(-2, 2), k=R(1, 2), n=R(0, 8),
)
def _eq_4_52(s, g, t, m, k, n):
    fac = ((t, m, k),)
    return kind_term(SEEDS[g], s * t * n + m) ** k, _expand(decompose_product(s, fac, SEEDS[g]), s, n)


@identity("EQ_4_11", "F_{tsn+m} in shifted C(n+t-i, t)_{F_s}", s=S, t=R(0, 4), m=R(-3, 3), n=R(0, 8))
def _eq_4_11(s, t, m, n):
    return corollary43(s, t, m, "F", n)


@identity("EQ_4_11b", "L_{tsn+m} in shifted C(n+t-i, t)_{F_s}", s=S, t=R(0, 4), m=R(-3, 3), n=R(0, 8))
def _eq_4_11b(s, t, m, n):
    return corollary43(s, t, m, "L", n)


@identity("EQ_4_111", "F_{2sn+m} in three shifted C(., 2)_{F_s}", s=S, m=R(-3, 3), n=NS)
def _eq_4_111(s, m, n):
    rhs = F(m) * C(s, n + 2, 2) + ny(m) * L(s) * F(s - m) * C(s, n + 1, 2) - F(2 * s - m) * ny(m + s) * C(s, n, 2)
    return F(2 * s * n + m), rhs


@identity("EQ_4_112", "L_{2sn+m} in three shifted C(., 2)_{F_s}", s=S, m=R(-3, 3), n=NS)
def _eq_4_112(s, m, n):
    rhs = L(m) * C(s, n + 2, 2) - ny(m) * L(s) * L(s - m) * C(s, n + 1, 2) + L(2 * s - m) * ny(s + m) * C(s, n, 2)
    return L(2 * s * n + m), rhs


@identity("EQ_4_1124", "F_{sn}^2 = F_s^2 (C(n+1,2) + (-y)^s C(n,2))", s=S, n=NS)
def _eq_4_1124(s, n):
    return F(s * n) ** 2, F(s) ** 2 * (C(s, n + 1, 2) + ny(s) * C(s, n, 2))


@identity("EQ_4_1126", "F_{2sn}^2 / F_{2s}^2 in shifted C(., 4)_{F_s}", s=S, n=NS)
def _eq_4_1126(s, n):
    mid = yp(s) * (_sign(s + 1) * L(2 * s) + yp(s))
    rhs = C(s, n + 3, 4) + yp(6 * s) * C(s, n, 4) + mid * (C(s, n + 2, 4) + yp(2 * s) * C(s, n + 1, 4))
    return F(2 * s * n) ** 2, F(2 * s) ** 2 * rhs


@identity("EQ_4_113", "L_{sn}^2 in shifted C(., 2)_{F_s}", s=S, n=NS)
def _eq_4_113(s, n):
    rhs = 4 * C(s, n + 2, 2) - (3 * L(2 * s) + 2 * ny(s)) * C(s, n + 1, 2) + L(s) ** 2 * ny(s) * C(s, n, 2)
    return L(s * n) ** 2, rhs


@identity("EQ_4_114", "F_{sn}^3 / F_s^3 in shifted C(., 3)_{F_s}", s=S, n=NS)
def _eq_4_114(s, n):
    rhs = C(s, n + 2, 3) + 2 * ny(s) * L(s) * C(s, n + 1, 3) + ny(3 * s) * C(s, n, 3)
    return F(s * n) ** 3, F(s) ** 3 * rhs


@identity("EQ_4_115", "F_{sn} F_{2sn} F_{3sn} in shifted C(., 6)_{F_s}", s=S, n=NS)
def _eq_4_115(s, n):
    c = lambda k: C(s, n + k, 6)
    q = ny(s)
    block = yp(3 * s) * L(2 * s) * (L(2 * s) - q) * (L(2 * s) + 2 * q)
    rhs = c(5) + _sign(s + 1) * yp(15 * s) * c(0)
    rhs = rhs + yp(3 * s) * (_sign(s) * c(4) - yp(9 * s) * c(1))
    rhs = rhs + block * (_sign(s + 1) * c(3) + yp(3 * s) * c(2))
    return F(s * n) * F(2 * s * n) * F(3 * s * n), F(s) * F(2 * s) * F(3 * s) * rhs


@identity("EQ_4_116", "L_{2sn} F_{sn} / F_s in shifted C(., 3)_{F_s}", s=S, n=NS)
def _eq_4_116(s, n):
    rhs = L(2 * s) * C(s, n + 2, 3) - 2 * yp(2 * s) * L(s) * C(s, n + 1, 3) + ny(3 * s) * L(2 * s) * C(s, n, 3)
    return L(2 * s * n) * F(s * n), F(s) * rhs


@identity("EQ_4_118", "L_{2sn} L_{sn} in shifted C(., 3)_{F_s}", s=S, n=NS)
def _eq_4_118(s, n):
    q = ny(s)
    rhs = 4 * C(s, n + 3, 3) + 2 * q * L(2 * s) * (L(2 * s) + q) * C(s, n + 1, 3)
    rhs = rhs - (L(3 * s) + q * L(s)) * (3 * C(s, n + 2, 3) + ny(3 * s) * C(s, n, 3))
    return L(2 * s * n) * L(s * n), rhs


@identity("EQ_4_119", "F_{2s(n+1)} F_{s(n+2)}^2 in shifted C(., 4)_{F_s}", s=S, n=NS)
def _eq_4_119(s, n):
    rhs = L(s) ** 2 * C(s, n + 4, 4) + _sign(s + 1) * L(4 * s) * yp(s) * C(s, n + 3, 4) - L(2 * s) * yp(4 * s) * C(s, n + 2, 4)
    return F(2 * s * (n + 1)) * F(s * (n + 2)) ** 2, F(2 * s) * F(s) ** 2 * rhs


@identity("EQ_4_12", "transform of products of Gibopolynomial powers", s=S, g=R(0, 4), c=R(0, len(GIBOPOLY_CASES) - 1))
def _eq_4_12(s, g, c):
    fac = GIBOPOLY_CASES[c]
    zr = z_gibopoly_product(s, SEEDS[g], fac)
    return verify_zrat(zr, lambda n: gibopoly_product_term(s, SEEDS[g], fac, n), extra=6)


@identity(
    "EQ_4_13", "products of Gibopolynomial powers as Fibopolynomial combinations",
    s=S, g=R(0, 4), c=R(0, len(GIBOPOLY_CASES) - 1), n=NS,
)
def _eq_4_13(s, g, c, n):
    fac = GIBOPOLY_CASES[c]
    return gibopoly_product_term(s, SEEDS[g], fac, n), _expand(decompose_gibopoly(s, SEEDS[g], fac), s, n)


@identity("EQ_4_14", "C(n,2)_{F_s}^2 in shifted C(., 4)_{F_s}", s=S, n=NS)
def _eq_4_14(s, n):
    rhs = C(s, n + 2, 4) + ny(s) * L(s) ** 2 * C(s, n + 1, 4) + yp(4 * s) * C(s, n, 4)
    return C(s, n, 2) ** 2, rhs


def _falling_sum_numerator(s, p):
    # sum over i, j of sign * C(p+1, j) * F_{s(1-p+i-j)} ... F_{s(i-j)} z^{p-i}
    coeffs = [ZERO] * (p + 1)
    for i in range(p + 1):
        for j in range(i + 1):
            run = ONE
            for r in range(1, p + 1):
                run = run * F(s * (r - p + i - j))
            coeffs[p - i] = coeffs[p - i] + dsign(s, j) * C(s, p + 1, j) * run
    return ZPoly(coeffs).shift(1)


def _eq_4_15_pairs(s, p, weighted):
    fact = s_factorial("F", p, s)
    fac = [(1, s * (r - p), 1) for r in range(1, p + 1)]
    den = ZPoly.from_desc(
        [dsign(s, i) * C(s, p + 1, i) * (yp(s * i * (i - 1) // 2) if weighted else ONE) for i in range(p + 2)]
    )
    return [
        (z_fibopoly(s, p) * fact, z_product(s, fac)),
        (z_fibopoly(s, p), ZRat(_falling_sum_numerator(s, p), den * fact)),
    ]


@identity("EQ_4_15", "transform of C(n,p)_{F_s} through the falling product and a double sum", s=S, p=R(1, 5))
def _eq_4_15(s, p):
    return _eq_4_15_pairs(s, p, True)


@identity(
    "EQ_4_15_PRINTED", "the same with the denominator y-weights dropped, as printed", s=S, p=R(1, 5),
    expect="typo", note="without y^{si(i-1)/2} in the denominator the transform is wrong from p = 1 on",
)
def _eq_4_15_printed(s, p):
    return _eq_4_15_pairs(s, p, False)


@identity("EQ_4_16", "C(n,3)_{F_s}^2 in shifted C(., 6)_{F_s}", s=S, n=NS)
def _eq_4_16(s, n):
    c = lambda k: C(s, n + k, 6)
    rhs = c(3) + _sign(s) * yp(9 * s) * c(0)
    rhs = rhs + yp(s) * (L(2 * s) + ny(s)) ** 2 * (_sign(s) * c(2) + yp(3 * s) * c(1))
    return C(s, n, 3) ** 2, rhs


@identity("EQ_4_161", "C(n,2)_{F_s} C(n,3)_{F_s} in shifted C(., 5)_{F_s}", s=S, n=NS)
def _eq_4_161(s, n):
    rhs = (L(2 * s) + ny(s)) * C(s, n + 2, 5) + yp(2 * s) * (L(3 * s) + 2 * ny(s) * L(s)) * C(s, n + 1, 5)
    rhs = rhs + yp(6 * s) * C(s, n, 5)
    return C(s, n, 2) * C(s, n, 3), rhs


@identity("EQ_4_17", "C(n,2)_{F_{2s}} in shifted C(., 4)_{F_s}", s=S, n=NS)
def _eq_4_17(s, n):
    rhs = C(s, n + 2, 4) - ny(s) * L(2 * s) * C(s, n + 1, 4) + yp(4 * s) * C(s, n, 4)
    return C(2 * s, n, 2), rhs


@identity("EQ_4_18", "C(n,3)_{F_{2s}} in shifted C(., 6)_{F_s}", s=S, n=NS)
def _eq_4_18(s, n):
    c = lambda k: C(s, n + k, 6)
    rhs = c(3) + _sign(s + 1) * yp(9 * s) * c(0)
    rhs = rhs + yp(s) * (yp(2 * s) + L(4 * s)) * (_sign(s + 1) * c(2) + yp(3 * s) * c(1))
    return C(2 * s, n, 3), rhs


@identity("EQ_4_19", "C(n,3)_{L_s} in shifted C(., 3)_{F_s}", s=S, n=NS)
def _eq_4_19(s, n):
    c = lambda k: C(s, n + k, 3)
    g = L(2 * s) + ny(s)
    rhs = _rf(2 * _sign(s) * c(3), yp(3 * s) * L(3 * s))
    rhs = rhs + _rf(2 * _sign(s + 1) * g * c(2), yp(3 * s) * L(2 * s))
    rhs = rhs + _rf(2 * g * c(1), yp(2 * s) * L(s))
    rhs = rhs - _rf(c(0))
    return gibopolynomial("L", s, n, 3), rhs


@identity("EQ_4_191", "C(n,2)_{L_{2s}} C(n,2)_{F_s} in shifted C(., 6)_{F_s}", s=S, n=NS)
def _eq_4_191(s, n):
    c = lambda k: C(s, n + k, 6)
    poly = c(4) + yp(12 * s) * c(0) - yp(2 * s) * L(s) ** 2 * (c(3) + yp(6 * s) * c(1))
    frac = _rf(ny(3 * s) * (L(10 * s) + 3 * yp(4 * s) * L(2 * s) + 4 * ny(5 * s)) * c(2), L(4 * s))
    return gibopolynomial("L", 2 * s, n, 2) * C(s, n, 2), _rf(poly) + frac


@identity("EQ_4_192", "C(n,2)_{F_s}^2 - C(n,2)_{F_{2s}} = 2 (-y)^s (F_{3s}/F_s) C(n+1,4)_{F_s}", s=S, n=NS)
def _eq_4_192(s, n):
    return F(s) * (C(s, n, 2) ** 2 - C(2 * s, n, 2)), 2 * ny(s) * F(3 * s) * C(s, n + 1, 4)


@identity("EQ_4_192_PRODUCT", "product form of the squared-minus-doubled difference", s=S, n=R(-2, 10))
def _eq_4_192_product(s, n):
    lhs = L(2 * s) * F(s * n) * F(s * (n - 1)) - F(s) ** 2 * L(s * n) * L(s * (n - 1))
    return lhs, 2 * ny(s) * F(s * (n + 1)) * F(s * (n - 2))


def _vanish_window(c, cases, gibo):
    fac = cases[c]
    order = _gibo_order(fac) if gibo else _order(fac)
    return lambda n: order + 1 <= n <= order + 4


@identity(
    "EQ_4_20", "D-weighted alternating sum of Gibonacci products vanishes",
    s=S, g=R(0, 4), c=R(0, len(PRODUCT_CASES) - 1), n=R(1, 10),
    where=lambda s, g, c, n: _vanish_window(c, PRODUCT_CASES, False)(n),
)
def _eq_4_20(s, g, c, n):
    return recurrence_vanishing(s, SEEDS[g], PRODUCT_CASES[c], n), ZERO


@identity(
    "EQ_4_21", "D-weighted alternating sum of Gibopolynomial products vanishes",
    s=S, g=R(0, 4), c=R(0, len(GIBOPOLY_CASES) - 1), n=R(1, 10),
    where=lambda s, g, c, n: _vanish_window(c, GIBOPOLY_CASES, True)(n),
)
def _eq_4_21(s, g, c, n):
    return recurrence_vanishing(s, SEEDS[g], GIBOPOLY_CASES[c], n, gibo=True), _rf(ZERO)


# ---------------------------------------------------------------------------
# convolution corollaries
# ---------------------------------------------------------------------------


@identity("EQ_4_23", "C(n+1, p+2)_{F_s} as a single convolution", s=S, p=R(0, 4), n=NS)
def _eq_4_23(s, p, n):
    return corollary48(s, p, "a", n)


@identity("EQ_4_24", "C(n+2, p+4)_{F_s} as a double convolution", s=S, p=R(0, 3), n=R(0, 7))
def _eq_4_24(s, p, n):
    return corollary48(s, p, "b", n)


@identity("EQ_4_25", "C(n+1,3)_{F_s} as a convolution of F_{3sn} and F_{sn}", s=S, n=NS)
def _eq_4_25(s, n):
    rhs = ZERO
    for t in range(n + 1):
        rhs = rhs + ny(s * (t - 1)) * F(3 * s * (n - t)) * F(s * t)
    return F(3 * s) * F(s) * C(s, n + 1, 3), rhs


@identity("EQ_4_262", "C(n+2,4)_{F_s} as a double sum", s=S, n=NS)
def _eq_4_262(s, n):
    rhs = ZERO
    for i in range(n + 1):
        for j in range(i + 1):
            rhs = rhs + ny(s * (2 * n - j - i - 1)) * F(4 * s * j) * F(2 * s * (i - j))
    return F(4 * s) * F(2 * s) * C(s, n + 2, 4), rhs


@identity("EQ_4_261", "C(n+1,5)_{F_s} as a convolution with C(t,3)_{F_s}", s=S, n=NS)
def _eq_4_261(s, n):
    rhs = ZERO
    for t in range(n + 1):
        rhs = rhs + ny(s * (t - 3)) * F(5 * s * (n - t)) * C(s, t, 3)
    return F(5 * s) * C(s, n + 1, 5), rhs


@identity("EQ_4_30", "C(n+2,5)_{F_s} as a double sum", s=S, n=NS)
def _eq_4_30(s, n):
    rhs = ZERO
    for i in range(n + 1):
        for j in range(i + 1):
            rhs = rhs + ny(s * (j + i - 3)) * F(5 * s * (n - i)) * F(3 * s * (i - j)) * F(s * j)
    return F(5 * s) * F(3 * s) * F(s) * C(s, n + 2, 5), rhs


@identity("EQ_4_31", "C(n+2,9)_{F_s} as a double sum with C(n-t,5)_{F_s}", s=S, n=NS)
def _eq_4_31(s, n):
    rhs = ZERO
    for t in range(n + 1):
        for j in range(t + 1):
            rhs = rhs + ny(s * (2 * n - t - j - 11)) * F(9 * s * j) * F(7 * s * (t - j)) * C(s, n - t, 5)
    return F(9 * s) * F(7 * s) * C(s, n + 2, 9), rhs


@identity("EQ_4_27", "C(n+p, 2p)_{F_s} as an iterated convolution", s=S, p=R(1, 4), n=R(0, 8))
def _eq_4_27(s, p, n):
    return corollary49(s, p, "even", n)


@identity("EQ_4_28", "C(n+p-1, 2p-1)_{F_s} as an iterated convolution", s=S, p=R(1, 4), n=R(0, 8))
def _eq_4_28(s, p, n):
    return corollary49(s, p, "odd", n)


@identity("EQ_4_29", "C(n+3,6)_{F_s} as a triple sum", s=S, n=R(0, 8))
def _eq_4_29(s, n):
    rhs = ZERO
    for i in range(n + 1):
        for j in range(i + 1):
            for t in range(j + 1):
                rhs = rhs + ny(s * (j + t + 3 * n - 3 * i - 3)) * F(6 * s * (i - j)) * F(4 * s * (j - t)) * F(2 * s * t)
    return F(6 * s) * F(4 * s) * F(2 * s) * C(s, n + 3, 6), rhs


@identity("EQ_4_32", "C(n+3,7)_{F_s} as a triple sum", s=S, n=R(0, 8))
def _eq_4_32(s, n):
    rhs = ZERO
    for i in range(n + 1):
        for j in range(i + 1):
            for t in range(j + 1):
                rhs = rhs + ny(s * (i + j + t - 6)) * F(7 * s * (n - i)) * F(5 * s * (i - j)) * F(3 * s * (j - t)) * F(s * t)
    return F(7 * s) * F(5 * s) * F(3 * s) * F(s) * C(s, n + 3, 7), rhs


# ---------------------------------------------------------------------------
# partial fractions and their sequence forms
# ---------------------------------------------------------------------------


@identity("EQ_4_35", "partial fractions over the even-case quadratics", s=S, p=R(1, 4), k=R(1, 4), where=lambda s, p, k: k <= p)
def _eq_4_35(s, p, k):
    return partial_fractions(s, p, k, "even")


@identity("EQ_4_36", "partial fractions over the odd-case quadratics", s=S, p=R(1, 4), k=R(1, 4), where=lambda s, p, k: k <= p)
def _eq_4_36(s, p, k):
    return partial_fractions(s, p, k, "odd")


@identity(
    "EQ_4_39", "C(n+p+1-k, 2p)_{F_s} as a convolution of F-sequences",
    s=S, p=R(1, 4), k=R(1, 4), n=NS, where=lambda s, p, k, n: k <= p,
)
def _eq_4_39(s, p, k, n):
    return corollary410(s, p, k, "even", n)


@identity(
    "EQ_4_40", "C(n+p-k, 2p-1)_{F_s} as a sum of F-sequences",
    s=S, p=R(1, 4), k=R(1, 4), n=NS, where=lambda s, p, k, n: k <= p,
)
def _eq_4_40(s, p, k, n):
    return corollary410(s, p, k, "odd", n)


@identity("EQ_4_46", "C(n+1,2)_{F_s} as a weighted sum of F_{2st}", s=S, n=NS)
def _eq_4_46(s, n):
    rhs = ZERO
    for t in range(n + 1):
        rhs = rhs + ny(s * (n - t)) * F(2 * s * t)
    return F(2 * s) * C(s, n + 1, 2), rhs


@identity("EQ_4_47", "C(n+3-k,4)_{F_s} for k = 1, 2", s=S, k=R(1, 2), n=NS)
def _eq_4_47(s, k, n):
    den = L(4 * s) - ny(s) * L(2 * s)
    rhs = ZERO
    for t in range(n + 1):
        w = ny(2 * s * (n - t))
        rhs = rhs + w * (F(2 * s) * F(4 * s * (t + 1 - k)) - F(4 * s) * ny(s * (t - k)) * F(2 * s * (t + 1 - k)))
    return den * F(4 * s) * F(2 * s) * C(s, n + 3 - k, 4), rhs


@identity("EQ_4_48", "C(n+2-k,3)_{F_s} for k = 1, 2", s=S, k=R(1, 2), n=NS)
def _eq_4_48(s, k, n):
    den = L(3 * s) - ny(s) * L(s)
    rhs = F(s) * F(3 * s * (n + 1 - k)) - F(3 * s) * ny(s * (n - k)) * F(s * (n + 1 - k))
    return den * F(3 * s) * F(s) * C(s, n + 2 - k, 3), rhs


@identity("EQ_4_49", "C(n+4-k,6)_{F_s} for k = 1, 2, 3", s=S, k=R(1, 3), n=R(0, 8))
def _eq_4_49(s, k, n):
    l6, l4, l2 = L(6 * s), ny(s) * L(4 * s), ny(2 * s) * L(2 * s)
    d6 = (l6 - l4) * (l6 - l2) * F(6 * s)
    d4 = (l4 - l6) * (l4 - l2) * F(4 * s)
    d2 = (l2 - l6) * (l2 - l4) * F(2 * s)
    n6, n4, n2 = ZERO, ZERO, ZERO
    for t in range(n + 1):
        w = ny(3 * s * (n - t))
        n6 = n6 + w * F(6 * s * (t + 1 - k))
        n4 = n4 + w * ny(s * (t - k)) * F(4 * s * (t + 1 - k))
        n2 = n2 + w * ny(2 * s * (t - k)) * F(2 * s * (t + 1 - k))
    return C(s, n + 4 - k, 6), _rf(n6, d6) + _rf(n4, d4) + _rf(n2, d2)


@identity("EQ_4_50", "C(n+3-k,5)_{F_s} for k = 1, 2, 3", s=S, k=R(1, 3), n=NS)
def _eq_4_50(s, k, n):
    l5, l3, l1 = L(5 * s), ny(s) * L(3 * s), ny(2 * s) * L(s)
    d5 = (l5 - l3) * (l5 - l1) * F(5 * s)
    d3 = (l3 - l5) * (l3 - l1) * F(3 * s)
    d1 = (l1 - l5) * (l1 - l3) * F(s)
    n5 = F(5 * s * (n + 1 - k))
    n3 = ny(s * (n - k)) * F(3 * s * (n + 1 - k))
    n1 = ny(2 * s * (n - k)) * F(s * (n + 1 - k))
    return C(s, n + 3 - k, 5), _rf(n5, d5) + _rf(n3, d3) + _rf(n1, d1)


# ---------------------------------------------------------------------------
# derivatives
# ---------------------------------------------------------------------------


@identity("EQ_5_1", "d/dx L_n = n F_n and d/dy L_n = n F_{n-1}", n=R(-4, 14))
def _eq_5_1(n):
    return [(L(n).d_dx(), n * F(n)), (L(n).d_dy(), n * F(n - 1))]


def _z_derivative(s, p, axis):
    d = d_poly_sum(s, p)
    dd = d.map(lambda c: c.d_dx() if axis == "x" else c.d_dy())
    sign = _sign(s + 1)
    return ZRat((dd * (-sign)).shift(1), d * d)


@identity("EQ_5_2", "transform of d/dx C(n,p)_{F_s}", s=S, p=R(1, 4))
def _eq_5_2(s, p):
    return verify_zrat(_z_derivative(s, p, "x"), lambda n: C(s, n, p).d_dx())


@identity("EQ_5_91", "transform of d/dy C(n,p)_{F_s}", s=S, p=R(1, 4))
def _eq_5_91(s, p):
    return verify_zrat(_z_derivative(s, p, "y"), lambda n: C(s, n, p).d_dy())


@identity("EQ_5_4", "d/dx C(n,2p)_{F_s} as a convolution", s=S, p=R(1, 3), n=R(0, 8))
def _eq_5_4(s, p, n):
    kern = lambda u: sum((ny(s * k * u) * F(2 * s * (p - k) * u) * (p - k) for k in range(p)), ZERO)
    return C(s, n, 2 * p).d_dx(), 2 * s * _conv(lambda t: C(s, t, 2 * p), kern, n)


@identity("EQ_5_5", "d/dx C(n,2p-1)_{F_s} as a convolution", s=S, p=R(1, 3), n=R(0, 8))
def _eq_5_5(s, p, n):
    kern = lambda u: sum(
        (ny(s * k * u) * F(s * (2 * p - 1 - 2 * k) * u) * (2 * p - 1 - 2 * k) for k in range(p)), ZERO
    )
    return C(s, n, 2 * p - 1).d_dx(), s * _conv(lambda t: C(s, t, 2 * p - 1), kern, n)


@identity("EQ_5_6", "d/dx C(n,p)_{F_s}, general p", s=S, p=R(1, 4), n=R(0, 8))
def _eq_5_6(s, p, n):
    return derivative_formulas(s, p, "x", n)


@identity("EQ_5_7", "d/dx C(n,2)_{F_s}", s=S, n=NS)
def _eq_5_7(s, n):
    return C(s, n, 2).d_dx(), 2 * s * _conv(lambda t: F(2 * s * t), lambda u: C(s, u, 2), n)


@identity("EQ_5_8", "d/dx C(n,3)_{F_s}", s=S, n=NS)
def _eq_5_8(s, n):
    kern = lambda t: 3 * F(3 * s * t) + ny(s * t) * F(s * t)
    return C(s, n, 3).d_dx(), s * _conv(kern, lambda u: C(s, u, 3), n)


@identity("EQ_5_9", "d/dx C(n,4)_{F_s}", s=S, n=NS)
def _eq_5_9(s, n):
    kern = lambda t: 2 * F(4 * s * t) + ny(s * t) * F(2 * s * t)
    return C(s, n, 4).d_dx(), 2 * s * _conv(kern, lambda u: C(s, u, 4), n)


def _dy_even(s, p, u, correction):
    """``s`` times the bracket of the even-order y-derivative, scaled to stay integral."""
    out = ZERO
    for k in range(p):
        a = 2 * s * (p - k) * (u + 1)
        out = out + ny(s * k * (u + 1)) * (2 * p * F(a - 1) + F(a).monomial_mul(k, 1, -1))
    return s * (out - correction * ny(s * p * (u + 1) - 1))


@identity("EQ_5_10", "d/dy C(n+1,2p)_{F_s} as a convolution", s=S, p=R(1, 3), n=R(0, 8))
def _eq_5_10(s, p, n):
    rhs = _conv(lambda t: C(s, t, 2 * p), lambda u: _dy_even(s, p, u, p), n)
    return C(s, n + 1, 2 * p).d_dy(), rhs


@identity(
    "EQ_5_10_PRINTED", "d/dy C(n+1,2p)_{F_s} with the correction term divided by p as printed",
    expect="typo", note="the extra 1/p on the (-y)^{sp(n+1)-1} term is right only for p = 1",
    s=S, p=R(1, 3), n=R(0, 8),
)
def _eq_5_10_printed(s, p, n):
    rhs = _conv(lambda t: C(s, t, 2 * p), lambda u: _dy_even(s, p, u, 1), n)
    return C(s, n + 1, 2 * p).d_dy(), rhs


@identity("EQ_5_11", "d/dy C(n+1,2p-1)_{F_s} as a convolution", s=S, p=R(1, 3), n=R(0, 8))
def _eq_5_11(s, p, n):
    def kern(u):
        out = ZERO
        for k in range(p):
            a = s * (2 * p - 1 - 2 * k) * (u + 1)
            out = out + ny(s * k * (u + 1)) * ((2 * p - 1) * F(a - 1) + F(a).monomial_mul(k, 1, -1))
        return s * out

    return C(s, n + 1, 2 * p - 1).d_dy(), _conv(lambda t: C(s, t, 2 * p - 1), kern, n)


@identity("EQ_5_12", "d/dy C(n+1,p)_{F_s}, general p", s=S, p=R(1, 4), n=R(0, 8))
def _eq_5_12(s, p, n):
    return derivative_formulas(s, p, "y", n)


@identity("EQ_5_12_P2", "d/dy C(n+1,2)_{F_s}", s=S, n=NS)
def _eq_5_12_p2(s, n):
    kern = lambda t: 2 * F(2 * s * (t + 1) - 1) - ny(s * (t + 1) - 1)
    return C(s, n + 1, 2).d_dy(), s * _conv(kern, lambda u: C(s, u, 2), n)


@identity("EQ_5_14", "d/dy C(n+1,3)_{F_s}", s=S, n=NS)
def _eq_5_14(s, n):
    def kern(t):
        a = s * (t + 1)
        return 3 * F(3 * a - 1) + ny(a) * (3 * F(a - 1) + F(a).monomial_mul(1, 1, -1))

    return C(s, n + 1, 3).d_dy(), s * _conv(kern, lambda u: C(s, u, 3), n)


@identity("EQ_5_15", "d/dy C(n+1,4)_{F_s}", s=S, n=NS)
def _eq_5_15(s, n):
    def kern(t):
        a = s * (t + 1)
        return 4 * F(4 * a - 1) + ny(a) * (4 * F(2 * a - 1) + F(2 * a).monomial_mul(1, 1, -1)) - 2 * ny(2 * a - 1)

    return C(s, n + 1, 4).d_dy(), s * _conv(kern, lambda u: C(s, u, 4), n)


@identity("EQ_5_16", "d/dx F_{sn} through the self-convolution of F_{sn}", s=S, n=R(0, 12))
def _eq_5_16(s, n):
    conv = _conv(lambda t: F(s * t), lambda u: F(s * u), n)
    return F(s) * F(s * n).d_dx(), F(s).d_dx() * F(s * n) + s * F(s) * conv


@identity("EQ_5_17", "d/dy F_{s(n+1)} through a shifted convolution", s=S, n=R(0, 12))
def _eq_5_17(s, n):
    conv = _conv(lambda t: F(s * t), lambda u: F(s * (u + 1) - 1), n)
    return F(s) * F(s * (n + 1)).d_dy(), F(s).d_dy() * F(s * (n + 1)) + s * F(s) * conv


@identity("EQ_5_18", "d/dx F_n = d/dy F_{n+1} = (F * F)_n", n=R(0, 12))
def _eq_5_18(n):
    return remark519(n)[:2]


@identity("EQ_5_19", "(F * F)_n = (n L_n - x F_n) / (x^2 + 4y), exactly divisible", n=R(0, 12))
def _eq_5_19(n):
    return remark519(n)[2]
