"""Rational Z-transforms over the bivariate coefficient ring.

A transform ``A(z) = sum_n a_n z^{-n}`` is held as a :class:`ZRat`, a pair of
:class:`ZPoly` whose coefficients are ring elements (``BiPoly``, ``RatFunc``
or ``ExtElem``).  :func:`verify_zrat` ties a transform to a directly generated
sequence through the linear recurrence encoded by its denominator.
"""

from __future__ import annotations

from typing import Callable, Iterable, List, Sequence, Tuple

from .fibopoly import fibopolynomial, gibopolynomial
from .polyring import ONE, ZERO, BiPoly, ExtElem, RatFunc, alpha, beta, neg_y_pow
from .sequences import GibSpec, PolySeq, fib, kind_term, lucas, product_term

__all__ = [
    "NonUnitLeading",
    "ZPoly",
    "ZRat",
    "DPoly",
    "dsign",
    "d_poly_sum",
    "d_poly_factored",
    "d_poly_binet",
    "z_fib",
    "z_lucas",
    "z_const",
    "z_product",
    "z_gib_product",
    "z_gibopoly_product",
    "z_fibopoly",
    "product_numerator",
    "verify_zrat",
    "prop25_sum",
    "prop22_identity",
]

Factor = Tuple[int, int, int]


class NonUnitLeading(ValueError):
    """The denominator's leading coefficient is not +1 or -1."""


def dsign(s: int, i: int) -> int:
    """``(-1)^{(si + 2(s+1))(i+1)/2}``, from the integer exponent."""
    e = (s * i + 2 * (s + 1)) * (i + 1)
    assert e % 2 == 0
    return -1 if (e // 2) % 2 else 1


class ZPoly:
    """Polynomial in ``z``; ``coeffs[i]`` multiplies ``z**i``."""

    __slots__ = ("coeffs",)
    __hash__ = None

    def __init__(self, coeffs: Iterable = ()):
        c = list(coeffs)
        while c and not c[-1]:
            c.pop()
        self.coeffs: Tuple = tuple(c)

    @classmethod
    def from_desc(cls, coeffs: Sequence) -> "ZPoly":
        return cls(reversed(list(coeffs)))

    @classmethod
    def monomial(cls, c, k: int) -> "ZPoly":
        return cls([0] * k + [c])

    def desc(self) -> List:
        """Coefficients from the highest power of ``z`` down."""
        return list(reversed(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "ZPoly") -> "ZPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return ZPoly(self[i] + other[i] for i in range(n))

    def __neg__(self) -> "ZPoly":
        return ZPoly(-c for c in self.coeffs)

    def __sub__(self, other: "ZPoly") -> "ZPoly":
        return self + (-other)

    def __mul__(self, other) -> "ZPoly":
        if not isinstance(other, ZPoly):
            return ZPoly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return ZPoly(out)

    def __rmul__(self, other) -> "ZPoly":
        return ZPoly(other * c for c in self.coeffs)

    def __pow__(self, k: int) -> "ZPoly":
        out = ZPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> "ZPoly":
        """Multiply by ``z**k``."""
        return ZPoly([0] * k + list(self.coeffs))

    def d_dz(self) -> "ZPoly":
        return ZPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def map(self, f: Callable) -> "ZPoly":
        return ZPoly(f(c) for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return all(not (self[i] - other[i]) for i in range(n))

    def to_json(self) -> List[dict]:
        return [c.to_json() if hasattr(c, "to_json") else BiPoly.const(c).to_json() for c in self.desc()]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            zp = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            cs = str(c)
            if zp and cs == "1":
                parts.append(zp)
            elif zp and cs == "-1":
                parts.append("-" + zp)
            elif zp:
                parts.append(f"({cs}) {zp}")
            else:
                parts.append(f"({cs})")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"ZPoly({self})"


class DPoly(ZPoly):
    """A D-polynomial of degree ``k_plus_1`` in ``z``, tagged with its stride."""

    __slots__ = ("s", "k_plus_1")

    def __init__(self, s: int, k_plus_1: int, coeffs: Iterable = ()):
        super().__init__(coeffs)
        self.s = s
        self.k_plus_1 = k_plus_1


class ZRat:
    """``num(z) / den(z)``; equality by cross-multiplication."""

    __slots__ = ("num", "den")
    __hash__ = None

    def __init__(self, num: ZPoly, den: ZPoly):
        if not den:
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZRat):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __add__(self, other: "ZRat") -> "ZRat":
        return ZRat(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "ZRat") -> "ZRat":
        return ZRat(self.num * other.den - other.num * self.den, self.den * other.den)

    def __mul__(self, other) -> "ZRat":
        """Product of transforms (convolution of sequences) or scaling by a coefficient."""
        if isinstance(other, ZRat):
            return ZRat(self.num * other.num, self.den * other.den)
        return ZRat(self.num * other, self.den)

    __rmul__ = __mul__

    def scale_argument(self, lam, lam_inv) -> "ZRat":
        """Transform of ``lam^n a_n``: ``A(z / lam)``, cleared by ``lam^deg``.

        ``lam_inv`` must be the inverse of ``lam`` in the coefficient ring.
        """
        d = max(self.num.degree, self.den.degree)

        def sc(p: ZPoly) -> ZPoly:
            return ZPoly(c * _pow(lam, d - i, lam_inv) for i, c in enumerate(p.coeffs))

        return ZRat(sc(self.num), sc(self.den))

    def times_n(self) -> "ZRat":
        """Transform of ``n a_n``: ``-z A'(z)``."""
        n, d = self.num, self.den
        return ZRat(-((n.d_dz() * d - n * d.d_dz()).shift(1)), d * d)

    def advance(self, k: int, initial: Sequence) -> "ZRat":
        """Transform of ``a_{n+k}`` given ``a_0 .. a_{k-1}``."""
        head = ZPoly([0])
        for j, a in enumerate(initial[:k]):
            head = head + ZPoly.monomial(a, k - j)
        return ZRat(self.num.shift(k) - head * self.den, self.den)

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    def __str__(self) -> str:
        return f"[{self.num}] / [{self.den}]"

    def __repr__(self) -> str:
        return f"ZRat({self})"


def _pow(lam, e: int, lam_inv):
    if e >= 0:
        return lam ** e
    return lam_inv ** (-e)


# -- D-polynomials --------------------------------------------------------


def d_poly_sum(s: int, k: int) -> DPoly:
    """``D_{s,k+1}(z) = sum_i dsign(s,i) C(k+1,i)_{F_s} y^{si(i-1)/2} z^{k+1-i}``."""
    if k < 0:
        raise ValueError("k must be >= 0")
    desc = [
        fibopolynomial(s, k + 1, i).monomial_mul(dsign(s, i), 0, s * i * (i - 1) // 2)
        for i in range(k + 2)
    ]
    return DPoly(s, k + 1, reversed(desc))


def d_poly_factored(s: int, k: int) -> DPoly:
    """The same polynomial assembled from its quadratic factors over ``Z[x, y]``."""
    if k < 0:
        raise ValueError("k must be >= 0")
    sign = 1 if (s + 1) % 2 == 0 else -1
    out = ZPoly([sign])
    if k % 2 == 0:
        p = k // 2
        out = out * ZPoly([-neg_y_pow(s * p), 1])
        for j in range(p):
            c1 = neg_y_pow(s * j) * lucas(2 * s * (p - j))
            out = out * ZPoly([BiPoly.monomial(1, 0, 2 * p * s), -c1, 1])
    else:
        p = (k + 1) // 2
        for j in range(p):
            c1 = neg_y_pow(s * j) * lucas(s * (2 * p - 1 - 2 * j))
            out = out * ZPoly([neg_y_pow((2 * p - 1) * s), -c1, 1])
    return DPoly(s, k + 1, out.coeffs)


def d_poly_binet(s: int, k: int) -> ZPoly:
    """``(-1)^{s+1} prod_{j=0}^{k} (z - alpha^{sj} beta^{s(k-j)})`` over the extension ring."""
    a, b = alpha(), beta()
    out = ZPoly([ExtElem(1 if (s + 1) % 2 == 0 else -1)])
    for j in range(k + 1):
        out = out * ZPoly([-(a ** (s * j) * b ** (s * (k - j))), ExtElem(1)])
    return out


# -- transforms -----------------------------------------------------------


def _quadratic_den(s: int) -> ZPoly:
    return ZPoly([neg_y_pow(s), -lucas(s), ONE])


def z_fib(s: int, m: int) -> ZRat:
    """Transform of ``F_{sn+m}``."""
    num = ZPoly([ZERO, neg_y_pow(m) * fib(s - m), fib(m)])
    return ZRat(num, _quadratic_den(s))


def z_lucas(s: int, m: int) -> ZRat:
    """Transform of ``L_{sn+m}``."""
    num = ZPoly([ZERO, -(neg_y_pow(m) * lucas(s - m)), lucas(m)])
    return ZRat(num, _quadratic_den(s))


def z_const() -> ZRat:
    """Transform of the constant sequence 1."""
    return ZRat(ZPoly([ZERO, ONE]), ZPoly([-ONE, ONE]))


def product_numerator(s: int, order: int, term: Callable[[int], object]) -> ZPoly:
    """``z * sum_{i=0}^{T} sum_{j=0}^{i} dsign(s,j) C(T+1,j)_{F_s} a_{i-j} y^{sj(j-1)/2} z^{T-i}``.

    ``term(n)`` supplies ``a_n``; ``order`` is ``T``.
    """
    weights = [
        fibopolynomial(s, order + 1, j).monomial_mul(dsign(s, j), 0, s * j * (j - 1) // 2)
        for j in range(order + 1)
    ]
    terms = [term(n) for n in range(order + 1)]
    coeffs = [0] * (order + 2)
    for i in range(order + 1):
        acc = 0
        for j in range(i + 1):
            a = terms[i - j]
            if a:
                acc = acc + weights[j] * a
        coeffs[order - i + 1] = acc
    return ZPoly(coeffs)


def _order(factors: Sequence[Factor]) -> int:
    total = 0
    for t, m, k in factors:
        if t < 0 or k < 0:
            raise ValueError("factor parameters t and k must be >= 0")
        total += t * k
    return total


def z_product(s: int, factors: Sequence[Factor]) -> ZRat:
    """Transform of ``prod_i F_{t_i s n + m_i}^{k_i}`` over the D-polynomial of order ``sum t_i k_i``."""
    order = _order(factors)
    fs = [tuple(f) for f in factors]
    num = product_numerator(s, order, lambda n: product_term(s, fs, n))
    return ZRat(num, d_poly_sum(s, order))


def z_gib_product(s: int, spec: "GibSpec | str", factors: Sequence[Factor]) -> ZRat:
    """Transform of ``prod_i G_{t_i s n + m_i}^{k_i}`` for a Gibonacci sequence ``G``."""
    order = _order(factors)
    fs = [tuple(f) for f in factors]
    num = product_numerator(s, order, lambda n: product_term(s, fs, n, spec))
    return ZRat(num, d_poly_sum(s, order))


def gibopoly_product_term(s: int, spec: "GibSpec | str", factors: Sequence[Factor], n: int):
    """``prod_i C(n, p_i)^{r_i}_{G_{s t_i}}``; factors are ``(t, p, r)``."""
    out = RatFunc(ONE)
    for t, p, r in factors:
        if r:
            out = out * gibopolynomial(spec, s * t, n, p) ** r
    return out


def z_gibopoly_product(s: int, spec: "GibSpec | str", factors: Sequence[Factor]) -> ZRat:
    """Transform of ``prod_i C(n, p_i)^{r_i}_{G_{s t_i}}`` (factors ``(t, p, r)``), order ``sum t p r``."""
    order = sum(t * p * r for t, p, r in factors)
    fs = [tuple(f) for f in factors]
    num = product_numerator(s, order, lambda n: gibopoly_product_term(s, spec, fs, n))
    return ZRat(num, d_poly_sum(s, order))


def z_fibopoly(s: int, p: int, shift: int = 0) -> ZRat:
    """Transform of ``C(n + shift, p)_{F_s}`` for ``0 <= shift <= p``."""
    if p < 0 or not 0 <= shift <= p:
        raise ValueError("need p >= 0 and 0 <= shift <= p")
    sign = 1 if (s + 1) % 2 == 0 else -1
    return ZRat(ZPoly.monomial(BiPoly.const(sign), shift + 1), d_poly_sum(s, p))


# -- verification ---------------------------------------------------------


def _is_unit(c) -> bool:
    return not (c - 1) or not (c + 1)


def verify_zrat(zr: ZRat, seq: "PolySeq | Callable[[int], object]", extra: int = 6) -> bool:
    """Check ``den * A - num`` vanishes through ``z^{-extra}`` for the sequence ``seq``.

    With ``den = sum_i q_i z^{d-i}`` and ``num = sum_m p_m z^{d-m}`` this is
    ``sum_{i<=min(m,d)} q_i a_{m-i} = p_m`` for ``0 <= m <= d + extra``
    (``p_m = 0`` for ``m > d``).
    """
    d = zr.den.degree
    if not _is_unit(zr.den.lead()):
        raise NonUnitLeading(f"leading denominator coefficient {zr.den.lead()} is not a unit")
    if zr.num.degree > d:
        return False
    get = seq.__getitem__ if isinstance(seq, PolySeq) else seq
    q = zr.den.desc()
    a = [get(n) for n in range(d + extra + 1)]
    for m in range(d + extra + 1):
        total = 0
        for i in range(min(m, d) + 1):
            if q[i] and a[m - i]:
                total = total + q[i] * a[m - i]
        target = zr.num[d - m] if m <= d else 0
        if total - target:
            return False
    return True


# -- auxiliary closed forms -------------------------------------------------


def prop25_sum(s: int, t: int, m: int, i: int, kind: str = "F") -> Tuple[BiPoly, BiPoly]:
    """Left-hand alternating sum and its one-term closed form."""
    if not 0 <= i <= t:
        raise ValueError("need 0 <= i <= t")
    lhs = ZERO
    for j in range(i + 1):
        w = fibopolynomial(s, t + 1, j).monomial_mul(dsign(s, j), 0, s * j * (j - 1) // 2)
        lhs = lhs + w * kind_term(kind, t * s * (i - j) + m)
    e = s + i + 1 + s * i * (i + 1) // 2
    rhs = (fibopolynomial(s, t, i) * kind_term(kind, m - i * s)).monomial_mul(
        -1 if e % 2 else 1, 0, s * i * (i + 1) // 2
    )
    return lhs, rhs


def _d_root_scaled(s: int, t: int, root: ExtElem) -> ZPoly:
    desc = []
    for i in range(t + 2):
        w = fibopolynomial(s, t + 1, i).monomial_mul(dsign(s, i), 0, s * i * (i - 1) // 2)
        desc.append(root ** (s * i) * w)
    return ZPoly.from_desc(desc)


def prop22_identity(s: int, t: int, k: int, m: int = 0, side: str = "a") -> bool:
    """Cross-multiplied check of the alpha/beta partial-fraction pair.

    Side ``a``: ``alpha^{sk}/D_alpha + beta^{sk}/D_beta``; side ``b``:
    ``alpha^{m+sk}/D_alpha - beta^{m+sk}/D_beta``, both against the
    corresponding fraction over ``D_{s,t+2}``.
    """
    a, b = alpha(), beta()
    da, db = _d_root_scaled(s, t, a), _d_root_scaled(s, t, b)
    big = d_poly_sum(s, t + 1).map(ExtElem)
    if side == "a":
        left = (db * (a ** (s * k)) + da * (b ** (s * k))) * big
        rnum = ZPoly([-(neg_y_pow(s * k) * lucas(s * (t - k + 1))), lucas(s * k)]).map(ExtElem)
    elif side == "b":
        left = (db * (a ** (m + s * k)) - da * (b ** (m + s * k))) * big
        rnum = ZPoly(
            [ExtElem(0, neg_y_pow(s * k + m) * fib(s * (t - k + 1) - m)), ExtElem(0, fib(s * k + m))]
        )
    else:
        raise ValueError("side must be 'a' or 'b'")
    return left == rnum * da * db
