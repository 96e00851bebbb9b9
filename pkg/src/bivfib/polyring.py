"""Exact arithmetic over Z[x, y, 1/y], its fraction field and Q(x, y)(w), w^2 = x^2 + 4y.

Three value types live here:

* :class:`BiPoly` -- sparse bivariate polynomial, Laurent in ``y`` only, with
  Python integer coefficients.
* :class:`RatFunc` -- unreduced fraction of two ``BiPoly``; equality is by
  cross-multiplication.
* :class:`ExtElem` -- ``u + v*w`` with ``RatFunc`` parts.

All values are immutable.  Binary operators accept plain ``int`` operands and
promote ``BiPoly -> RatFunc -> ExtElem`` as needed.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

__all__ = [
    "BiPoly",
    "RatFunc",
    "ExtElem",
    "NotDivisible",
    "DivisionByZero",
    "PoleAtZero",
    "X",
    "Y",
    "ONE",
    "ZERO",
    "W2",
    "alpha",
    "beta",
    "neg_y_pow",
    "as_ratfunc",
]

Monomial = Tuple[int, int]


class NotDivisible(ArithmeticError):
    """Raised by exact division when a nonzero remainder survives."""


class DivisionByZero(ZeroDivisionError):
    """Raised when dividing by the zero polynomial or zero fraction."""


class PoleAtZero(ZeroDivisionError):
    """Raised when y = 0 is substituted into a negative power of y."""


def _sort_key(mono: Monomial) -> Monomial:
    return (-mono[0], -mono[1])


class BiPoly:
    """Sparse polynomial in ``x`` (exponents >= 0) and ``y`` (any integer exponent)."""

    __slots__ = ("_t", "_h")

    def __init__(self, terms: Mapping[Monomial, int] | Iterable[Tuple[Monomial, int]] | None = None):
        d: Dict[Monomial, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for (ex, ey), c in items:
                ex, ey, c = int(ex), int(ey), int(c)
                if ex < 0:
                    raise ValueError("negative exponent of x")
                if c:
                    c += d.get((ex, ey), 0)
                    if c:
                        d[(ex, ey)] = c
                    else:
                        d.pop((ex, ey), None)
        self._t = d
        self._h = None

    @classmethod
    def _raw(cls, d: Dict[Monomial, int]) -> "BiPoly":
        # d must already be zero-free and owned by the new object
        obj = object.__new__(cls)
        obj._t = d
        obj._h = None
        return obj

    @classmethod
    def const(cls, c: int) -> "BiPoly":
        return cls._raw({(0, 0): int(c)} if c else {})

    @classmethod
    def monomial(cls, c: int, ex: int = 0, ey: int = 0) -> "BiPoly":
        if ex < 0:
            raise ValueError("negative exponent of x")
        return cls._raw({(ex, ey): int(c)} if c else {})

    # -- inspection -------------------------------------------------------

    def terms(self) -> list[Tuple[int, int, int]]:
        """Terms as ``(ex, ey, c)`` in canonical order (descending ex, then ey)."""
        return [(ex, ey, self._t[(ex, ey)]) for ex, ey in sorted(self._t, key=_sort_key)]

    def items(self) -> Iterator[Tuple[Monomial, int]]:
        return iter(self._t.items())

    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def coeff(self, ex: int, ey: int) -> int:
        return self._t.get((ex, ey), 0)

    def leading(self) -> Tuple[int, int, int]:
        if not self._t:
            raise ValueError("zero polynomial has no leading term")
        ex, ey = min(self._t, key=_sort_key)
        return ex, ey, self._t[(ex, ey)]

    def deg_x(self) -> int:
        return max((ex for ex, _ in self._t), default=-1)

    def deg_y(self) -> int:
        return max((ey for _, ey in self._t), default=-1)

    def min_ex(self) -> int:
        return min((ex for ex, _ in self._t), default=0)

    def min_ey(self) -> int:
        return min((ey for _, ey in self._t), default=0)

    def is_polynomial(self) -> bool:
        """True when no negative power of y occurs."""
        return all(ey >= 0 for _, ey in self._t)

    def is_constant(self) -> bool:
        return not self._t or set(self._t) == {(0, 0)}

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError("not a constant")
        return self._t.get((0, 0), 0)

    def content(self) -> int:
        g = 0
        for c in self._t.values():
            g = gcd(g, c)
        return g

    def coeff_of_x(self, ex: int) -> "BiPoly":
        """The coefficient of x^ex, as a Laurent polynomial in y."""
        return BiPoly._raw({(0, ey): c for (e, ey), c in self._t.items() if e == ex})

    # -- ring operations --------------------------------------------------

    @staticmethod
    def _coerce(other) -> "BiPoly | None":
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, int):
            return BiPoly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if len(o._t) > len(self._t):
            a, b = o._t, self._t
        else:
            a, b = self._t, o._t
        d = dict(a)
        for m, c in b.items():
            v = d.get(m, 0) + c
            if v:
                d[m] = v
            else:
                del d[m]
        return BiPoly._raw(d)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly._raw({m: -c for m, c in self._t.items()})

    def __pos__(self) -> "BiPoly":
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = dict(self._t)
        for m, c in o._t.items():
            v = d.get(m, 0) - c
            if v:
                d[m] = v
            else:
                del d[m]
        return BiPoly._raw(d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return ZERO
            return BiPoly._raw({m: c * other for m, c in self._t.items()})
        if not isinstance(other, BiPoly):
            return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        d: Dict[Monomial, int] = {}
        get = d.get
        for (bx, by), bc in b.items():
            for (ax, ay), ac in a.items():
                k = (ax + bx, ay + by)
                d[k] = get(k, 0) + ac * bc
        return BiPoly._raw({m: c for m, c in d.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BiPoly":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if len(self._t) == 1:
                ((ex, ey), c), = self._t.items()
                if ex == 0 and c in (1, -1):
                    return BiPoly._raw({(0, ey * k): c ** (-k)})
            raise ValueError("negative power of a non-unit polynomial")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (BiPoly, int)):
            return RatFunc(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, int):
            return RatFunc(BiPoly.const(other), self)
        return NotImplemented

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._t == o._t

    def __hash__(self) -> int:
        if self._h is None:
            self._h = hash(frozenset(self._t.items()))
        return self._h

    # -- monomial scaling and division -----------------------------------

    def monomial_mul(self, c: int, ex: int = 0, ey: int = 0) -> "BiPoly":
        """Multiply by ``c * x**ex * y**ey`` (``ey`` may be negative)."""
        if ex < 0:
            raise ValueError("negative exponent of x")
        if not c:
            return ZERO
        return BiPoly._raw({(mx + ex, my + ey): v * c for (mx, my), v in self._t.items()})

    def divmod_exact(self, other: "BiPoly") -> Tuple["BiPoly", "BiPoly"]:
        """Leading-term division; returns ``(q, r)`` and stops at the first non-divisible lead."""
        if not other:
            raise DivisionByZero("division by the zero polynomial")
        if not self:
            return ZERO, ZERO
        bx, by, bc = other.leading()
        qmin_y = self.min_ey() - other.min_ey()
        bterms = list(other._t.items())
        r = dict(self._t)
        q: Dict[Monomial, int] = {}
        while r:
            rx, ry = min(r, key=_sort_key)
            rc = r[(rx, ry)]
            qx, qy = rx - bx, ry - by
            if qx < 0 or qy < qmin_y or rc % bc:
                break
            qc = rc // bc
            q[(qx, qy)] = qc
            for (mx, my), mc in bterms:
                k = (mx + qx, my + qy)
                v = r.get(k, 0) - qc * mc
                if v:
                    r[k] = v
                else:
                    del r[k]
        return BiPoly._raw(q), BiPoly._raw(r)

    def exact_div(self, other: "BiPoly | int") -> "BiPoly":
        """Return ``q`` with ``self == q * other``; raise :class:`NotDivisible` otherwise."""
        o = self._coerce(other)
        if o is None:
            raise TypeError("exact_div expects a BiPoly or int divisor")
        if len(o._t) == 1:
            ((ex, ey), c), = o._t.items()
            out = {}
            for (mx, my), v in self._t.items():
                if mx < ex or v % c:
                    raise NotDivisible(f"{self} is not divisible by {o}")
                out[(mx - ex, my - ey)] = v // c
            return BiPoly._raw(out)
        q, r = self.divmod_exact(o)
        if r:
            raise NotDivisible(f"{self} is not divisible by {o}")
        return q

    def divides(self, other: "BiPoly") -> bool:
        try:
            other.exact_div(self)
        except NotDivisible:
            return False
        return True

    # -- calculus and evaluation -----------------------------------------

    def d_dx(self) -> "BiPoly":
        return BiPoly._raw({(ex - 1, ey): c * ex for (ex, ey), c in self._t.items() if ex})

    def d_dy(self) -> "BiPoly":
        return BiPoly._raw({(ex, ey - 1): c * ey for (ex, ey), c in self._t.items() if ey})

    def evaluate(self, x0, y0) -> Fraction:
        """Exact value at rational ``(x0, y0)``."""
        x0, y0 = Fraction(x0), Fraction(y0)
        total = Fraction(0)
        for (ex, ey), c in self._t.items():
            if ey < 0 and y0 == 0:
                raise PoleAtZero("negative power of y evaluated at y = 0")
            total += c * x0 ** ex * y0 ** ey
        return total

    def substitute(self, xv, yv):
        """Replace x by ``xv`` and y by ``yv`` (ring elements; ``yv`` must be invertible for Laurent terms)."""
        total = 0
        for (ex, ey), c in self._t.items():
            term = c * xv ** ex if ex else c
            if ey > 0:
                term = term * yv ** ey
            elif ey < 0:
                term = term * (1 / yv) ** (-ey)
            total = total + term
        return total

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {"terms": [{"x": ex, "y": ey, "c": str(c)} for ex, ey, c in self.terms()]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "BiPoly":
        return cls(((int(t["x"]), int(t["y"])), int(t["c"])) for t in obj["terms"])

    @classmethod
    def parse(cls, text: str) -> "BiPoly":
        """Read the text rendering back, e.g. ``"x^2 y^-3 - 2 y + 1"``.

        ``*`` between factors and missing spaces are tolerated.
        """
        src = text.replace("−", "-").replace("*", "").replace(" ", "")
        if not src:
            raise ValueError("empty polynomial")
        acc: Dict[Monomial, int] = {}
        i, n = 0, len(src)
        while i < n:
            sign = 1
            if src[i] in "+-":
                sign = -1 if src[i] == "-" else 1
                i += 1
            j = i
            while j < n and src[j].isdigit():
                j += 1
            coeff = int(src[i:j]) if j > i else 1
            seen = j > i
            i = j
            ex = ey = 0
            while i < n and src[i] in "xy":
                var = src[i]
                i += 1
                e = 1
                if i < n and src[i] == "^":
                    j = i + 1
                    if j < n and src[j] == "-":
                        j += 1
                    k = j
                    while k < n and src[k].isdigit():
                        k += 1
                    if k == j:
                        raise ValueError(f"bad exponent in {text!r}")
                    e = int(src[i + 1:k])
                    i = k
                if var == "x":
                    ex += e
                else:
                    ey += e
                seen = True
            if not seen or (i < n and src[i] not in "+-"):
                raise ValueError(f"cannot parse polynomial {text!r}")
            key = (ex, ey)
            acc[key] = acc.get(key, 0) + sign * coeff
        return cls(acc)

    def __str__(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for i, (ex, ey, c) in enumerate(self.terms()):
            mono = []
            if ex:
                mono.append("x" if ex == 1 else f"x^{ex}")
            if ey:
                mono.append("y" if ey == 1 else f"y^{ey}")
            mag = abs(c)
            body = " ".join(mono)
            if not body:
                body = str(mag)
            elif mag != 1:
                body = f"{mag} {body}"
            if i == 0:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"BiPoly({self})"


ZERO = BiPoly._raw({})
ONE = BiPoly._raw({(0, 0): 1})
X = BiPoly._raw({(1, 0): 1})
Y = BiPoly._raw({(0, 1): 1})
W2 = BiPoly._raw({(2, 0): 1, (0, 1): 4})


def neg_y_pow(m: int) -> BiPoly:
    """``(-y)**m`` for any integer ``m``."""
    return BiPoly._raw({(0, m): -1 if m % 2 else 1})


class RatFunc:
    """Unreduced fraction ``num / den`` of Laurent polynomials.

    Only integer content and common monomial factors are cancelled; equality
    is decided by cross-multiplication.
    """

    __slots__ = ("num", "den")
    __hash__ = None  # equality is cross-multiplication, no canonical form

    def __init__(self, num: BiPoly | int, den: BiPoly | int = 1, normalize: bool = True):
        num = BiPoly._coerce(num) if not isinstance(num, BiPoly) else num
        den = BiPoly._coerce(den) if not isinstance(den, BiPoly) else den
        if num is None or den is None:
            raise TypeError("RatFunc parts must be BiPoly or int")
        if not den:
            raise DivisionByZero("zero denominator")
        if normalize:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_zero(self) -> bool:
        return not self.num

    @staticmethod
    def _coerce(other) -> "RatFunc | None":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (BiPoly, int)):
            return RatFunc(other, ONE, normalize=False)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, normalize=False)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise DivisionByZero("division by zero fraction")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int) -> "RatFunc":
        if k < 0:
            return RatFunc(ONE) / (self ** (-k))
        return RatFunc(self.num ** k, self.den ** k)

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def to_bipoly(self) -> BiPoly:
        """Exact quotient as a Laurent polynomial, or :class:`NotDivisible`."""
        return self.num.exact_div(self.den)

    def d_dx(self) -> "RatFunc":
        return RatFunc(self.num.d_dx() * self.den - self.num * self.den.d_dx(), self.den * self.den)

    def d_dy(self) -> "RatFunc":
        return RatFunc(self.num.d_dy() * self.den - self.num * self.den.d_dy(), self.den * self.den)

    def evaluate(self, x0, y0) -> Fraction:
        d = self.den.evaluate(x0, y0)
        if d == 0:
            raise DivisionByZero("denominator vanishes at the evaluation point")
        return self.num.evaluate(x0, y0) / d

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    def __str__(self) -> str:
        if self.den == ONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc({self})"


def _normalize(num: BiPoly, den: BiPoly) -> Tuple[BiPoly, BiPoly]:
    if not num:
        return ZERO, ONE
    if den is ONE or den == ONE:
        return num, ONE
    g = gcd(num.content(), den.content())
    lead = den.leading()[2]
    if lead < 0:
        g = -g
    sx = min(num.min_ex(), den.min_ex())
    sy = den.min_ey()
    if g == 1 and sx == 0 and sy == 0:
        return num, den
    nd = {(ex - sx, ey - sy): c // g for (ex, ey), c in num._t.items()}
    dd = {(ex - sx, ey - sy): c // g for (ex, ey), c in den._t.items()}
    return BiPoly._raw(nd), BiPoly._raw(dd)


def as_ratfunc(v) -> RatFunc:
    if isinstance(v, RatFunc):
        return v
    return RatFunc(v, ONE, normalize=False)


Scalar = Union[int, BiPoly, RatFunc]


class ExtElem:
    """``u + v*w`` with ``w**2 = x**2 + 4y`` and ``u, v`` fractions."""

    __slots__ = ("u", "v")
    __hash__ = None

    def __init__(self, u: Scalar = 0, v: Scalar = 0):
        self.u = as_ratfunc(u)
        self.v = as_ratfunc(v)

    @staticmethod
    def _coerce(other) -> "ExtElem | None":
        if isinstance(other, ExtElem):
            return other
        if isinstance(other, (int, BiPoly, RatFunc)):
            return ExtElem(other, 0)
        return None

    def __bool__(self) -> bool:
        return bool(self.u) or bool(self.v)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExtElem(self.u + o.u, self.v + o.v)

    __radd__ = __add__

    def __neg__(self) -> "ExtElem":
        return ExtElem(-self.u, -self.v)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExtElem(self.u - o.u, self.v - o.v)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.v:
            return ExtElem(self.u * o.u, self.v * o.u)
        if not self.v:
            return ExtElem(self.u * o.u, self.u * o.v)
        return ExtElem(self.u * o.u + self.v * o.v * W2, self.u * o.v + self.v * o.u)

    __rmul__ = __mul__

    def conj(self) -> "ExtElem":
        return ExtElem(self.u, -self.v)

    def norm(self) -> RatFunc:
        return self.u * self.u - self.v * self.v * W2

    def inverse(self) -> "ExtElem":
        n = self.norm()
        if not n:
            raise DivisionByZero("element of norm zero")
        return ExtElem(self.u / n, -self.v / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> "ExtElem":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = ExtElem(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.u == o.u and self.v == o.v

    def __str__(self) -> str:
        return f"[{self.u}] + [{self.v}] w"

    def __repr__(self) -> str:
        return f"ExtElem({self})"


def alpha() -> ExtElem:
    """``(x + w) / 2``."""
    return ExtElem(RatFunc(X, 2), RatFunc(ONE, 2))


def beta() -> ExtElem:
    """``(x - w) / 2``."""
    return ExtElem(RatFunc(X, 2), RatFunc(-ONE, 2))
