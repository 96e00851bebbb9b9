"""s-Gibonacci factorials, s-Fibopolynomials and s-Gibopolynomials.

The s-Fibopolynomial ``C(n, k)_{F_s}`` is the generalized binomial coefficient
built on the stride-``s`` subsequence ``F_{sn}``.  It is generated by the
Pascal-type rule

    C(n, k) = F_{s(n-k)+1} C(n-1, k-1) + y F_{sk-1} C(n-1, k)

and is a genuine polynomial.  The product quotient is kept as an independent
oracle.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Dict, List, Union

from .polyring import ONE, ZERO, BiPoly, DivisionByZero, RatFunc, Y
from .sequences import GibSpec, fib, kind_term

__all__ = [
    "DegenerateDenominator",
    "s_factorial",
    "fibopolynomial",
    "fibopolynomial_by_quotient",
    "gibopolynomial",
    "triangle",
    "specialize",
]

Kind = Union[str, GibSpec]


class DegenerateDenominator(DivisionByZero):
    """A denominator factor of a Gibopolynomial vanishes identically."""


def s_factorial(kind: Kind, n: int, s: int) -> BiPoly:
    """``prod_{j=1}^{n} G_{sj}``; the empty product is 1."""
    out = ONE
    for j in range(1, n + 1):
        out = out * kind_term(kind, s * j)
    return out


class _Triangle:
    """Rows of ``C(n, k)_{F_s}`` for a fixed ``s``, grown by the recurrence."""

    def __init__(self, s: int):
        self.s = s
        self.rows: List[List[BiPoly]] = [[ONE]]
        self.lock = threading.Lock()

    def row(self, n: int) -> List[BiPoly]:
        rows = self.rows
        if n < len(rows):
            return rows[n]
        with self.lock:
            s = self.s
            while len(rows) <= n:
                prev = rows[-1]
                m = len(rows)
                new = [ONE]
                for k in range(1, m):
                    new.append(fib(s * (m - k) + 1) * prev[k - 1] + Y * fib(s * k - 1) * prev[k])
                new.append(ONE)
                rows.append(new)
            return rows[n]


_triangles: Dict[int, _Triangle] = {}
_tri_lock = threading.Lock()


def _triangle_for(s: int) -> _Triangle:
    tri = _triangles.get(s)
    if tri is None:
        with _tri_lock:
            tri = _triangles.setdefault(s, _Triangle(s))
    return tri


def fibopolynomial(s: int, n: int, k: int) -> BiPoly:
    """``C(n, k)_{F_s}``; zero outside ``0 <= k <= n``."""
    if s < 1:
        raise ValueError("s must be >= 1")
    if n < 0 or k < 0 or k > n:
        return ZERO
    return _triangle_for(s).row(n)[k]


def fibopolynomial_by_quotient(s: int, n: int, k: int) -> BiPoly:
    """``C(n, k)_{F_s}`` as the exact product quotient (independent of the recurrence)."""
    if not 0 <= k <= n:
        raise ValueError("quotient form needs 0 <= k <= n")
    num = ONE
    for j in range(k):
        num = num * fib(s * (n - j))
    return num.exact_div(s_factorial("F", k, s))


def gibopolynomial(kind: Kind, s: int, n: int, k: int) -> RatFunc:
    """``C(n, k)_{G_s}`` as an unreduced fraction.

    For ``0 <= n < k`` the product formula is used as is, which reaches
    negative indices of ``G``.  Outside ``0 <= k`` and ``n >= 0`` the value is 0.
    """
    if k < 0 or n < 0:
        return RatFunc(ZERO)
    num = ONE
    den = ONE
    for j in range(k):
        num = num * kind_term(kind, s * (n - j))
    for j in range(1, k + 1):
        g = kind_term(kind, s * j)
        if not g:
            raise DegenerateDenominator(f"G_{s * j} vanishes")
        den = den * g
    return RatFunc(num, den)


def triangle(s: int, rows: int) -> List[List[BiPoly]]:
    """Rows ``0..rows-1`` of the s-Fibopolynomial triangle."""
    if rows <= 0:
        return []
    tri = _triangle_for(s)
    tri.row(rows - 1)
    return [list(tri.rows[n]) for n in range(rows)]


def specialize(p: Union[BiPoly, RatFunc, int], x0, y0) -> Fraction:
    """Exact value of ``p`` at rational ``(x0, y0)``."""
    if isinstance(p, int):
        return Fraction(p)
    return p.evaluate(Fraction(x0), Fraction(y0))
