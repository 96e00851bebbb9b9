"""Bivariate Fibonacci, Lucas and Gibonacci polynomial sequences.

``F_{n+2} = x F_{n+1} + y F_n`` with ``F_0 = 0, F_1 = 1``; Lucas uses
``L_0 = 2, L_1 = x``.  Negative indices follow
``F_{-n} = -(-y)^{-n} F_n`` and ``L_{-n} = (-y)^{-n} L_n``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Sequence, Tuple, Union

from .polyring import ONE, ZERO, BiPoly, RatFunc, X, Y, neg_y_pow

__all__ = [
    "fib",
    "lucas",
    "fib_at",
    "GibSpec",
    "FIB",
    "LUCAS",
    "gibonacci",
    "gib_term",
    "kind_term",
    "product_term",
    "PolySeq",
    "convolve",
]

Term = Union[BiPoly, RatFunc]
Factor = Tuple[int, int, int]


class _RecurrenceCache:
    """Grow-only list of terms of the ``(x, y)`` recurrence for indices >= 0."""

    def __init__(self, t0: BiPoly, t1: BiPoly):
        self._terms: List[BiPoly] = [t0, t1]
        self._lock = threading.Lock()

    def get(self, n: int) -> BiPoly:
        terms = self._terms
        if n < len(terms):
            return terms[n]
        with self._lock:
            while len(terms) <= n:
                terms.append(X * terms[-1] + Y * terms[-2])
            return terms[n]


_FIB = _RecurrenceCache(ZERO, ONE)
_LUCAS = _RecurrenceCache(BiPoly.const(2), X)


def fib(n: int) -> BiPoly:
    """``F_n(x, y)`` for any integer ``n``."""
    if n >= 0:
        return _FIB.get(n)
    return -_FIB.get(-n).monomial_mul(1 if n % 2 == 0 else -1, 0, n)


def lucas(n: int) -> BiPoly:
    """``L_n(x, y)`` for any integer ``n``."""
    if n >= 0:
        return _LUCAS.get(n)
    return _LUCAS.get(-n).monomial_mul(1 if n % 2 == 0 else -1, 0, n)


def fib_at(n: int, xv, yv):
    """``F_n`` evaluated at ring elements ``x = xv, y = yv`` (``n >= 0``)."""
    if n < 0:
        raise ValueError("fib_at needs n >= 0")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, xv * b + yv * a
    return a


@dataclass(frozen=True)
class GibSpec:
    """Initial conditions ``G_0, G_1`` of a Gibonacci sequence."""

    g0: BiPoly = field(default_factory=lambda: ZERO)
    g1: BiPoly = field(default_factory=lambda: ONE)
    name: str = ""

    def label(self) -> str:
        return self.name or f"G[{self.g0}; {self.g1}]"


FIB = GibSpec(ZERO, ONE, "F")
LUCAS = GibSpec(BiPoly.const(2), X, "L")

_gib_caches: Dict[Tuple[BiPoly, BiPoly], _RecurrenceCache] = {}
_gib_lock = threading.Lock()


def gibonacci(spec: GibSpec, n: int) -> BiPoly:
    """``G_n`` by the recurrence from the seeds of ``spec`` (``n >= 0``)."""
    if n < 0:
        raise ValueError("gibonacci is defined for n >= 0 only")
    key = (spec.g0, spec.g1)
    cache = _gib_caches.get(key)
    if cache is None:
        with _gib_lock:
            cache = _gib_caches.setdefault(key, _RecurrenceCache(spec.g0, spec.g1))
    return cache.get(n)


def gib_term(spec: GibSpec, n: int) -> BiPoly:
    """``G_n`` for any integer ``n``.

    Negative indices use the unique backward continuation of the recurrence,
    which coincides with ``y G_0 F_{n-1} + G_1 F_n``.
    """
    if spec.g0 == 0 and spec.g1 == 1:
        return fib(n)
    if spec.g0 == 2 and spec.g1 == X:
        return lucas(n)
    if n >= 0:
        return gibonacci(spec, n)
    return Y * spec.g0 * fib(n - 1) + spec.g1 * fib(n)


def kind_term(kind: "str | GibSpec", n: int) -> BiPoly:
    """Term ``n`` of ``"F"``, ``"L"`` or a :class:`GibSpec` sequence."""
    if isinstance(kind, GibSpec):
        return gib_term(kind, n)
    if kind in ("F", "fib"):
        return fib(n)
    if kind in ("L", "lucas"):
        return lucas(n)
    raise ValueError(f"unknown sequence kind {kind!r}")


def product_term(s: int, factors: Sequence[Factor], n: int, kind: "str | GibSpec" = "F") -> BiPoly:
    """``prod_i G_{t_i s n + m_i}^{k_i}``; the empty product is 1."""
    out = ONE
    for t, m, k in factors:
        if k:
            out = out * kind_term(kind, t * s * n + m) ** k
    return out


class PolySeq:
    """A sequence ``n -> term`` (``n >= 0``) with a write-once term cache."""

    def __init__(self, fn: Callable[[int], Term], label: str = "seq"):
        self._fn = fn
        self._cache: Dict[int, Term] = {}
        self._lock = threading.Lock()
        self.label = label

    def __getitem__(self, n: int) -> Term:
        if n < 0:
            raise IndexError("sequences are indexed from 0")
        try:
            return self._cache[n]
        except KeyError:
            pass
        v = self._fn(n)
        with self._lock:
            return self._cache.setdefault(n, v)

    def terms(self, count: int) -> List[Term]:
        return [self[n] for n in range(count)]

    def __repr__(self) -> str:
        return f"PolySeq({self.label})"

    def __mul__(self, other: "PolySeq | Term | int") -> "PolySeq":
        if isinstance(other, PolySeq):
            return PolySeq(lambda n: self[n] * other[n], f"({self.label})*({other.label})")
        return PolySeq(lambda n: self[n] * other, f"({self.label})*[{other}]")

    __rmul__ = __mul__

    def __add__(self, other: "PolySeq") -> "PolySeq":
        return PolySeq(lambda n: self[n] + other[n], f"({self.label})+({other.label})")

    def __sub__(self, other: "PolySeq") -> "PolySeq":
        return PolySeq(lambda n: self[n] - other[n], f"({self.label})-({other.label})")

    def conv(self, other: "PolySeq") -> "PolySeq":
        return PolySeq(lambda n: convolve(self, other, n), f"({self.label})**({other.label})")

    def shifted(self, d: int) -> "PolySeq":
        """``n -> a_{n+d}`` (``d >= 0``)."""
        return PolySeq(lambda n: self[n + d], f"{self.label}[n+{d}]")

    @classmethod
    def fib(cls, s: int = 1, m: int = 0) -> "PolySeq":
        return cls(lambda n: fib(s * n + m), f"F[{s}n+{m}]")

    @classmethod
    def lucas(cls, s: int = 1, m: int = 0) -> "PolySeq":
        return cls(lambda n: lucas(s * n + m), f"L[{s}n+{m}]")

    @classmethod
    def gib(cls, spec: GibSpec, s: int = 1, m: int = 0) -> "PolySeq":
        return cls(lambda n: kind_term(spec, s * n + m), f"{spec.label()}[{s}n+{m}]")

    @classmethod
    def product(cls, s: int, factors: Sequence[Factor], kind: "str | GibSpec" = "F") -> "PolySeq":
        fs = tuple(tuple(f) for f in factors)
        return cls(lambda n: product_term(s, fs, n, kind), f"prod{fs}")

    @classmethod
    def neg_y_power(cls, c: int, c0: int = 0) -> "PolySeq":
        """``n -> (-y)^{c n + c0}``."""
        return cls(lambda n: neg_y_pow(c * n + c0), f"(-y)^({c}n+{c0})")

    @classmethod
    def constant(cls, value: Term | int = 1) -> "PolySeq":
        v = BiPoly.const(value) if isinstance(value, int) else value
        return cls(lambda n: v, f"const[{v}]")


def convolve(a: PolySeq, b: PolySeq, n: int) -> Term:
    """``sum_{t=0}^{n} a_t b_{n-t}``."""
    total: Term = ZERO
    for t in range(n + 1):
        total = total + a[t] * b[n - t]
    return total
