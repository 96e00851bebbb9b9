"""Registry of checkable identities, the grid runner and the closed-form helpers they use.

Every entry is an :class:`IdentityCase`: a finite parameter grid plus a pure
checker.  A checker returns ``True``/``False``, a ``(lhs, rhs)`` pair or a
list of pairs; pairs compare by cross-multiplication when a fraction is
involved.  :func:`check` runs one entry over its grid and returns an
:class:`IdentityReport` that carries the grid and the first failing tuple.

Entries whose printed form is believed to contain a misprint are registered
with ``expect="typo"``.  They are reported as expected failures, always next to
a corrected entry that passes.
"""

from __future__ import annotations

import itertools
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from .fibopoly import DegenerateDenominator, fibopolynomial
from .polyring import ONE, W2, X, Y, ZERO, BiPoly, ExtElem, RatFunc, as_ratfunc, neg_y_pow
from .sequences import FIB, LUCAS, GibSpec, fib, kind_term, lucas, product_term
from .ztransform import ZPoly, ZRat, dsign, gibopoly_product_term

__all__ = [
    "UnknownIdentity",
    "GridError",
    "IdentityCase",
    "IdentityReport",
    "registry",
    "get_case",
    "ids_in_block",
    "parse_grid",
    "check",
    "check_many",
    "mutated",
    "decompose_product",
    "decompose_gibopoly",
    "corollary43",
    "recurrence_vanishing",
    "corollary48",
    "corollary49",
    "partial_fractions",
    "corollary410",
    "derivative_formulas",
    "remark519",
]

Factor = Tuple[int, int, int]


class UnknownIdentity(KeyError):
    """No registry entry carries the requested id."""


class GridError(ValueError):
    """A grid override names an unknown parameter or is malformed."""


@dataclass(frozen=True)
class IdentityCase:
    id: str
    title: str
    grid: Mapping[str, Tuple[int, ...]]
    checker: Callable[..., Any]
    where: Optional[Callable[..., bool]] = None
    expect: str = "pass"
    note: str = ""

    @property
    def block(self) -> str:
        m = re.match(r"(?:EQ|TAB)_(\d+)", self.id)
        return m.group(1) if m else ""


@dataclass
class IdentityReport:
    id: str
    grid: Dict[str, List[int]]
    passed: int = 0
    failed: int = 0
    first_failure: Optional[Dict[str, int]] = None
    error: Optional[str] = None
    ms: float = 0.0
    expect: str = "pass"
    note: str = ""

    @property
    def ok(self) -> bool:
        """A normal entry must not fail; a flagged misprint must fail somewhere."""
        if self.expect == "typo":
            return self.failed > 0
        return self.failed == 0 and self.passed > 0

    @property
    def status(self) -> str:
        if self.expect == "typo":
            return "XFAIL" if self.failed else "XPASS"
        return "PASS" if self.ok else "FAIL"

    def to_json(self) -> dict:
        out = {
            "id": self.id,
            "grid": self.grid,
            "passed": self.passed,
            "failed": self.failed,
            "first_failure": self.first_failure,
            "ms": round(self.ms, 3),
            "status": self.status,
        }
        if self.error:
            out["error"] = self.error
        if self.note:
            out["note"] = self.note
        return out

    def line(self) -> str:
        grid = " ".join(f"{k}={_fmt_range(v)}" for k, v in self.grid.items())
        msg = f"{self.status:5} {self.id:22} {self.passed:5d} ok {self.failed:4d} bad  {self.ms:9.1f} ms  [{grid}]"
        if self.first_failure is not None:
            tup = ", ".join(f"{k}={v}" for k, v in self.first_failure.items())
            msg += f"  first failure: ({tup})"
        if self.error:
            msg += f"  error: {self.error}"
        if self.expect == "typo" and self.note:
            msg += f"  note: {self.note}"
        return msg


def _fmt_range(vals: Sequence[int]) -> str:
    vals = list(vals)
    if len(vals) > 2 and vals == list(range(vals[0], vals[-1] + 1)):
        return f"{vals[0]}..{vals[-1]}"
    return ",".join(str(v) for v in vals)


_REGISTRY: Dict[str, IdentityCase] = {}


def R(a: int, b: int) -> Tuple[int, ...]:
    """Inclusive integer range."""
    return tuple(range(a, b + 1))


def identity(id: str, title: str, where=None, expect: str = "pass", note: str = "", **grid):
    def deco(fn):
        if id in _REGISTRY:
            raise ValueError(f"duplicate identity id {id}")
        _REGISTRY[id] = IdentityCase(id, title, {k: tuple(v) for k, v in grid.items()}, fn, where, expect, note)
        return fn

    return deco


def registry() -> Dict[str, IdentityCase]:
    return dict(_REGISTRY)


def get_case(id: str) -> IdentityCase:
    try:
        return _REGISTRY[id]
    except KeyError:
        raise UnknownIdentity(id) from None


def ids_in_block(block: str) -> List[str]:
    return [i for i, c in _REGISTRY.items() if c.block == str(block)]


# -- grid handling ----------------------------------------------------------

_RANGE = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")


def parse_grid(spec: "str | Sequence[str] | None") -> Dict[str, Tuple[int, ...]]:
    """``"m=-2..2; n=0,3,5"`` (or a list of such strings) to a grid mapping."""
    if not spec:
        return {}
    parts: List[str] = []
    for chunk in [spec] if isinstance(spec, str) else spec:
        parts.extend(p for p in re.split(r"[;\s]+(?=[A-Za-z_]\w*\s*=)", chunk.strip()) if p.strip())
    out: Dict[str, Tuple[int, ...]] = {}
    for part in parts:
        name, sep, body = part.partition("=")
        name = name.strip()
        if not sep or not re.fullmatch(r"[A-Za-z_]\w*", name):
            raise GridError(f"bad grid item {part!r}; expected name=a..b or name=v1,v2")
        m = _RANGE.match(body)
        try:
            if m:
                lo, hi = int(m.group(1)), int(m.group(2))
                if hi < lo:
                    raise GridError(f"empty range in {part!r}")
                vals = tuple(range(lo, hi + 1))
            else:
                vals = tuple(int(v) for v in body.split(",") if v.strip())
        except ValueError:
            raise GridError(f"bad grid values in {part!r}") from None
        if not vals:
            raise GridError(f"no values in {part!r}")
        out[name] = vals
    return out


def _tuples(case: IdentityCase, overrides: Mapping[str, Sequence[int]]) -> Tuple[Dict[str, Tuple[int, ...]], List[Dict[str, int]]]:
    unknown = set(overrides) - set(case.grid)
    if unknown:
        raise GridError(f"{case.id} has no parameter(s) {sorted(unknown)}; known: {list(case.grid)}")
    grid = {k: tuple(overrides.get(k, v)) for k, v in case.grid.items()}
    names = list(grid)
    out = []
    for combo in itertools.product(*(grid[k] for k in names)):
        params = dict(zip(names, combo))
        if case.where is None or case.where(**params):
            out.append(params)
    return grid, out


# -- evaluation ---------------------------------------------------------------

_BUMP = BiPoly.monomial(1, 1, 1)


def _perturb(v):
    if isinstance(v, ZRat):
        return ZRat(v.num + v.den * _BUMP, v.den)
    if isinstance(v, ZPoly):
        return v + ZPoly([_BUMP])
    if isinstance(v, ExtElem):
        return v + ExtElem(_BUMP)
    return v + _BUMP


def _same(a, b) -> bool:
    if isinstance(a, RatFunc) or isinstance(b, RatFunc):
        return as_ratfunc(a) == as_ratfunc(b)
    return a == b


def _judge(result, mutate: bool) -> bool:
    if isinstance(result, bool):
        if mutate:
            raise TypeError("predicate-style checkers cannot be mutated")
        return result
    pairs = [result] if isinstance(result, tuple) else list(result)
    if not pairs:
        raise ValueError("checker returned no comparisons")
    for i, (lhs, rhs) in enumerate(pairs):
        if mutate and i == 0:
            rhs = _perturb(rhs)
        if not _same(lhs, rhs):
            return False
    return True


def _run_chunk(case: IdentityCase, chunk: Sequence[Dict[str, int]], mutate: bool) -> List[Tuple[bool, Optional[str]]]:
    out = []
    for params in chunk:
        try:
            out.append((_judge(case.checker(**params), mutate), None))
        except Exception as exc:  # a crash on a tuple is a failure of that tuple
            out.append((False, f"{type(exc).__name__}: {exc}"))
    return out


def _worker(args):
    case_id, chunk, mutate = args
    return _run_chunk(get_case(case_id), chunk, mutate)


def _report(case: IdentityCase, grid, tuples, results, t0: float) -> IdentityReport:
    rep = IdentityReport(case.id, {k: list(v) for k, v in grid.items()}, expect=case.expect, note=case.note)
    for params, (good, err) in zip(tuples, results):
        if good:
            rep.passed += 1
        else:
            rep.failed += 1
            if rep.first_failure is None:
                rep.first_failure = dict(params)
                rep.error = err
    rep.ms = (time.perf_counter() - t0) * 1000.0
    return rep


def check(id: "str | IdentityCase", overrides: "Mapping[str, Sequence[int]] | str | None" = None, jobs: int = 1) -> IdentityReport:
    """Run one identity over its default grid (or the overridden one)."""
    case = id if isinstance(id, IdentityCase) else get_case(id)
    if isinstance(overrides, str) or (overrides is not None and not isinstance(overrides, Mapping)):
        overrides = parse_grid(overrides)
    grid, tuples = _tuples(case, overrides or {})
    t0 = time.perf_counter()
    mutate = getattr(case, "_mutated", False)
    if jobs <= 1 or len(tuples) < 2 or mutate or case.id not in _REGISTRY:
        results = _run_chunk(case, tuples, mutate)
    else:
        size = max(1, len(tuples) // (jobs * 4))
        chunks = [tuples[i:i + size] for i in range(0, len(tuples), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = [r for part in pool.map(_worker, [(case.id, c, False) for c in chunks]) for r in part]
    return _report(case, grid, tuples, results, t0)


def check_many(ids: Sequence[str], overrides=None, jobs: int = 1) -> List[IdentityReport]:
    """Reports in the order given; grid overrides apply where the parameter exists."""
    reports = []
    grid = parse_grid(overrides) if isinstance(overrides, (str, list, tuple)) else dict(overrides or {})
    for i in ids:
        case = get_case(i)
        local = {k: v for k, v in grid.items() if k in case.grid}
        reports.append(check(case, local, jobs))
    return reports


class _MutatedCase(IdentityCase):
    _mutated = True


def mutated(id: str) -> IdentityCase:
    """A copy of a registry entry whose right-hand side is shifted by ``x*y``."""
    c = get_case(id)
    return _MutatedCase(c.id + "~mutated", c.title, c.grid, c.checker, c.where, "pass", "mutated copy")


# -- shorthand ------------------------------------------------------------------

F = fib
L = lucas
ny = neg_y_pow


def C(s: int, n: int, k: int) -> BiPoly:
    return fibopolynomial(s, n, k)


def yp(m: int) -> BiPoly:
    return BiPoly.monomial(1, 0, m)


def P(text: str) -> BiPoly:
    return BiPoly.parse(text)


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def _weight(s: int, order: int, j: int) -> BiPoly:
    """``dsign(s,j) C(order+1, j) y^{s j (j-1)/2}``."""
    return C(s, order + 1, j).monomial_mul(dsign(s, j), 0, s * j * (j - 1) // 2)


def _conv(f: Callable[[int], Any], g: Callable[[int], Any], n: int):
    total = ZERO
    for t in range(n + 1):
        total = total + f(t) * g(n - t)
    return total


def _conv_lists(a: List, b: List) -> List:
    out = []
    for n in range(min(len(a), len(b))):
        acc = ZERO
        for t in range(n + 1):
            acc = acc + a[t] * b[n - t]
        out.append(acc)
    return out


SEEDS: Tuple[GibSpec, ...] = (
    FIB,
    LUCAS,
    GibSpec(X, Y, "G[x; y]"),
    GibSpec(ONE, X + 1, "G[1; x+1]"),
    GibSpec(-Y, 2 * X + 1, "G[-y; 2x+1]"),
)

PRODUCT_CASES: Tuple[Tuple[Factor, ...], ...] = (
    ((1, 0, 1),),
    ((1, 1, 1),),
    ((1, -1, 2),),
    ((2, 1, 1),),
    ((1, 0, 2), (1, 1, 1)),
    ((1, 2, 1), (2, -1, 1)),
    ((1, 0, 4),),
    ((2, 0, 1), (1, 1, 2)),
    ((1, -2, 1), (1, 3, 1), (1, 1, 1)),
    ((3, 1, 1), (1, 0, 2)),
    ((5, 0, 1),),
    ((1, 0, 5),),
    ((0, 3, 2), (1, 1, 1)),
)

GIBOPOLY_CASES: Tuple[Tuple[Factor, ...], ...] = (
    ((1, 1, 1),),
    ((1, 2, 1),),
    ((1, 2, 2),),
    ((1, 3, 1),),
    ((2, 2, 1),),
    ((1, 2, 1), (1, 3, 1)),
    ((2, 1, 1), (1, 2, 1)),
    ((1, 1, 3), (1, 2, 1)),
)

S = R(1, 3)
NS = R(0, 10)


def _order(factors: Sequence[Factor]) -> int:
    return sum(t * k for t, _, k in factors)


# -- closed-form operations ---------------------------------------------------


@lru_cache(maxsize=None)
def _decompose(s: int, factors: Tuple[Factor, ...], kind, gibo: bool) -> Tuple[Tuple[Any, int], ...]:
    if gibo:
        order = sum(t * p * r for t, p, r in factors)
        terms = [gibopoly_product_term(s, kind, factors, n) for n in range(order + 1)]
    else:
        order = _order(factors)
        terms = [product_term(s, factors, n, kind) for n in range(order + 1)]
    lead = 1 if (s + 1) % 2 == 0 else -1
    out = []
    for i in range(order + 1):
        acc = ZERO
        for j in range(i + 1):
            a = terms[i - j]
            if a:
                acc = acc + _weight(s, order, j) * a
        out.append((acc * lead, order - i))
    return tuple(out)


def decompose_product(s: int, factors: Sequence[Factor], kind: "str | GibSpec" = "F") -> List[Tuple[Any, int]]:
    """Coefficients ``c`` with ``prod_i G_{t_i s n + m_i}^{k_i} = sum c * C(n + shift, T)_{F_s}``.

    Returned as ``(c, shift)`` pairs, ``shift`` running from ``T`` down to 0,
    where ``T = sum t_i k_i``.
    """
    return list(_decompose(s, tuple(tuple(f) for f in factors), kind, False))


def decompose_gibopoly(s: int, kind: "str | GibSpec", factors: Sequence[Factor]) -> List[Tuple[Any, int]]:
    """Same as :func:`decompose_product` for ``prod_i C(n, p_i)^{r_i}_{G_{s t_i}}``; factors ``(t, p, r)``."""
    return list(_decompose(s, tuple(tuple(f) for f in factors), kind, True))


def _expand(coeffs: Sequence[Tuple[Any, int]], s: int, n: int):
    order = coeffs[0][1]
    total = ZERO
    for c, shift in coeffs:
        if c:
            total = total + c * C(s, n + shift, order)
    return total


def corollary43(s: int, t: int, m: int, kind: str, n: int) -> Tuple[BiPoly, BiPoly]:
    """``G_{tsn+m}`` against its expansion in shifted ``C(n+t-i, t)_{F_s}``, for ``G = F`` or ``L``."""
    fib_like = kind in ("F", "fib")
    lhs = kind_term(kind, t * s * n + m)
    rhs = ZERO
    for i in range(t + 1):
        sgn = _sign(i + 1) if fib_like else _sign(i)
        term = C(s, t, i) * kind_term(kind, i * s - m) * C(s, n + t - i, t)
        rhs = rhs + term.monomial_mul(sgn * _sign(s * i * (i - 1) // 2), 0, s * i * (i - 1) // 2)
    return lhs, rhs * ny(m)


def recurrence_vanishing(s: int, kind: "str | GibSpec", factors: Sequence[Factor], n: int, gibo: bool = False):
    """The D-weighted alternating sum over ``n, n-1, ..., n-T-1``; zero once ``n > T``."""
    fs = tuple(tuple(f) for f in factors)
    order = sum(t * p * r for t, p, r in fs) if gibo else _order(fs)
    total = ZERO
    for j in range(order + 2):
        if gibo:
            a = gibopoly_product_term(s, kind, fs, n - j) if n - j >= 0 else ZERO
        else:
            a = ONE
            for t, m, k in fs:
                if k:
                    a = a * kind_term(kind, m + s * t * (n - j)) ** k
        total = total + _weight(s, order, j) * a
    return total


def corollary48(s: int, p: int, variant: str, n: int) -> Tuple[BiPoly, RatFunc]:
    """Shifted Fibopolynomials as single (``a``) or double (``b``) convolutions."""
    if variant == "a":
        lhs = C(s, n + 1, p + 2)
        num = _conv(lambda t: F(s * (p + 2) * t), lambda u: ny(s * (u - p)) * C(s, u, p), n)
        return lhs, RatFunc(num, F(s * (p + 2)))
    if variant == "b":
        lhs = C(s, n + 2, p + 4)
        inner = [
            _conv(lambda a: ny(s * (a - 1)) * F(s * (p + 2) * a), lambda c: yp(2 * s * (c - p)) * C(s, c, p), u)
            for u in range(n + 1)
        ]
        num = _conv(lambda t: F(s * (p + 4) * t), lambda u: inner[u], n)
        return lhs, RatFunc(num, F(s * (p + 4)) * F(s * (p + 2)))
    raise ValueError("variant must be 'a' or 'b'")


def corollary49(s: int, p: int, variant: str, n: int) -> Tuple[BiPoly, RatFunc]:
    """``C(n+p, 2p)`` (even) or ``C(n+p-1, 2p-1)`` (odd) as iterated convolutions."""
    if p < 1:
        raise ValueError("p must be >= 1")
    if variant == "even":
        lhs = C(s, n + p, 2 * p)
        seq = [ny(s * p * u) for u in range(n + 1)]
        idx = [2 * s * (p - j) for j in range(p)]
    elif variant == "odd":
        lhs = C(s, n + p - 1, 2 * p - 1)
        seq = None
        idx = [s * (2 * p - 1 - 2 * j) for j in range(p)]
    else:
        raise ValueError("variant must be 'even' or 'odd'")
    den = ONE
    for j, a in enumerate(idx):
        factor = [ny(s * j * (u - 1)) * F(a * u) for u in range(n + 1)]
        seq = factor if seq is None else _conv_lists(seq, factor)
        den = den * F(a)
    return lhs, RatFunc(seq[n], den)


def _pf_data(s: int, p: int, variant: str):
    """Per-``j`` Lucas index, quadratic factor and product ``P`` (even) or ``R`` (odd)."""
    if variant == "even":
        idx = [2 * s * (p - j) for j in range(p)]
        const = yp(2 * p * s)
        top = 2 * s * p
    elif variant == "odd":
        idx = [s * (2 * p - 1 - 2 * j) for j in range(p)]
        const = ny((2 * p - 1) * s)
        top = s * (2 * p - 1)
    else:
        raise ValueError("variant must be 'even' or 'odd'")
    quads = [ZPoly([const, -(ny(s * j) * L(idx[j])), ONE]) for j in range(p)]
    prods = []
    for j in range(p):
        prod = ONE
        for i in range(p):
            if i != j:
                prod = prod * (ny(s * j) * L(idx[j]) - ny(s * i) * L(idx[i]))
        if not prod:
            raise DegenerateDenominator(f"product for j={j} vanishes")
        if not F(idx[j]):
            raise DegenerateDenominator(f"F_{idx[j]} vanishes")
        prods.append(prod)
    return idx, quads, prods, top


def partial_fractions(s: int, p: int, k: int, variant: str) -> Tuple[ZPoly, ZPoly]:
    """Both sides of the partial fraction split of ``z^{p-k} / prod_j Q_j``, cleared of denominators.

    Each side is multiplied by ``prod_j Q_j`` and by ``prod_j P_j F_{A_j}``, so
    the comparison is between ``z``-polynomials over ``Z[x, y, 1/y]``.
    """
    if not 1 <= k <= p:
        raise ValueError("need 1 <= k <= p")
    idx, quads, prods, top = _pf_data(s, p, variant)
    consts = [prods[j] * F(idx[j]) for j in range(p)]
    big = ONE
    for c in consts:
        big = big * c
    lhs = ZPoly.monomial(big, p - k)
    rhs = ZPoly([])
    for j in range(p):
        others = ONE
        for i in range(p):
            if i != j:
                others = others * consts[i]
        e = s * j * (k - 2) - top * (k - 1)
        num = ZPoly([ny(s * j) * F(idx[j] * k), -F(idx[j] * (k - 1))])
        term = num * (ny(e) * others)
        for i in range(p):
            if i != j:
                term = term * quads[i]
        rhs = rhs + term
    return lhs, rhs


def corollary410(s: int, p: int, k: int, variant: str, n: int) -> Tuple[BiPoly, RatFunc]:
    """Shifted Fibopolynomials as sums (odd) or a convolution (even) of F-sequences."""
    if not 1 <= k <= p:
        raise ValueError("need 1 <= k <= p")
    idx, _, prods, _ = _pf_data(s, p, variant)
    rhs: Any = RatFunc(ZERO)
    if variant == "even":
        lhs = C(s, n + p + 1 - k, 2 * p)
        for j in range(p):
            num = ZERO
            for t in range(n + 1):
                num = num + ny(s * p * (n - t) + s * j * (t - k)) * F(idx[j] * (t + 1 - k))
            rhs = rhs + RatFunc(num, prods[j] * F(idx[j]))
    else:
        lhs = C(s, n + p - k, 2 * p - 1)
        for j in range(p):
            rhs = rhs + RatFunc(ny(s * j * (n - k)) * F(idx[j] * (n + 1 - k)), prods[j] * F(idx[j]))
    return lhs, rhs


def _dx_kernel(s: int, p: int, u: int) -> BiPoly:
    out = ZERO
    for k in range((p + 1) // 2):
        out = out + (p - 2 * k) * ny(s * k * u) * F(s * (p - 2 * k) * u)
    return out


def _dy_kernel(s: int, p: int, u: int) -> BiPoly:
    """``p`` times the bracket of the ``y``-derivative formula, kept in ``Z[x, y, 1/y]``.

    ``p * k x / (p y)`` is ``k x y^{-1}`` and ``p (1 + (-1)^p) / 4`` is ``p/2`` or 0,
    so no fraction ever appears.
    """
    out = ZERO
    for k in range((p + 1) // 2):
        a = s * (p - 2 * k) * (u + 1)
        out = out + ny(s * k * (u + 1)) * (p * F(a - 1) + F(a).monomial_mul(k, 1, -1))
    if p % 2 == 0:
        out = out - (p // 2) * ny(s * p * (u + 1) // 2 - 1)
    return out


def derivative_formulas(s: int, p: int, axis: str, n: int) -> Tuple[BiPoly, BiPoly]:
    """Formal partial derivative of a Fibopolynomial against its convolution formula.

    ``axis="x"`` compares ``d/dx C(n, p)``; ``axis="y"`` compares ``d/dy C(n+1, p)``.
    The right-hand side must come out a genuine polynomial.
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    if axis == "x":
        lhs = C(s, n, p).d_dx()
        rhs = s * _conv(lambda t: C(s, t, p), lambda u: _dx_kernel(s, p, u), n)
    elif axis == "y":
        lhs = C(s, n + 1, p).d_dy()
        rhs = s * _conv(lambda t: C(s, t, p), lambda u: _dy_kernel(s, p, u), n)
    else:
        raise ValueError("axis must be 'x' or 'y'")
    if not rhs.is_polynomial():
        raise ArithmeticError("convolution side is not a polynomial")
    return lhs, rhs


def remark519(n: int) -> List[Tuple[Any, Any]]:
    """``d/dx F_n = d/dy F_{n+1} = (F*F)_n = (n L_n - x F_n)/(x^2+4y)``."""
    dx = F(n).d_dx()
    dy = F(n + 1).d_dy()
    conv = _conv(F, F, n)
    closed = (n * L(n) - X * F(n)).exact_div(W2)
    return [(dx, conv), (dy, conv), (closed, conv)]


from . import _catalog  # noqa: E402,F401  (fills the registry)
