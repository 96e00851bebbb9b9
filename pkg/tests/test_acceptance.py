"""The nine acceptance criteria, one test each.

Every test prints a single ``AC<n> PASS|FAIL`` line; the lines are repeated in
the pytest terminal summary. Criteria with a runtime limit run their body in a
fresh interpreter so warm caches from other tests cannot flatter the timing.
Running this file directly (``python3 tests/test_acceptance.py``) prints the
nine lines without pytest.
"""

from __future__ import annotations

import itertools
import json
import os
import subprocess
import sys
import time
from math import prod

from bivfib.fibopoly import fibopolynomial, fibopolynomial_by_quotient, gibopolynomial, specialize, triangle
from bivfib.identities import check, check_many, ids_in_block, mutated
from bivfib.polyring import ONE, X, BiPoly
from bivfib.sequences import GibSpec, fib, lucas, product_term
from bivfib.ztransform import d_poly_factored, d_poly_sum, verify_zrat, z_fib, z_fibopoly, z_gib_product, z_lucas, z_product

HERE = os.path.dirname(os.path.abspath(__file__))
RESULTS: list[str] = []

# The published triangular arrays, verbatim, rows n = 0..5.
PRINTED_S1 = [
    "1",
    "1 | 1",
    "1 | x | 1",
    "1 | x^2+y | x^2+y | 1",
    "1 | x^3+2xy | x^4+3x^2y+2y^2 | x^3+2xy | 1",
    "1 | x^4+3x^2y+y^2 | x^6+5x^4y+7x^2y^2+2y^3 | x^6+5x^4y+7x^2y^2+2y^3 | x^4+3x^2y+y^2 | 1",
]
PRINTED_S2 = [
    "1",
    "1 | 1",
    "1 | x^2+2y | 1",
    "1 | x^4+4x^2y+3y^2 | x^4+4x^2y+3y^2 | 1",
    "1 | x^6+6x^4y+10x^2y^2+4y^3 | x^8+8x^6y+21x^4y^2+20x^2y^3+6y^4 | x^6+6x^4y+10x^2y^2+4y^3 | 1",
    "1 | x^8+8x^6y+21x^4y^2+20x^2y^3+5y^4"
    " | x^12+12x^10y+55x^8y^2+120x^6y^3+127x^4y^4+60x^2y^5+10y^6"
    " | x^12+12x^10y+55x^8y^2+120x^6y^3+127x^4y^4+60x^2y^5+10y^6"
    " | x^8+8x^6y+21x^4y^2+20x^2y^3+5y^4 | 1",
]
CENTER_S1 = "x^6+5x^4y+7x^2y^2+2y^3"
CENTER_S2 = "x^12+12x^10y+55x^8y^2+120x^6y^3+127x^4y^4+60x^2y^5+10y^6"


def _poly(text: str) -> BiPoly:
    # the printed arrays omit spaces and '*'; insert them for the parser
    out = []
    for i, ch in enumerate(text):
        if ch in "xy" and i and (text[i - 1].isdigit() or text[i - 1] in "xy"):
            out.append(" ")
        out.append(ch)
    return BiPoly.parse("".join(out))


def _fib_int(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def _fibonomial_int(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return prod(_fib_int(n - k + i) for i in range(1, k + 1)) // prod(_fib_int(i) for i in range(1, k + 1))


# -- criterion bodies: each returns (ok, detail) -----------------------------


def ac1():
    bad = []
    for s, paper in ((1, PRINTED_S1), (2, PRINTED_S2)):
        got = triangle(s, 6)
        for n, row in enumerate(paper):
            want = [_poly(c) for c in row.split(" | ")]
            if got[n] != want:
                bad.append((s, n))
    got_c = (triangle(1, 6)[5][2], triangle(2, 6)[5][2])
    ok_c = got_c == (_poly(CENTER_S1), _poly(CENTER_S2))
    return not bad and ok_c, f"rows 0..5 for s=1,2 entry-for-entry; centers {'match' if ok_c else 'DIFFER'}; bad rows {bad}"


def ac2():
    c = gibopolynomial("L", 2, 4, 2)
    num = _poly("x^4+4x^2y+y^2") * _poly("x^8+8x^6y+20x^4y^2+16x^2y^3+2y^4")
    den = _poly("x^4+4x^2y+2y^2")
    cross = c.num * den == num * c.den
    quotient = c.num * (lucas(2) * lucas(4)) == c.den * (lucas(8) * lucas(6))
    return cross and quotient, "C(4,2) over L_2 equals the displayed quotient by cross-multiplication"


def ac3():
    seq = [int(specialize(fibopolynomial(1, n, 4), 1, 1)) for n in range(4, 8)]
    ok_seq = seq == [1, 5, 40, 260]
    c = _fibonomial_int
    ok_int = all(_fib_int(n) ** 4 == c(n + 3, 4) - 4 * c(n + 2, 4) - 4 * c(n + 1, 4) + c(n, 4) for n in range(13))
    r = check("EQ_1_172", "n=0..12")
    return ok_seq and ok_int and r.ok, f"fibonomials n=4..7 -> {seq}; EQ_1_172 n=0..12 {r.status} ({r.passed} tuples)"


def ac4():
    total = mismatches = 0
    for s in (1, 2, 3):
        for n in range(11):
            for k in range(n + 1):
                total += 1
                if fibopolynomial(s, n, k) != fibopolynomial_by_quotient(s, n, k):
                    mismatches += 1
    return mismatches == 0, f"{total} (s,n,k) triples, {mismatches} mismatches"


def ac5():
    bad = [(s, k) for s in (1, 2, 3) for k in range(9) if d_poly_sum(s, k) != d_poly_factored(s, k)]
    reports = [check("EQ_2_26"), check("EQ_2_27")]
    ok = not bad and all(r.ok for r in reports)
    return ok, f"sum = factored for s=1..3, k=0..8 (bad {bad}); " + ", ".join(f"{r.id} {r.status}" for r in reports)


def _factor_lists(max_order=5):
    singles = [(t, m, k) for t in range(1, 6) for k in range(1, 6) for m in (-1, 0, 2) if t * k <= max_order]
    out = [[f] for f in singles]
    for a, b in itertools.combinations(singles, 2):
        if a[0] * a[2] + b[0] * b[2] <= max_order:
            out.append([a, b])
    return out


def ac6():
    checked = failed = 0

    def run(zr, seq):
        nonlocal checked, failed
        checked += 1
        if not verify_zrat(zr, seq, extra=6):
            failed += 1

    for s in (1, 2, 3):
        for m in range(-3, 4):
            run(z_fib(s, m), lambda n: fib(s * n + m))
            run(z_lucas(s, m), lambda n: lucas(s * n + m))
        for p in range(5):
            run(z_fibopoly(s, p), lambda n: fibopolynomial(s, n, p))
        for fac in _factor_lists():
            run(z_product(s, fac), lambda n: product_term(s, fac, n))
        spec = GibSpec(X, ONE + X, "G")
        for fac in ([(1, 0, 2)], [(1, 1, 1), (2, 0, 1)], [(1, 0, 3)]):
            run(z_gib_product(s, spec, fac), lambda n: product_term(s, fac, n, spec))
    r = check("EQ_3_11")
    return failed == 0 and r.ok, f"{checked} transforms verified with extra=6, {failed} failed; EQ_3_11 {r.status}"


AC7_REQUIRED = (
    "EQ_4_4 EQ_4_11 EQ_4_11b EQ_4_111 EQ_4_112 EQ_4_113 EQ_4_114 EQ_4_115 EQ_4_116 EQ_4_118 EQ_4_119 "
    "EQ_4_13 EQ_4_14 EQ_4_15 EQ_4_16 EQ_4_161 EQ_4_17 EQ_4_18 EQ_4_19 EQ_4_191 EQ_4_192 EQ_4_20 EQ_4_21 "
    "EQ_4_23 EQ_4_24 EQ_4_25 EQ_4_261 EQ_4_262 EQ_4_27 EQ_4_28 EQ_4_29 EQ_4_30 EQ_4_31 EQ_4_32 "
    "EQ_4_35 EQ_4_36 EQ_4_39 EQ_4_40 EQ_4_46 EQ_4_47 EQ_4_48 EQ_4_49 EQ_4_50"
).split()


def ac7():
    block = ids_in_block("4")
    missing = [i for i in AC7_REQUIRED if i not in block]
    reports = check_many(block)
    bad = [r.line() for r in reports if not r.ok]
    xfail = [r.id for r in reports if r.status == "XFAIL"]
    detail = f"{len(reports)} entries in block 4, {len(bad)} failing, XFAIL {xfail}, missing {missing}"
    if bad:
        detail += "; " + " / ".join(bad)
    return not missing and not bad, detail


def ac8():
    ids = {"EQ_5_6": "s=1..3; p=1..4; n=0..8", "EQ_5_12": "s=1..3; p=1..4; n=0..8"}
    ids.update({f"EQ_5_{k}": "n=0..12" for k in (16, 17, 18, 19)})
    reports = [check(i, g) for i, g in ids.items()]
    ok = all(r.ok for r in reports)
    return ok, ", ".join(f"{r.id} {r.status} ({r.passed})" for r in reports)


def ac9():
    picks = ["EQ_1_11", "EQ_4_14", "EQ_5_19"]
    reports = [check(mutated(i)) for i in picks]
    caught = [r.id for r in reports if r.status == "FAIL" and r.passed == 0]
    return len(caught) == len(picks), f"mutated entries detected: {caught}"


LIMITS = {1: 1.0, 2: 1.0, 4: 30.0, 6: 120.0}
BODIES = {1: ac1, 2: ac2, 3: ac3, 4: ac4, 5: ac5, 6: ac6, 7: ac7, 8: ac8, 9: ac9}


def _timed(n: int) -> dict:
    t0 = time.perf_counter()
    ok, detail = BODIES[n]()
    return {"ok": bool(ok), "detail": detail, "seconds": time.perf_counter() - t0}


def _fresh(n: int) -> dict:
    code = f"import sys, json; sys.path.insert(0, {HERE!r}); import test_acceptance as t; print(json.dumps(t._timed({n})))"
    proc = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True)
    if proc.returncode:
        return {"ok": False, "detail": proc.stderr.strip().splitlines()[-1:], "seconds": float("nan")}
    return json.loads(proc.stdout.strip().splitlines()[-1])


def _criterion(n: int) -> bool:
    res = _fresh(n) if n in LIMITS else _timed(n)
    ok = res["ok"]
    limit = LIMITS.get(n)
    timing = f"{res['seconds']:.2f} s"
    if limit is not None:
        in_time = res["seconds"] < limit
        ok = ok and in_time
        timing += f" (limit {limit:g} s{'' if in_time else ', EXCEEDED'})"
    line = f"AC{n} {'PASS' if ok else 'FAIL'}  {timing}  {res['detail']}"
    print(line)
    RESULTS.append(line)
    return ok


def test_ac1_triangles():
    assert _criterion(1)


def test_ac2_lucapolynomial():
    assert _criterion(2)


def test_ac3_fibonomials():
    assert _criterion(3)


def test_ac4_oracle_equivalence():
    assert _criterion(4)


def test_ac5_d_polynomials():
    assert _criterion(5)


def test_ac6_transform_soundness():
    assert _criterion(6)


def test_ac7_fourth_block():
    assert _criterion(7)


def test_ac8_derivatives():
    assert _criterion(8)


def test_ac9_mutation_self_test():
    assert _criterion(9)


if __name__ == "__main__":
    results = [_criterion(n) for n in BODIES]
    sys.exit(0 if all(results) else 1)
