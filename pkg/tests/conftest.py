from fractions import Fraction

from hypothesis import settings, strategies as st

from bivfib.polyring import BiPoly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_int = st.integers(min_value=-6, max_value=6)


@st.composite
def bipolys(draw, laurent=True, max_terms=5):
    """Random sparse polynomial, optionally with negative powers of y."""
    lo = -3 if laurent else 0
    mono = st.tuples(st.integers(0, 4), st.integers(lo, 4))
    terms = draw(st.dictionaries(mono, st.integers(-9, 9), max_size=max_terms))
    return BiPoly(terms)


# Evaluation points that avoid y = 0, so Laurent values are defined.
points = st.tuples(
    st.fractions(min_value=-5, max_value=5, max_denominator=4),
    st.fractions(min_value=-5, max_value=5, max_denominator=4).filter(lambda v: v != 0),
)


def fib_int(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def fib_xy(n, x, y):
    """F_n(x, y) at a numeric point by the plain loop, any integer n."""
    x, y = Fraction(x), Fraction(y)
    if n >= 0:
        a, b = Fraction(0), Fraction(1)
        for _ in range(n):
            a, b = b, x * b + y * a
        return a
    # step backwards: F_{k-1} = (F_{k+1} - x F_k) / y
    a, b = Fraction(0), Fraction(1)  # F_0, F_1
    for _ in range(-n):
        a, b = (b - x * a) / y, a
    return a


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
