"""Exact bivariate Fibonacci polynomials, s-Fibopolynomials and their Z-transforms."""

from .polyring import BiPoly, ExtElem, RatFunc, X, Y, alpha, beta
from .sequences import FIB, LUCAS, GibSpec, PolySeq, convolve, fib, gibonacci, lucas
from .fibopoly import fibopolynomial, fibopolynomial_by_quotient, gibopolynomial, triangle
from .ztransform import ZPoly, ZRat, d_poly_factored, d_poly_sum, verify_zrat, z_fib, z_fibopoly, z_lucas, z_product
from .identities import check, check_many, registry

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "ExtElem",
    "RatFunc",
    "X",
    "Y",
    "alpha",
    "beta",
    "FIB",
    "LUCAS",
    "GibSpec",
    "PolySeq",
    "convolve",
    "fib",
    "gibonacci",
    "lucas",
    "fibopolynomial",
    "fibopolynomial_by_quotient",
    "gibopolynomial",
    "triangle",
    "ZPoly",
    "ZRat",
    "d_poly_factored",
    "d_poly_sum",
    "verify_zrat",
    "z_fib",
    "z_fibopoly",
    "z_lucas",
    "z_product",
    "check",
    "check_many",
    "registry",
]
