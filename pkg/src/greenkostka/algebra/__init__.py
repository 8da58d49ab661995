"""Exact arithmetic: cyclotomic numbers, polynomials, rational functions, matrices."""

from .cyclotomic import Cyclo, conjugate, cyclo_reduce, cyclotomic_polynomial, zeta
from .matrix import SymbolicMatrix, mat_inverse
from .multipoly import MultiPolynomial, MultiRationalFunction, specialize
from .polynomial import RationalFunction, UniPolynomial, ratfun_normalize

__all__ = [
    "Cyclo",
    "conjugate",
    "cyclo_reduce",
    "cyclotomic_polynomial",
    "zeta",
    "SymbolicMatrix",
    "mat_inverse",
    "MultiPolynomial",
    "MultiRationalFunction",
    "specialize",
    "RationalFunction",
    "UniPolynomial",
    "ratfun_normalize",
]
