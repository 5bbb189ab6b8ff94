"""Exact scalar arithmetic: rationals, Laurent polynomials and cyclotomic numbers."""

from qschur.arith.cyclotomic import (
    CyclotomicNumber,
    cyc_invert,
    cyclotomic_polynomial,
    epsilon,
    epsilon_power,
    euler_phi,
    l_of,
    specialize,
)
from qschur.arith.laurent import LaurentPoly
from qschur.arith.ring import Scalar, ScalarRing, specialize_scalar

__all__ = [
    "CyclotomicNumber",
    "LaurentPoly",
    "Scalar",
    "ScalarRing",
    "cyc_invert",
    "cyclotomic_polynomial",
    "epsilon",
    "epsilon_power",
    "euler_phi",
    "l_of",
    "specialize",
    "specialize_scalar",
]
