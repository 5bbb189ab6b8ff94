"""Quantum integers, factorials and balanced Gaussian binomials, generic and at roots of unity."""

from __future__ import annotations

import functools
from fractions import Fraction

from qschur.arith.cyclotomic import CyclotomicNumber, epsilon_power, l_of, specialize
from qschur.arith.laurent import LaurentPoly
from qschur.errors import InexactDivisionError, PreconditionError


@functools.lru_cache(maxsize=None)
def qint(c: int) -> LaurentPoly:
    """[c]_v = (v^c - v^-c) / (v - v^-1)."""
    numerator = LaurentPoly.monomial(c) - LaurentPoly.monomial(-c)
    return numerator.exact_divide(LaurentPoly({1: 1, -1: -1}))


@functools.lru_cache(maxsize=None)
def qfact(t: int) -> LaurentPoly:
    if t < 0:
        raise PreconditionError(f"qfact needs t >= 0, got {t}")
    result = LaurentPoly.constant(1)
    for i in range(1, t + 1):
        result = result * qint(i)
    return result


def _divide_by_binomial(coeffs: list[int], d: int) -> list[int]:
    """Exact quotient of a dense integer polynomial by x^d - 1."""
    size = len(coeffs) - d
    if size <= 0:
        if any(coeffs):
            raise InexactDivisionError(f"Degree too small to divide by x^{d} - 1")
        return []
    quotient = [0] * size
    for i in range(size):
        prev = quotient[i - d] if i >= d else 0
        quotient[i] = prev - coeffs[i]
    for i in range(size, len(coeffs)):
        expected = quotient[i - d] if 0 <= i - d < size else 0
        if coeffs[i] != expected:
            raise InexactDivisionError(f"Nonzero remainder dividing by x^{d} - 1")
    return quotient


@functools.lru_cache(maxsize=None)
def qbinom(c: int, t: int) -> LaurentPoly:
    """Balanced Gaussian binomial prod_{s=1}^t (v^(c-s+1) - v^-(c-s+1)) / (v^s - v^-s).

    Every partial product is itself [c over s]_v, so the running value stays an
    integer Laurent polynomial and each division is checked for exactness.
    """
    if t < 0:
        raise PreconditionError(f"qbinom needs t >= 0, got {t}")
    offset, coeffs = 0, [1]
    for s in range(1, t + 1):
        a = c - s + 1
        if a == 0:
            return LaurentPoly()
        b, sign = abs(a), (1 if a > 0 else -1)
        widened = [0] * (len(coeffs) + 2 * b)
        for k, x in enumerate(coeffs):
            if x:
                widened[k + 2 * b] += sign * x
                widened[k] -= sign * x
        coeffs = _divide_by_binomial(widened, 2 * s)
        offset += s - b
    return LaurentPoly.from_dense(offset, coeffs)


@functools.lru_cache(maxsize=None)
def qbinom_at_eps(c: int, t: int, lprime: int) -> CyclotomicNumber:
    return specialize(qbinom(c, t), lprime)


def gauss_expand(m: int) -> list[LaurentPoly]:
    """Coefficients of X^0..X^m in prod_{j=0}^{m-1} (1 + v^(2j) X)."""
    if m < 0:
        raise PreconditionError(f"gauss_expand needs m >= 0, got {m}")
    coeffs = [LaurentPoly.constant(1)]
    for j in range(m):
        shifted = [LaurentPoly()] + [c.shift(2 * j) for c in coeffs]
        coeffs = [a + b for a, b in zip(coeffs + [LaurentPoly()], shifted)]
    return coeffs


def binomial(m1: int, t1: int) -> int:
    """Ordinary binomial m1 (m1-1) ... (m1-t1+1) / t1!, valid for negative m1 as well."""
    if t1 < 0:
        return 0
    num, den = 1, 1
    for k in range(t1):
        num *= m1 - k
        den *= k + 1
    return num // den


def lemma_mt_rhs(m: int, t: int, lprime: int) -> CyclotomicNumber:
    """Root-of-unity factorization of [m over t]_eps through m = m0 + l m1, t = t0 + l t1."""
    if not 0 <= t <= m:
        raise PreconditionError(f"lemma_mt_rhs needs 0 <= t <= m, got m={m}, t={t}")
    l = l_of(lprime)
    m1, m0 = divmod(m, l)
    t1, t0 = divmod(t, l)
    exponent = l * (t1 * l - t1 * m0 - t1 * l * m1 - t0 * m1)
    return epsilon_power(lprime, exponent) * qbinom_at_eps(m0, t0, lprime) * binomial(m1, t1)


def cor_ml_value(m: int, lprime: int) -> Fraction:
    """Predicted [m over l]_eps: m1 for odd l', (-1)^(l+m) m1 for even l'."""
    l = l_of(lprime)
    m1 = m // l
    if lprime % 2:
        return Fraction(m1)
    return Fraction(m1 if (l + m) % 2 == 0 else -m1)


def ml_even_explicit(m: int, lprime: int) -> Fraction:
    """For l' = 2l and m = a + s l': (-1)^(l+m) 2s if a < l, else (-1)^(l+m) (2s+1)."""
    if lprime % 2:
        raise PreconditionError(f"ml_even_explicit needs an even l', got {lprime}")
    l = lprime // 2
    s, a = divmod(m, lprime)
    magnitude = 2 * s if a < l else 2 * s + 1
    return Fraction(magnitude if (l + m) % 2 == 0 else -magnitude)


def check_m_injectivity(m: int, mprime: int, lprime: int) -> bool:
    """eps^m = eps^m' and [m over l]_eps = [m' over l]_eps force m = m'."""
    if m == mprime:
        return True
    if epsilon_power(lprime, m) != epsilon_power(lprime, mprime):
        return True
    l = l_of(lprime)
    return qbinom_at_eps(m, l, lprime) != qbinom_at_eps(mprime, l, lprime)


def qbinom_reflection_holds(m: int, t: int) -> bool:
    """[m over t] = (-1)^t [-m+t-1 over t]."""
    reflected = qbinom(-m + t - 1, t)
    return qbinom(m, t) == (reflected if t % 2 == 0 else -reflected)


def block_product(lprime: int) -> list[CyclotomicNumber]:
    """Coefficients in X of prod_{j=0}^{l-1} (1 + eps^(2j) X)."""
    l = l_of(lprime)
    coeffs = [CyclotomicNumber.one(lprime)]
    zero = CyclotomicNumber.zero(lprime)
    for j in range(l):
        step = epsilon_power(lprime, 2 * j)
        shifted = [zero] + [c * step for c in coeffs]
        coeffs = [a + b for a, b in zip(coeffs + [zero], shifted)]
    return coeffs
