import cmath

import pytest

from qschur.arith import CyclotomicNumber, LaurentPoly, cyclotomic_polynomial, epsilon_power, specialize
from qschur.errors import PreconditionError
from qschur.qcomb import (
    binomial,
    block_product,
    check_m_injectivity,
    cor_ml_value,
    gauss_expand,
    lemma_mt_rhs,
    ml_even_explicit,
    qbinom,
    qbinom_at_eps,
    qbinom_reflection_holds,
    qfact,
    qint,
)

V = LaurentPoly.v()


def test_qint_examples() -> None:
    assert qint(0).is_zero()
    assert qint(1) == 1
    assert qint(3) == V**2 + 1 + V**-2
    assert qint(-2) == -(V + V**-1)


def test_qfact_examples() -> None:
    assert qfact(0) == 1
    assert qfact(2) == V + V**-1
    assert qfact(3) == (V + V**-1) * (V**2 + 1 + V**-2)
    with pytest.raises(PreconditionError):
        qfact(-1)


def test_qbinom_examples() -> None:
    assert qbinom(4, 2) == V**4 + V**2 + 2 + V**-2 + V**-4
    assert qbinom(1, 1) == 1
    assert qbinom(-1, 1) == -1
    assert all(qbinom(c, 0) == 1 for c in range(-5, 6))
    assert qbinom(1, 2).is_zero()
    assert qbinom(3, 1) == qint(3)
    with pytest.raises(PreconditionError):
        qbinom(3, -1)


def test_qbinom_matches_factorial_quotient() -> None:
    for c in range(0, 9):
        for t in range(0, c + 1):
            assert qbinom(c, t) * qfact(t) * qfact(c - t) == qfact(c)


def test_qbinom_at_eps_examples() -> None:
    assert qbinom_at_eps(4, 2, 3).is_zero()
    assert qbinom_at_eps(5, 2, 4) == -2
    assert qbinom_at_eps(9, 0, 5) == 1


def test_gauss_expand_examples() -> None:
    assert gauss_expand(0) == [LaurentPoly.constant(1)]
    assert gauss_expand(2) == [LaurentPoly.constant(1), 1 + V**2, V**2]
    assert gauss_expand(3)[1] == qbinom(3, 1) * V**2


def test_generalized_binomial() -> None:
    assert binomial(5, 2) == 10
    assert binomial(-1, 3) == -1
    assert binomial(-2, 2) == 3
    assert binomial(3, 0) == 1
    assert binomial(3, -1) == 0
    assert binomial(2, 3) == 0


def test_lemma_mt_rhs_examples() -> None:
    assert lemma_mt_rhs(4, 2, 3).is_zero()
    assert lemma_mt_rhs(7, 3, 3) == 2
    assert lemma_mt_rhs(7, 3, 3) == qbinom_at_eps(7, 3, 3)
    for lprime in (2, 5, 8):
        assert lemma_mt_rhs(11, 0, lprime) == 1
    with pytest.raises(PreconditionError):
        lemma_mt_rhs(2, 3, 4)


@pytest.mark.parametrize("lprime", [2, 3, 4, 5, 6, 7, 10, 12])
def test_lemma_mt_holds_for_small_m(lprime: int) -> None:
    for m in range(0, 16):
        for t in range(0, m + 1):
            assert qbinom_at_eps(m, t, lprime) == lemma_mt_rhs(m, t, lprime), (m, t)


def test_cor_ml_examples() -> None:
    assert cor_ml_value(7, 3) == 2
    assert cor_ml_value(5, 4) == -2
    assert cor_ml_value(0, 9) == 0


@pytest.mark.parametrize("lprime", [2, 3, 4, 6, 8, 9])
def test_cor_ml_matches_evaluation(lprime: int) -> None:
    l = lprime // 2 if lprime % 2 == 0 else lprime
    for m in range(-20, 21):
        value = qbinom_at_eps(m, l, lprime)
        assert value.is_rational()
        assert value.as_rational() == cor_ml_value(m, lprime), m


@pytest.mark.parametrize("lprime", [2, 4, 6, 10])
def test_ml_even_explicit_matches_evaluation(lprime: int) -> None:
    l = lprime // 2
    for m in range(-20, 21):
        assert qbinom_at_eps(m, l, lprime) == ml_even_explicit(m, lprime), m


def test_ml_even_explicit_rejects_odd_order() -> None:
    with pytest.raises(PreconditionError):
        ml_even_explicit(3, 5)


def test_check_m_injectivity_examples() -> None:
    assert check_m_injectivity(4, 4, 5)
    assert check_m_injectivity(3, 9, 6)
    assert check_m_injectivity(1, 2, 3)
    assert epsilon_power(6, 3) == epsilon_power(6, 9)
    assert qbinom_at_eps(3, 3, 6) != qbinom_at_eps(9, 3, 6)


def test_reflection_identity() -> None:
    assert all(qbinom_reflection_holds(m, t) for m in range(-6, 7) for t in range(0, 5))


@pytest.mark.parametrize("lprime", [1, 2, 3, 4, 5, 6, 12])
def test_block_product_collapses(lprime: int) -> None:
    l = lprime // 2 if lprime % 2 == 0 else lprime
    coeffs = block_product(lprime)
    assert len(coeffs) == l + 1
    assert coeffs[0] == 1
    assert all(c.is_zero() for c in coeffs[1:l])
    assert coeffs[l] == epsilon_power(lprime, l * (l - 1))


def _to_sympy(poly: LaurentPoly, v):
    import sympy

    return sum(sympy.Rational(c.numerator, c.denominator) * v**exp for exp, c in poly.items())


def test_cyclotomic_polynomial_matches_sympy() -> None:
    sympy = pytest.importorskip("sympy")
    x = sympy.Symbol("x")
    for lprime in range(1, 31):
        expected = [int(c) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(lprime, x), x).all_coeffs())]
        assert list(cyclotomic_polynomial(lprime)) == expected, lprime


def test_qbinom_matches_sympy_gaussian_binomial() -> None:
    sympy = pytest.importorskip("sympy")
    v = sympy.Symbol("v")
    q = v**2
    for c in range(0, 9):
        for t in range(0, c + 1):
            standard = sympy.Integer(1)
            for s in range(1, t + 1):
                standard *= (1 - q ** (c - s + 1)) / (1 - q**s)
            balanced = standard * v ** (-t * (c - t))
            diff = sympy.cancel(sympy.together(_to_sympy(qbinom(c, t), v) - balanced))
            assert diff == 0, (c, t)


def test_specialized_qbinom_matches_complex_evaluation() -> None:
    for lprime in (5, 8):
        root = cmath.exp(2j * cmath.pi / lprime)
        for c in range(-4, 9):
            for t in range(0, 4):
                value = qbinom_at_eps(c, t, lprime)
                as_complex = sum(float(a) * root**k for k, a in enumerate(value.coords))
                direct = sum(float(a) * root**exp for exp, a in qbinom(c, t).items())
                assert abs(as_complex - direct) < 1e-9, (c, t, lprime)


def test_specialize_is_a_ring_homomorphism() -> None:
    p = V**3 - 2 * V + V**-4
    q = V**-1 + 5
    for lprime in (3, 4, 7):
        assert specialize(p * q, lprime) == specialize(p, lprime) * specialize(q, lprime)
        assert specialize(p + q, lprime) == specialize(p, lprime) + specialize(q, lprime)
        assert isinstance(specialize(p, lprime), CyclotomicNumber)
