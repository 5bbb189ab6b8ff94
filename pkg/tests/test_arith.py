import random
from fractions import Fraction

import pytest

from qschur.arith import (
    CyclotomicNumber,
    LaurentPoly,
    ScalarRing,
    cyc_invert,
    cyclotomic_polynomial,
    epsilon,
    epsilon_power,
    euler_phi,
    l_of,
    specialize,
    specialize_scalar,
)
from qschur.errors import InexactDivisionError, ScalarMismatchError

V = LaurentPoly.v()


def test_laurent_arithmetic_and_display() -> None:
    p = V**2 + 1 + V**-2
    assert str(p) == "v^2 + 1 + v^-2"
    assert p == LaurentPoly({2: 1, 0: 1, -2: 1})
    assert (V - V**-1) * (V + V**-1) == V**2 - V**-2
    assert p.bar() == p
    assert V.shift(3) == LaurentPoly.monomial(4)
    assert (p - p).is_zero()
    assert LaurentPoly.constant(Fraction(1, 2)) * 2 == 1


def test_laurent_exact_divide() -> None:
    numerator = V**3 - V**-3
    assert numerator.exact_divide(V - V**-1) == V**2 + 1 + V**-2

    with pytest.raises(InexactDivisionError):
        (V**2 + 1).exact_divide(V + 1)
    with pytest.raises(ZeroDivisionError):
        V.exact_divide(LaurentPoly())


def test_laurent_negative_powers_only_for_monomials() -> None:
    assert LaurentPoly.monomial(3, 2) ** -1 == LaurentPoly.monomial(-3, Fraction(1, 2))
    with pytest.raises(InexactDivisionError):
        (V + 1) ** -1


def test_laurent_json_payload_is_sorted_triples() -> None:
    p = LaurentPoly({-1: Fraction(1, 3), 2: -4})
    assert p.to_json() == [[-1, 1, 3], [2, -4, 1]]
    assert LaurentPoly.from_json(p.to_json()) == p


@pytest.mark.parametrize(
    "lprime, expected",
    [
        (1, (-1, 1)),
        (2, (1, 1)),
        (4, (1, 0, 1)),
        (6, (1, -1, 1)),
        (12, (1, 0, -1, 0, 1)),
    ],
)
def test_cyclotomic_polynomial(lprime: int, expected: tuple[int, ...]) -> None:
    assert cyclotomic_polynomial(lprime) == expected


def test_euler_phi_and_l_of() -> None:
    assert [euler_phi(k) for k in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]
    assert l_of(3) == 3
    assert l_of(6) == 3
    assert l_of(1) == 1


def test_specialize_examples() -> None:
    assert specialize(V + V**-1, 4).is_zero()
    assert specialize(LaurentPoly.constant(1), 7) == 1
    assert specialize(V**3, 3) == 1
    assert specialize(V, 5) == epsilon(5)
    assert specialize(V**-1, 5) == epsilon_power(5, 4)


def test_epsilon_is_primitive() -> None:
    for lprime in range(1, 13):
        eps = epsilon(lprime)
        assert eps**lprime == 1
        assert all(eps**k != 1 for k in range(1, lprime))


def test_cyc_invert_examples() -> None:
    one = CyclotomicNumber.one(4)
    assert cyc_invert(one) == one
    assert cyc_invert(epsilon(4)) == -epsilon(4)
    assert cyc_invert(CyclotomicNumber.rational(5, 2)) == Fraction(1, 2)
    with pytest.raises(ZeroDivisionError):
        cyc_invert(CyclotomicNumber.zero(3))


@pytest.mark.parametrize("lprime", [3, 5, 7, 8, 9, 12])
def test_cyc_invert_is_a_two_sided_inverse(lprime: int) -> None:
    eps = epsilon(lprime)
    z = 1 + 2 * eps + eps**2 * Fraction(-1, 3)
    assert z * cyc_invert(z) == 1
    assert cyc_invert(z) * z == 1
    assert (z / z) == 1


def test_mixed_scalars_are_rejected() -> None:
    with pytest.raises(ScalarMismatchError):
        epsilon(3) + epsilon(4)
    with pytest.raises(ScalarMismatchError):
        V + epsilon(3)
    with pytest.raises(ScalarMismatchError):
        epsilon(3) * V


def test_rational_checks() -> None:
    value = CyclotomicNumber.rational(6, Fraction(-7, 2))
    assert value.is_rational()
    assert value.as_rational() == Fraction(-7, 2)
    assert not epsilon(6).is_rational()


def test_scalar_ring_variants() -> None:
    generic = ScalarRing.generic()
    assert generic.is_generic
    assert generic.v_power(-2) == V**-2
    assert generic.coerce(3) == LaurentPoly.constant(3)
    assert generic.contains(V)

    ring = generic.specialize_to(4)
    assert ring.label == "eps(l'=4)"
    assert ring.v_power(2) == -1
    assert ring.coerce(V + V**-1).is_zero()
    assert ring.contains(epsilon(4))
    assert not ring.contains(epsilon(3))

    with pytest.raises(ScalarMismatchError):
        ring.coerce(epsilon(3))
    with pytest.raises(ScalarMismatchError):
        ring.specialize_to(2)


def test_specialize_scalar_keeps_matching_cyclotomics() -> None:
    assert specialize_scalar(V**2, 4) == -1
    assert specialize_scalar(epsilon(4), 4) == epsilon(4)
    with pytest.raises(ScalarMismatchError):
        specialize_scalar(epsilon(4), 3)


def _random_laurent(rng: random.Random, terms: int = 4) -> LaurentPoly:
    return LaurentPoly({rng.randint(-5, 5): Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(terms)})


def _random_cyclotomic(rng: random.Random, lprime: int) -> CyclotomicNumber:
    coords = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(euler_phi(lprime))]
    return CyclotomicNumber(lprime, coords)


def test_laurent_ring_axioms_on_random_elements() -> None:
    rng = random.Random(11)
    one = LaurentPoly.constant(1)
    for _ in range(300):
        a, b, c = (_random_laurent(rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        assert a * one == a
        assert a + LaurentPoly() == a
        assert (a - a).is_zero()


@pytest.mark.parametrize("lprime", range(1, 13))
def test_cyclotomic_field_axioms_on_random_elements(lprime: int) -> None:
    rng = random.Random(lprime)
    one = CyclotomicNumber.one(lprime)
    for _ in range(60):
        a, b, c = (_random_cyclotomic(rng, lprime) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a * one == a
        assert a + CyclotomicNumber.zero(lprime) == a
        if not a.is_zero():
            assert a * cyc_invert(a) == one


@pytest.mark.parametrize("lprime", range(1, 13))
def test_specialize_is_a_homomorphism_on_random_pairs(lprime: int) -> None:
    rng = random.Random(100 + lprime)
    for _ in range(1000):
        p, q = _random_laurent(rng, 3), _random_laurent(rng, 3)
        assert specialize(p * q, lprime) == specialize(p, lprime) * specialize(q, lprime)
        assert specialize(p + q, lprime) == specialize(p, lprime) + specialize(q, lprime)
