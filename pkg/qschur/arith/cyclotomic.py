"""Exact arithmetic in the cyclotomic field Q(eps), eps a primitive l'-th root of unity.

Elements are coordinate vectors in the power basis 1, x, ..., x^(phi(l')-1) of
Q[x]/Phi_l'(x), with x standing for eps.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence, Union

from qschur.arith.laurent import LaurentPoly
from qschur.errors import PreconditionError, ScalarMismatchError

Number = Union[int, Fraction]


def _check_order(lprime: int) -> None:
    if int(lprime) < 1:
        raise PreconditionError(f"lprime must be >= 1, got {lprime}")


def _int_divmod(num: list[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    """Divide integer polynomials (constant term first) by a monic divisor."""
    rem = list(num)
    deg_d = len(den) - 1
    if len(rem) <= deg_d:
        return [], rem
    quotient = [0] * (len(rem) - deg_d)
    for i in range(len(quotient) - 1, -1, -1):
        coeff = rem[i + deg_d]
        if coeff:
            quotient[i] = coeff
            for j, c in enumerate(den):
                if c:
                    rem[i + j] -= coeff * c
    return quotient, rem[:deg_d]


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(lprime: int) -> tuple[int, ...]:
    """Return Phi_l' as integer coefficients, constant term first.

    Computed by exact division of x^l' - 1 by Phi_d for every proper divisor d.

    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    _check_order(lprime)
    poly = [-1] + [0] * (lprime - 1) + [1]
    for d in range(1, lprime):
        if lprime % d:
            continue
        poly, rem = _int_divmod(poly, cyclotomic_polynomial(d))
        if any(rem):
            raise ArithmeticError(f"Phi_{d} does not divide x^{lprime} - 1")
    return tuple(poly)


def euler_phi(lprime: int) -> int:
    return len(cyclotomic_polynomial(lprime)) - 1


def l_of(lprime: int) -> int:
    """l' for odd l', l'/2 for even l'."""
    _check_order(lprime)
    return lprime // 2 if lprime % 2 == 0 else lprime


def _reduce(lprime: int, coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    phi = cyclotomic_polynomial(lprime)
    deg = len(phi) - 1
    work = list(coeffs) + [Fraction(0)] * max(0, deg - len(coeffs))
    for i in range(len(work) - 1, deg - 1, -1):
        top = work[i]
        if top:
            base = i - deg
            for j in range(deg):
                if phi[j]:
                    work[base + j] -= top * phi[j]
            work[i] = Fraction(0)
    return tuple(work[:deg])


class CyclotomicNumber:
    """An element of Q(eps) for a fixed order l'."""

    __slots__ = ("lprime", "coords")

    def __init__(self, lprime: int, coords: Iterable[Number]) -> None:
        _check_order(lprime)
        values = tuple(Fraction(c) for c in coords)
        if len(values) != euler_phi(lprime):
            raise PreconditionError(
                f"Q(eps_{lprime}) needs {euler_phi(lprime)} coordinates, got {len(values)}"
            )
        self.lprime = int(lprime)
        self.coords = values

    @classmethod
    def _wrap(cls, lprime: int, coords: tuple[Fraction, ...]) -> "CyclotomicNumber":
        obj = cls.__new__(cls)
        obj.lprime = lprime
        obj.coords = coords
        return obj

    @classmethod
    def from_poly(cls, lprime: int, coeffs: Sequence[Number]) -> "CyclotomicNumber":
        """Reduce sum_k coeffs[k] x^k modulo Phi_l'."""
        _check_order(lprime)
        return cls._wrap(lprime, _reduce(lprime, [Fraction(c) for c in coeffs]))

    @classmethod
    def rational(cls, lprime: int, value: Number) -> "CyclotomicNumber":
        coords = [Fraction(0)] * euler_phi(lprime)
        coords[0] = Fraction(value)
        return cls._wrap(lprime, tuple(coords))

    @classmethod
    def zero(cls, lprime: int) -> "CyclotomicNumber":
        return cls.rational(lprime, 0)

    @classmethod
    def one(cls, lprime: int) -> "CyclotomicNumber":
        return cls.rational(lprime, 1)

    # -- inspection -----------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self) -> bool:
        return any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise PreconditionError(f"{self} is not rational")
        return self.coords[0]

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other: Any) -> Optional["CyclotomicNumber"]:
        if isinstance(other, CyclotomicNumber):
            if other.lprime != self.lprime:
                raise ScalarMismatchError(
                    f"Cannot combine Q(eps_{self.lprime}) with Q(eps_{other.lprime})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.rational(self.lprime, other)
        if isinstance(other, LaurentPoly):
            raise ScalarMismatchError("Cannot combine a specialized scalar with a generic one")
        return None

    def __add__(self, other: Any) -> "CyclotomicNumber":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return CyclotomicNumber._wrap(self.lprime, tuple(a + b for a, b in zip(self.coords, rhs.coords)))

    __radd__ = __add__

    def __neg__(self) -> "CyclotomicNumber":
        return CyclotomicNumber._wrap(self.lprime, tuple(-a for a in self.coords))

    def __sub__(self, other: Any) -> "CyclotomicNumber":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return CyclotomicNumber._wrap(self.lprime, tuple(a - b for a, b in zip(self.coords, rhs.coords)))

    def __rsub__(self, other: Any) -> "CyclotomicNumber":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: Any) -> "CyclotomicNumber":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if rhs.is_rational():
            scale = rhs.coords[0]
            return CyclotomicNumber._wrap(self.lprime, tuple(a * scale for a in self.coords))
        product = [Fraction(0)] * (2 * len(self.coords) - 1)
        for i, a in enumerate(self.coords):
            if not a:
                continue
            for j, b in enumerate(rhs.coords):
                if b:
                    product[i + j] += a * b
        return CyclotomicNumber._wrap(self.lprime, _reduce(self.lprime, product))

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "CyclotomicNumber":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self * cyc_invert(rhs)

    def __pow__(self, power: int) -> "CyclotomicNumber":
        if power < 0:
            return cyc_invert(self) ** (-power)
        result = CyclotomicNumber.one(self.lprime)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    # -- comparison, hashing, display ------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CyclotomicNumber):
            return self.lprime == other.lprime and self.coords == other.coords
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.lprime, self.coords))

    def __repr__(self) -> str:
        return f"CyclotomicNumber({self.lprime}, '{self}')"

    def __str__(self) -> str:
        terms: list[str] = []
        for k, c in enumerate(self.coords):
            if not c:
                continue
            mono = "" if k == 0 else ("e" if k == 1 else f"e^{k}")
            if not mono:
                body = str(abs(c))
            else:
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            if not terms:
                terms.append(f"-{body}" if c < 0 else body)
            else:
                terms.append(f" {'-' if c < 0 else '+'} {body}")
        return "".join(terms) or "0"

    # -- JSON -----------------------------------------------------------

    def to_json(self) -> dict[str, Any]:
        return {"lprime": self.lprime, "coords": [[c.numerator, c.denominator] for c in self.coords]}

    @classmethod
    def from_json(cls, payload: dict[str, Any]) -> "CyclotomicNumber":
        coords = [Fraction(int(num), int(den)) for num, den in payload["coords"]]
        return cls(int(payload["lprime"]), coords)


@functools.lru_cache(maxsize=None)
def epsilon_power(lprime: int, k: int) -> CyclotomicNumber:
    """eps^k, reduced; negative k wraps around the cyclic group."""
    _check_order(lprime)
    poly = [0] * lprime
    poly[k % lprime] = 1
    return CyclotomicNumber.from_poly(lprime, poly)


def epsilon(lprime: int) -> CyclotomicNumber:
    return epsilon_power(lprime, 1)


def specialize(p: LaurentPoly, lprime: int) -> CyclotomicNumber:
    """The ring homomorphism Q[v, v^-1] -> Q(eps) sending v to eps."""
    _check_order(lprime)
    folded = [Fraction(0)] * lprime
    for exp, c in p.items():
        folded[exp % lprime] += c
    return CyclotomicNumber.from_poly(lprime, folded)


def _trim(poly: list[Fraction]) -> list[Fraction]:
    end = len(poly)
    while end and not poly[end - 1]:
        end -= 1
    return poly[:end]


def _poly_divmod(num: list[Fraction], den: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    rem = list(num)
    deg_d = len(den) - 1
    if len(rem) <= deg_d:
        return [], rem
    quotient = [Fraction(0)] * (len(rem) - deg_d)
    lead = den[-1]
    for i in range(len(quotient) - 1, -1, -1):
        coeff = rem[i + deg_d] / lead
        if coeff:
            quotient[i] = coeff
            for j, c in enumerate(den):
                rem[i + j] -= coeff * c
    return quotient, _trim(rem[:deg_d])


def _poly_sub_mul(a: list[Fraction], q: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """a - q * b."""
    out = list(a) + [Fraction(0)] * max(0, len(q) + len(b) - 1 - len(a))
    for i, qc in enumerate(q):
        if qc:
            for j, bc in enumerate(b):
                out[i + j] -= qc * bc
    return _trim(out)


def cyc_invert(z: CyclotomicNumber) -> CyclotomicNumber:
    """Return w with z * w == 1, via the extended Euclidean algorithm against Phi_l'."""
    if z.is_zero():
        raise ZeroDivisionError("0 has no inverse in Q(eps)")
    if z.is_rational():
        return CyclotomicNumber.rational(z.lprime, 1 / z.coords[0])

    modulus = [Fraction(c) for c in cyclotomic_polynomial(z.lprime)]
    old_r, r = _trim(list(z.coords)), modulus
    old_s: list[Fraction] = [Fraction(1)]
    s: list[Fraction] = []
    while r:
        quotient, remainder = _poly_divmod(old_r, r)
        old_r, r = r, remainder
        old_s, s = s, _poly_sub_mul(old_s, quotient, s)
    # old_r is a nonzero constant because Phi_l' is irreducible.
    if len(old_r) != 1:
        raise ArithmeticError(f"{z} shares a factor with Phi_{z.lprime}")
    scale = 1 / old_r[0]
    return CyclotomicNumber.from_poly(z.lprime, [c * scale for c in old_s])
