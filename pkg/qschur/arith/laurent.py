"""Laurent polynomials in v with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable, Mapping, Optional, Union

from qschur.errors import InexactDivisionError, ScalarMismatchError

Number = Union[int, Fraction]


class LaurentPoly:
    """An element of Q[v, v^-1], stored as a sparse exponent -> coefficient map.

    Zero coefficients are never stored, so two polynomials are equal exactly when
    their maps are equal.

    >>> str(LaurentPoly({2: 1, 0: 1, -2: 1}))
    'v^2 + 1 + v^-2'
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Optional[Mapping[int, Number]] = None) -> None:
        cleaned: dict[int, Fraction] = {}
        for exp, value in (coeffs or {}).items():
            frac = Fraction(value)
            if frac:
                cleaned[int(exp)] = frac
        self._coeffs = cleaned
        self._hash: Optional[int] = None

    @classmethod
    def _wrap(cls, coeffs: dict[int, Fraction]) -> "LaurentPoly":
        poly = cls.__new__(cls)
        poly._coeffs = coeffs
        poly._hash = None
        return poly

    @classmethod
    def constant(cls, value: Number) -> "LaurentPoly":
        return cls({0: value})

    @classmethod
    def monomial(cls, exp: int, coeff: Number = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def v(cls) -> "LaurentPoly":
        return cls({1: 1})

    @classmethod
    def from_dense(cls, offset: int, coeffs: Iterable[Number]) -> "LaurentPoly":
        """Build sum_k coeffs[k] * v^(offset + k)."""
        return cls({offset + k: c for k, c in enumerate(coeffs) if c})

    # -- inspection -----------------------------------------------------

    @property
    def coefficients(self) -> dict[int, Fraction]:
        return dict(self._coeffs)

    def items(self) -> list[tuple[int, Fraction]]:
        return sorted(self._coeffs.items())

    def coefficient(self, exp: int) -> Fraction:
        return self._coeffs.get(exp, Fraction(0))

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def min_exponent(self) -> int:
        if not self._coeffs:
            raise ValueError("The zero polynomial has no exponents")
        return min(self._coeffs)

    def max_exponent(self) -> int:
        if not self._coeffs:
            raise ValueError("The zero polynomial has no exponents")
        return max(self._coeffs)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs.values())

    def is_constant(self) -> bool:
        return not self._coeffs or set(self._coeffs) == {0}

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other: Any) -> Optional["LaurentPoly"]:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(other)
        if hasattr(other, "lprime"):
            raise ScalarMismatchError("Cannot combine a generic scalar with a specialized one")
        return None

    def __add__(self, other: Any) -> "LaurentPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._coeffs)
        for exp, value in rhs._coeffs.items():
            total = out.get(exp, 0) + value
            if total:
                out[exp] = total
            else:
                out.pop(exp, None)
        return LaurentPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._wrap({exp: -c for exp, c in self._coeffs.items()})

    def __sub__(self, other: Any) -> "LaurentPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Any) -> "LaurentPoly":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: Any) -> "LaurentPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out: dict[int, Fraction] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in rhs._coeffs.items():
                exp = e1 + e2
                out[exp] = out.get(exp, 0) + c1 * c2
        return LaurentPoly._wrap({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "LaurentPoly":
        if power < 0:
            if len(self._coeffs) != 1:
                raise InexactDivisionError(f"{self} is not a unit of Q[v, v^-1]")
            ((exp, coeff),) = self._coeffs.items()
            return LaurentPoly._wrap({exp * power: coeff**power})
        result = LaurentPoly.constant(1)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v^k."""
        return LaurentPoly._wrap({exp + k: c for exp, c in self._coeffs.items()})

    def bar(self) -> "LaurentPoly":
        """Apply the bar involution v -> v^-1."""
        return LaurentPoly._wrap({-exp: c for exp, c in self._coeffs.items()})

    def exact_divide(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Return q with q * divisor == self, or raise InexactDivisionError."""
        if divisor.is_zero():
            raise ZeroDivisionError("Division by the zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly()

        low_n, low_d = self.min_exponent(), divisor.min_exponent()
        num = _dense(self, low_n)
        den = _dense(divisor, low_d)
        if len(num) < len(den):
            raise InexactDivisionError(f"{self} is not divisible by {divisor}")

        lead = den[-1]
        integral = lead in (1, -1) and self.is_integral() and divisor.is_integral()
        if integral:
            num = [int(c) for c in num]
            den = [int(c) for c in den]
            lead = int(lead)
        nonzero_den = [(j, c) for j, c in enumerate(den) if c]
        deg_d = len(den) - 1
        quotient = [0] * (len(num) - deg_d)
        for i in range(len(quotient) - 1, -1, -1):
            top = num[i + deg_d]
            if not top:
                continue
            coeff = top * lead if integral else top / lead
            quotient[i] = coeff
            for j, c in nonzero_den:
                num[i + j] -= coeff * c
        if any(num[:deg_d]):
            raise InexactDivisionError(f"{self} is not divisible by {divisor}")
        return LaurentPoly.from_dense(low_n - low_d, quotient)

    # -- comparison, hashing, display ------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == LaurentPoly.constant(other)._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for exp, coeff in sorted(self._coeffs.items(), reverse=True):
            sign = "-" if coeff < 0 else "+"
            magnitude = abs(coeff)
            if exp == 0:
                body = str(magnitude)
            else:
                mono = "v" if exp == 1 else f"v^{exp}"
                body = mono if magnitude == 1 else f"{magnitude}*{mono}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    # -- JSON -----------------------------------------------------------

    def to_json(self) -> list[list[int]]:
        return [[exp, c.numerator, c.denominator] for exp, c in sorted(self._coeffs.items())]

    @classmethod
    def from_json(cls, payload: Iterable[Iterable[int]]) -> "LaurentPoly":
        coeffs: dict[int, Fraction] = {}
        for triple in payload:
            exp, num, den = (int(x) for x in triple)
            coeffs[exp] = coeffs.get(exp, Fraction(0)) + Fraction(num, den)
        return cls(coeffs)


def _dense(poly: LaurentPoly, low: int) -> list[Fraction]:
    out = [Fraction(0)] * (poly.max_exponent() - low + 1)
    for exp, c in poly.items():
        out[exp - low] = c
    return out
