"""Scalar rings shared by a tensor session: generic Z[v, v^-1] or its specialization at eps."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Union

from qschur.arith.cyclotomic import CyclotomicNumber, epsilon_power, specialize
from qschur.arith.laurent import LaurentPoly
from qschur.errors import PreconditionError, ScalarMismatchError

Scalar = Union[LaurentPoly, CyclotomicNumber]


@functools.lru_cache(maxsize=4096)
def _generic_v_power(k: int) -> LaurentPoly:
    return LaurentPoly.monomial(k)


@dataclass(frozen=True)
class ScalarRing:
    """Either the generic ring (lprime is None) or Q(eps) for a primitive l'-th root eps."""

    lprime: Optional[int] = None

    def __post_init__(self) -> None:
        if self.lprime is not None and int(self.lprime) < 1:
            raise PreconditionError(f"lprime must be >= 1, got {self.lprime}")

    @classmethod
    def generic(cls) -> "ScalarRing":
        return cls(None)

    @classmethod
    def at_root_of_unity(cls, lprime: int) -> "ScalarRing":
        return cls(int(lprime))

    @property
    def is_generic(self) -> bool:
        return self.lprime is None

    @property
    def label(self) -> str:
        return "generic" if self.lprime is None else f"eps(l'={self.lprime})"

    def zero(self) -> Scalar:
        return self.from_int(0)

    def one(self) -> Scalar:
        return self.from_int(1)

    def from_int(self, value: Union[int, Fraction]) -> Scalar:
        if self.lprime is None:
            return LaurentPoly.constant(value)
        return CyclotomicNumber.rational(self.lprime, value)

    def v_power(self, k: int) -> Scalar:
        if self.lprime is None:
            return _generic_v_power(k)
        return epsilon_power(self.lprime, k)

    def coerce(self, value: Any) -> Scalar:
        """Bring ints, generic polynomials and matching cyclotomic numbers into this ring."""
        if isinstance(value, (int, Fraction)):
            return self.from_int(value)
        if isinstance(value, LaurentPoly):
            return value if self.lprime is None else specialize(value, self.lprime)
        if isinstance(value, CyclotomicNumber):
            if self.lprime == value.lprime:
                return value
            raise ScalarMismatchError(f"{value!r} does not belong to the {self.label} ring")
        raise TypeError(f"Not a scalar: {value!r}")

    def contains(self, value: Any) -> bool:
        if self.lprime is None:
            return isinstance(value, LaurentPoly)
        return isinstance(value, CyclotomicNumber) and value.lprime == self.lprime

    def specialize_to(self, lprime: int) -> "ScalarRing":
        if self.lprime is not None:
            raise ScalarMismatchError(f"The {self.label} ring is already specialized")
        return ScalarRing.at_root_of_unity(lprime)


def specialize_scalar(value: Scalar, lprime: int) -> CyclotomicNumber:
    if isinstance(value, CyclotomicNumber):
        if value.lprime != lprime:
            raise ScalarMismatchError(f"{value!r} is already specialized at l'={value.lprime}")
        return value
    return specialize(value, lprime)
