"""Operator expression trees evaluated against a TensorSession.

Leaves are single generators; Compose and LinComb build words and linear
combinations. In a Compose, quantum-side factors act on the left and are applied
right-to-left, then Hecke-side factors act on the right and are applied
left-to-right.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

from qschur.errors import IndexRangeError
from qschur.tensor.vector import Composition, TensorVector

if TYPE_CHECKING:
    from qschur.tensor.session import TensorSession

HECKE = "hecke"
QUANTUM = "quantum"
NEUTRAL = "neutral"
MIXED = "mixed"


class OperatorExpr:
    side: str = NEUTRAL

    def act(self, session: "TensorSession", vec: TensorVector) -> TensorVector:
        raise NotImplementedError

    def __call__(self, session: "TensorSession", vec: TensorVector) -> TensorVector:
        return self.act(session, vec)


@dataclass(frozen=True)
class HeckeT(OperatorExpr):
    k: int
    side = HECKE

    def act(self, session: "TensorSession", vec: TensorVector) -> TensorVector:
        return session.apply_t(self.k, vec)


@dataclass(frozen=True)
class HeckeTinv(OperatorExpr):
    k: int
    side = HECKE

    def act(self, session: "TensorSession", vec: TensorVector) -> TensorVector:
        return session.apply_t_inv(self.k, vec)


@dataclass(frozen=True)
class XShift(OperatorExpr):
    t: int
    power: int = 1
    side = HECKE

    def act(self, session: "TensorSession", vec: TensorVector) -> TensorVector:
        return session.apply_x(self.t, self.power, vec)


@dataclass(frozen=True)
class Egen(OperatorExpr):
    i: int
    side = QUANTUM

    def act(self, session: "TensorSession", vec: TensorVector) -> TensorVector:
        return session.apply_e(self.i, vec)


@dataclass(frozen=True)
class Fgen(OperatorExpr):
    i: int
    side = QUANTUM

    def act(self, session: "TensorSession", vec: TensorVector) -> TensorVector:
        return session.apply_f(self.i, vec)


@dataclass(frozen=True)
class Kgen(OperatorExpr):
    i: int
    exponent: int = 1
    side = QUANTUM

    def act(self, session: "TensorSession", vec: TensorVector) -> TensorVector:
        return session.apply_k(self.i, self.exponent, vec)


@dataclass(frozen=True)
class KBinom(OperatorExpr):
    i: int
    t: int
    side = QUANTUM

    def act(self, session: "TensorSession", vec: TensorVector) -> TensorVector:
        return session.apply_k_binom(self.i, self.t, vec)


@dataclass(frozen=True)
class Zgen(OperatorExpr):
    s: int
    sign: str = "+"
    side = QUANTUM

    def act(self, session: "TensorSession", vec: TensorVector) -> TensorVector:
        return session.apply_z(self.s, self.sign, vec)


@dataclass(frozen=True)
class WeightProj(OperatorExpr):
    lam: Composition
    side = QUANTUM

    def act(self, session: "TensorSession", vec: TensorVector) -> TensorVector:
        return session.project_weight(self.lam, vec)


@dataclass(frozen=True)
class IdempotentE(OperatorExpr):
    """e = sum of 1_mu~ over mu in Lambda(n, r), acting on an N-session."""

    n: int
    N: int
    side = QUANTUM

    def act(self, session: "TensorSession", vec: TensorVector) -> TensorVector:
        if session.n != self.N:
            raise IndexRangeError(f"IdempotentE({self.n}, {self.N}) needs an n={self.N} session")
        return session.apply_truncation(self.n, vec)


@dataclass(frozen=True)
class Identity(OperatorExpr):
    def act(self, session: "TensorSession", vec: TensorVector) -> TensorVector:
        return vec


def _combined_side(children: list[OperatorExpr]) -> str:
    sides = {child.side for child in children} - {NEUTRAL}
    if not sides:
        return NEUTRAL
    if len(sides) == 1:
        return sides.pop()
    return MIXED


@dataclass(frozen=True)
class Compose(OperatorExpr):
    factors: tuple[OperatorExpr, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))

    @property
    def side(self) -> str:  # type: ignore[override]
        return _combined_side(list(self.factors))

    def act(self, session: "TensorSession", vec: TensorVector) -> TensorVector:
        left = [f for f in self.factors if f.side != HECKE]
        right = [f for f in self.factors if f.side == HECKE]
        for factor in reversed(left):
            vec = factor.act(session, vec)
        for factor in right:
            vec = factor.act(session, vec)
        return vec


@dataclass(frozen=True)
class LinComb(OperatorExpr):
    """sum coeff * expr; the empty combination is the zero operator."""

    terms: tuple[tuple[Any, OperatorExpr], ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple((c, e) for c, e in self.terms))

    @property
    def side(self) -> str:  # type: ignore[override]
        return _combined_side([expr for _, expr in self.terms])

    def act(self, session: "TensorSession", vec: TensorVector) -> TensorVector:
        total = TensorVector.zero(vec.r)
        for coeff, expr in self.terms:
            scalar = session.ring.coerce(coeff)
            if scalar:
                total = total + expr.act(session, vec).scale(scalar)
        return total


ZERO = LinComb(())
