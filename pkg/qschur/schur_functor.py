"""The truncation idempotent e and the identification of e Omega_N^r with Omega_n^r."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from qschur.arith.ring import ScalarRing
from qschur.errors import IndexRangeError, PreconditionError
from qschur.tensor.operators import HECKE, MIXED, OperatorExpr
from qschur.tensor.session import TensorSession
from qschur.tensor.vector import IndexTuple, TensorVector, residue


@dataclass(frozen=True)
class TruncationPair:
    n: int
    N: int
    r: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.r < 1:
            raise IndexRangeError(f"Truncation needs n >= 1 and r >= 1, got n={self.n}, r={self.r}")
        if self.N < self.n:
            raise IndexRangeError(f"Truncation needs N >= n, got N={self.N}, n={self.n}")

    @property
    def morita_range(self) -> bool:
        return self.N >= self.n >= self.r

    @property
    def range_label(self) -> str:
        return "Morita range" if self.morita_range else "outside Morita range"

    def large_session(self, ring: Optional[ScalarRing] = None) -> TensorSession:
        return TensorSession(self.N, self.r, ring)

    def small_session(self, ring: Optional[ScalarRing] = None) -> TensorSession:
        return TensorSession(self.n, self.r, ring)


def in_image_of_e(pair: TruncationPair, idx: IndexTuple) -> bool:
    return all(residue(j, pair.N) <= pair.n for j in idx)


def idempotent_e(pair: TruncationPair, vec: TensorVector) -> TensorVector:
    return TensorVector.from_terms(vec.r, ((idx, c) for idx, c in vec.terms() if in_image_of_e(pair, idx)))


def _retract_entry(pair: TruncationPair, j: int) -> int:
    b = (j - 1) // pair.N
    a = j - pair.N * b
    if a > pair.n:
        raise PreconditionError(f"Entry {j} has residue {a} > {pair.n}; not in the image of e")
    return a + pair.n * b


def _section_entry(pair: TruncationPair, j: int) -> int:
    b = (j - 1) // pair.n
    a = j - pair.n * b
    return a + pair.N * b


def retract(pair: TruncationPair, vec: TensorVector) -> TensorVector:
    """rho: j = a + N b with a in 1..n goes to a + n b, entrywise."""
    return vec.map_indices(lambda idx: tuple(_retract_entry(pair, j) for j in idx))


def section(pair: TruncationPair, vec: TensorVector) -> TensorVector:
    """Inverse of retract."""
    return vec.map_indices(lambda idx: tuple(_section_entry(pair, j) for j in idx))


def transport_endomorphism(
    op: OperatorExpr,
    pair: TruncationPair,
    ring: Optional[ScalarRing] = None,
) -> Callable[[TensorVector], TensorVector]:
    """x -> retract(e(op(section(x)))), an operator on Omega_n^r."""
    if op.side in (HECKE, MIXED):
        raise PreconditionError(f"Only quantum-side operators can be transported, got {op!r}")
    large = pair.large_session(ring)

    def transported(vec: TensorVector) -> TensorVector:
        lifted = section(pair, vec)
        return retract(pair, idempotent_e(pair, large.apply_expr(op, lifted)))

    return transported
