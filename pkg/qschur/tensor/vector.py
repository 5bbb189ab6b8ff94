"""Basis tuples, weights and finitely supported vectors of the tensor space."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Iterator, Mapping, Optional

from qschur.arith.ring import Scalar, specialize_scalar
from qschur.errors import IndexRangeError, ScalarMismatchError

IndexTuple = tuple[int, ...]


def residue(j: int, n: int) -> int:
    """Residue of j modulo n, taken in 1..n."""
    return (j - 1) % n + 1


@dataclass(frozen=True)
class Composition:
    """A weight: n nonnegative parts summing to r."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if not self.parts:
            raise IndexRangeError("A composition needs at least one part")
        if any(p < 0 for p in self.parts):
            raise IndexRangeError(f"Composition parts must be nonnegative, got {self.parts}")

    @property
    def n(self) -> int:
        return len(self.parts)

    @property
    def r(self) -> int:
        return sum(self.parts)

    def __getitem__(self, i: int) -> int:
        """1-based part access."""
        if not 1 <= i <= self.n:
            raise IndexRangeError(f"Part index {i} outside 1..{self.n}")
        return self.parts[i - 1]

    def dominates(self, other: "Composition") -> bool:
        """other <= self in dominance order (partial sums of other never exceed those of self)."""
        if other.n != self.n or other.r != self.r:
            return False
        mine = theirs = 0
        for a, b in zip(self.parts, other.parts):
            mine += a
            theirs += b
            if theirs > mine:
                return False
        return True

    def padded(self, size: int) -> "Composition":
        if size < self.n:
            raise IndexRangeError(f"Cannot pad a composition with {self.n} parts to {size}")
        return Composition(self.parts + (0,) * (size - self.n))

    def to_json(self) -> list[int]:
        return list(self.parts)


def weight_of(idx: Iterable[int], n: int) -> Composition:
    if n < 1:
        raise IndexRangeError(f"n must be >= 1, got {n}")
    counts = [0] * n
    for j in idx:
        counts[residue(j, n) - 1] += 1
    return Composition(tuple(counts))


@functools.lru_cache(maxsize=None)
def compositions(n: int, r: int) -> tuple[Composition, ...]:
    """All of Lambda(n, r), lexicographically decreasing."""
    if n < 1 or r < 0:
        raise IndexRangeError(f"compositions needs n >= 1 and r >= 0, got n={n}, r={r}")

    def build(slots: int, total: int) -> Iterator[tuple[int, ...]]:
        if slots == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in build(slots - 1, total - first):
                yield (first,) + rest

    return tuple(Composition(parts) for parts in build(n, r))


class TensorVector:
    """An immutable finite sum of coefficient * omega_idx, all idx of length r."""

    __slots__ = ("r", "_terms")

    def __init__(self, r: int, terms: Optional[Mapping[IndexTuple, Scalar]] = None) -> None:
        if r < 1:
            raise IndexRangeError(f"r must be >= 1, got {r}")
        cleaned: dict[IndexTuple, Scalar] = {}
        for idx, coeff in (terms or {}).items():
            key = tuple(int(j) for j in idx)
            if len(key) != r:
                raise IndexRangeError(f"Index tuple {key} does not have length {r}")
            if coeff:
                cleaned[key] = coeff
        self.r = r
        self._terms = cleaned

    @classmethod
    def _wrap(cls, r: int, terms: dict[IndexTuple, Scalar]) -> "TensorVector":
        vec = cls.__new__(cls)
        vec.r = r
        vec._terms = terms
        return vec

    @classmethod
    def zero(cls, r: int) -> "TensorVector":
        return cls(r)

    @classmethod
    def basis(cls, idx: Iterable[int], coeff: Scalar) -> "TensorVector":
        key = tuple(int(j) for j in idx)
        return cls(len(key), {key: coeff})

    @classmethod
    def from_terms(cls, r: int, pairs: Iterable[tuple[IndexTuple, Scalar]]) -> "TensorVector":
        """Sum (idx, coeff) pairs, merging repeated indices."""
        acc: dict[IndexTuple, Scalar] = {}
        for idx, coeff in pairs:
            if not coeff:
                continue
            if idx in acc:
                total = acc[idx] + coeff
                if total:
                    acc[idx] = total
                else:
                    del acc[idx]
            else:
                acc[idx] = coeff
        return cls._wrap(r, acc)

    # -- inspection -----------------------------------------------------

    def terms(self) -> list[tuple[IndexTuple, Scalar]]:
        return sorted(self._terms.items())

    @property
    def support(self) -> list[IndexTuple]:
        return sorted(self._terms)

    def coefficient(self, idx: IndexTuple) -> Optional[Scalar]:
        return self._terms.get(tuple(idx))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # -- linear structure -----------------------------------------------

    def _check_compatible(self, other: "TensorVector") -> None:
        if other.r != self.r:
            raise IndexRangeError(f"Cannot combine vectors with r={self.r} and r={other.r}")

    def __add__(self, other: Any) -> "TensorVector":
        if not isinstance(other, TensorVector):
            return NotImplemented
        self._check_compatible(other)
        return TensorVector.from_terms(self.r, list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "TensorVector":
        return TensorVector._wrap(self.r, {idx: -c for idx, c in self._terms.items()})

    def __sub__(self, other: Any) -> "TensorVector":
        if not isinstance(other, TensorVector):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Scalar) -> "TensorVector":
        if not factor:
            return TensorVector.zero(self.r)
        return TensorVector.from_terms(self.r, ((idx, factor * c) for idx, c in self._terms.items()))

    def map_indices(self, fn: Callable[[IndexTuple], IndexTuple]) -> "TensorVector":
        return TensorVector.from_terms(self.r, ((fn(idx), c) for idx, c in self._terms.items()))

    def map_coefficients(self, fn: Callable[[Scalar], Scalar]) -> "TensorVector":
        return TensorVector.from_terms(self.r, ((idx, fn(c)) for idx, c in self._terms.items()))

    def without(self, idx: IndexTuple) -> "TensorVector":
        terms = dict(self._terms)
        terms.pop(idx, None)
        return TensorVector._wrap(self.r, terms)

    # -- comparison, display ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorVector):
            return NotImplemented
        if self.r != other.r or self._terms.keys() != other._terms.keys():
            return False
        try:
            return all(self._terms[idx] == other._terms[idx] for idx in self._terms)
        except ScalarMismatchError:
            return False

    def __hash__(self) -> int:
        return hash((self.r, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"TensorVector(r={self.r}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({c})*w{list(idx)}" for idx, c in self.terms())


def specialize_vector(vec: TensorVector, lprime: int) -> TensorVector:
    return vec.map_coefficients(lambda c: specialize_scalar(c, lprime))
