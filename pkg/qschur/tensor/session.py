"""Actions of the affine Hecke algebra (right) and the quantum group (left) on the tensor space.

A session fixes n, r and the scalar ring. Hecke generators act on slots, quantum
generators act through the iterated coproduct, and every action is linear in the
input vector.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Optional, Union

from qschur.arith.ring import Scalar, ScalarRing
from qschur.errors import IndexRangeError, PreconditionError
from qschur.qcomb import qbinom, qbinom_at_eps
from qschur.tensor.vector import Composition, IndexTuple, TensorVector, residue, weight_of

if TYPE_CHECKING:
    from qschur.tensor.operators import OperatorExpr

HeckeTerms = tuple[tuple[tuple[int, int], Scalar], ...]


class TensorSession:
    def __init__(
        self,
        n: int,
        r: int,
        ring: Optional[ScalarRing] = None,
        affine_node: bool = False,
    ) -> None:
        if n < 1:
            raise IndexRangeError(f"n must be >= 1, got {n}")
        if r < 1:
            raise IndexRangeError(f"r must be >= 1, got {r}")
        self.n = n
        self.r = r
        self.ring = ring or ScalarRing.generic()
        self.affine_node = affine_node
        self._hecke_cache: dict[tuple[int, int], HeckeTerms] = {}

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, r={self.r}, ring={self.ring.label})"

    def specialized(self, lprime: int) -> "TensorSession":
        return TensorSession(self.n, self.r, self.ring.specialize_to(lprime), self.affine_node)

    def v(self, k: int) -> Scalar:
        return self.ring.v_power(k)

    def basis(self, idx: IndexTuple, coeff: Union[int, Scalar] = 1) -> TensorVector:
        key = tuple(idx)
        if len(key) != self.r:
            raise IndexRangeError(f"Index tuple {key} does not have length {self.r}")
        return TensorVector.basis(key, self.ring.coerce(coeff))

    # -- index checks ---------------------------------------------------

    def _check_vector(self, vec: TensorVector) -> None:
        if vec.r != self.r:
            raise IndexRangeError(f"Vector has r={vec.r}, session has r={self.r}")

    def _check_hecke(self, k: int) -> None:
        if not 1 <= k <= self.r - 1:
            raise IndexRangeError(f"Hecke generator T_{k} outside 1..{self.r - 1}")

    def _check_slot(self, t: int) -> None:
        if not 1 <= t <= self.r:
            raise IndexRangeError(f"Slot {t} outside 1..{self.r}")

    def _check_chevalley(self, i: int) -> None:
        top = self.n if self.affine_node else self.n - 1
        if not 1 <= i <= top:
            raise IndexRangeError(f"Generator index {i} outside 1..{top}")

    def _check_cartan(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise IndexRangeError(f"Cartan index {i} outside 1..{self.n}")

    def chevalley_indices(self) -> list[int]:
        return list(range(1, (self.n if self.affine_node else self.n - 1) + 1))

    # -- Hecke side -----------------------------------------------------

    def apply_x(self, t: int, power: int, vec: TensorVector) -> TensorVector:
        """X_t^power: entry j_t becomes j_t - power * n."""
        self._check_vector(vec)
        self._check_slot(t)
        if power == 0:
            return vec
        step = power * self.n
        pos = t - 1
        return vec.map_indices(lambda idx: idx[:pos] + (idx[pos] - step,) + idx[pos + 1 :])

    def _hecke_base(self, a: int, b: int) -> HeckeTerms:
        """omega_(a,b) T for a, b in 1..n."""
        if a == b:
            return (((a, b), self.v(2)),)
        if a < b:
            return (((b, a), self.v(1)),)
        return (((b, a), self.v(1)), ((a, b), self.v(2) - 1))

    def _hecke_pair(self, a: int, b: int) -> HeckeTerms:
        """omega_(a,b) T on two adjacent slots, for arbitrary integers a, b.

        Each step peels one X^{+-1} off a slot and moves it across T, leaving a
        (v^2 - 1) correction term; the shifts collected so far apply to every later term.
        """
        key = (a, b)
        cached = self._hecke_cache.get(key)
        if cached is not None:
            return cached

        n = self.n
        q = self.v(2) - 1
        acc: dict[tuple[int, int], Scalar] = {}

        def add(x: int, y: int, coeff: Scalar) -> None:
            total = acc[(x, y)] + coeff if (x, y) in acc else coeff
            if total:
                acc[(x, y)] = total
            else:
                acc.pop((x, y), None)

        shift_a = shift_b = 0
        while not (1 <= a <= n and 1 <= b <= n):
            if a > n:
                add(a + shift_a, b + shift_b, q)
                a -= n
                shift_b += n
            elif a < 1:
                add(a + n + shift_a, b - n + shift_b, -q)
                a += n
                shift_b -= n
            elif b > n:
                add(a + n + shift_a, b - n + shift_b, -q)
                b -= n
                shift_a += n
            else:
                add(a + shift_a, b + shift_b, q)
                b += n
                shift_a -= n
        for (x, y), coeff in self._hecke_base(a, b):
            add(x + shift_a, y + shift_b, coeff)

        result = tuple(sorted(acc.items()))
        self._hecke_cache[key] = result
        return result

    def apply_t(self, k: int, vec: TensorVector) -> TensorVector:
        self._check_vector(vec)
        self._check_hecke(k)
        pos = k - 1
        pairs = []
        for idx, coeff in vec.terms():
            head, tail = idx[:pos], idx[pos + 2 :]
            for (x, y), d in self._hecke_pair(idx[pos], idx[pos + 1]):
                pairs.append((head + (x, y) + tail, coeff * d))
        return TensorVector.from_terms(self.r, pairs)

    def apply_t_inv(self, k: int, vec: TensorVector) -> TensorVector:
        """T_k^-1 = v^-2 (T_k - (v^2 - 1))."""
        moved = self.apply_t(k, vec)
        return (moved - vec.scale(self.v(2) - 1)).scale(self.v(-2))

    # -- quantum side ---------------------------------------------------

    def _next(self, i: int) -> int:
        return i % self.n + 1

    def apply_e(self, i: int, vec: TensorVector) -> TensorVector:
        """E_i through the coproduct E (x) k~_i + 1 (x) E, iterated to r slots."""
        self._check_vector(vec)
        self._check_chevalley(i)
        up = self._next(i)
        pairs = []
        for idx, coeff in vec.terms():
            later = 0
            for pos in range(self.r - 1, -1, -1):
                res = residue(idx[pos], self.n)
                if res == up:
                    moved = idx[:pos] + (idx[pos] - 1,) + idx[pos + 1 :]
                    pairs.append((moved, coeff * self.v(later)))
                if res == i:
                    later += 1
                if res == up:
                    later -= 1
        return TensorVector.from_terms(self.r, pairs)

    def apply_f(self, i: int, vec: TensorVector) -> TensorVector:
        """F_i through the coproduct F (x) 1 + k~_i^-1 (x) F, iterated to r slots."""
        self._check_vector(vec)
        self._check_chevalley(i)
        up = self._next(i)
        pairs = []
        for idx, coeff in vec.terms():
            earlier = 0
            for pos in range(self.r):
                res = residue(idx[pos], self.n)
                if res == i:
                    moved = idx[:pos] + (idx[pos] + 1,) + idx[pos + 1 :]
                    pairs.append((moved, coeff * self.v(-earlier)))
                if res == i:
                    earlier += 1
                if res == up:
                    earlier -= 1
        return TensorVector.from_terms(self.r, pairs)

    def _diagonal(self, vec: TensorVector, eigen) -> TensorVector:
        self._check_vector(vec)
        pairs = []
        for idx, coeff in vec.terms():
            value = eigen(weight_of(idx, self.n))
            if value:
                pairs.append((idx, coeff * value))
        return TensorVector.from_terms(self.r, pairs)

    def apply_k(self, i: int, exponent: int, vec: TensorVector) -> TensorVector:
        self._check_cartan(i)
        return self._diagonal(vec, lambda lam: self.v(exponent * lam[i]))

    def apply_k_tilde(self, i: int, exponent: int, vec: TensorVector) -> TensorVector:
        """k~_i = k_i k_{i+1}^-1, with k_{n+1} read as k_1."""
        self._check_cartan(i)
        up = self._next(i)
        return self._diagonal(vec, lambda lam: self.v(exponent * (lam[i] - lam[up])))

    def k_binom_value(self, c: int, t: int) -> Scalar:
        if self.ring.is_generic:
            return qbinom(c, t)
        return qbinom_at_eps(c, t, self.ring.lprime)

    def apply_k_binom(self, i: int, t: int, vec: TensorVector) -> TensorVector:
        self._check_cartan(i)
        if t < 0:
            raise PreconditionError(f"[k;0 over t] needs t >= 0, got {t}")
        return self._diagonal(vec, lambda lam: self.k_binom_value(lam[i], t))

    def apply_z(self, s: int, sign: Union[int, str], vec: TensorVector) -> TensorVector:
        """z_s^+ shifts one slot by -s n, z_s^- by +s n; summed over slots."""
        self._check_vector(vec)
        if s < 1:
            raise IndexRangeError(f"z_s needs s >= 1, got {s}")
        direction = _sign_value(sign)
        step = -direction * s * self.n
        pairs = []
        for idx, coeff in vec.terms():
            for pos in range(self.r):
                pairs.append((idx[:pos] + (idx[pos] + step,) + idx[pos + 1 :], coeff))
        return TensorVector.from_terms(self.r, pairs)

    def project_weight(self, lam: Composition, vec: TensorVector) -> TensorVector:
        self._check_vector(vec)
        if lam.n != self.n or lam.r != self.r:
            raise IndexRangeError(f"Weight {lam.parts} is not in Lambda({self.n}, {self.r})")
        return TensorVector.from_terms(
            self.r, ((idx, c) for idx, c in vec.terms() if weight_of(idx, self.n) == lam)
        )

    def apply_truncation(self, small_n: int, vec: TensorVector) -> TensorVector:
        """Keep tuples whose residues mod n all lie in 1..small_n."""
        self._check_vector(vec)
        if not 1 <= small_n <= self.n:
            raise IndexRangeError(f"Truncation size {small_n} outside 1..{self.n}")
        return TensorVector.from_terms(
            self.r,
            ((idx, c) for idx, c in vec.terms() if all(residue(j, self.n) <= small_n for j in idx)),
        )

    def apply_expr(self, op: "OperatorExpr", vec: TensorVector) -> TensorVector:
        self._check_vector(vec)
        return op.act(self, vec)


def _sign_value(sign: Union[int, str]) -> int:
    if sign in (1, "+"):
        return 1
    if sign in (-1, "-"):
        return -1
    raise PreconditionError(f"z sign must be '+' or '-', got {sign!r}")
