"""Seeded random vectors and exhaustive window bases for extensional operator checks."""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from qschur.errors import PreconditionError
from qschur.tensor.vector import IndexTuple, TensorVector

Window = tuple[int, int]

V_POWER_BOUND = 2


def default_sample_window(n: int) -> Window:
    return (1 - 2 * n, 3 * n)


def default_exhaustive_window(n: int) -> Window:
    return (1 - 2 * n, 2 * n)


def _check_window(window: Window) -> None:
    lo, hi = window
    if lo > hi:
        raise PreconditionError(f"Empty window [{lo}, {hi}]")


def basis_count(r: int, window: Window) -> int:
    _check_window(window)
    lo, hi = window
    return (hi - lo + 1) ** r


def window_basis(r: int, window: Window) -> Iterator[IndexTuple]:
    """All r-tuples with entries in the closed window, lexicographically."""
    _check_window(window)
    lo, hi = window
    return itertools.product(range(lo, hi + 1), repeat=r)


def random_vector(
    rng: random.Random,
    session,
    window: Window,
    support_bound: int,
    coeff_bound: int,
) -> TensorVector:
    """A nonzero vector with at most support_bound terms.

    Coefficients are c * v^k with c a nonzero integer in [-b, b] and |k| <= V_POWER_BOUND.
    """
    _check_window(window)
    if support_bound < 1 or coeff_bound < 1:
        raise PreconditionError("support_bound and coeff_bound must be >= 1")
    lo, hi = window
    size = rng.randint(1, support_bound)
    pairs = []
    for _ in range(size):
        idx = tuple(rng.randint(lo, hi) for _ in range(session.r))
        coeff = 0
        while coeff == 0:
            coeff = rng.randint(-coeff_bound, coeff_bound)
        power = rng.randint(-V_POWER_BOUND, V_POWER_BOUND)
        pairs.append((idx, session.ring.from_int(coeff) * session.v(power)))
    vec = TensorVector.from_terms(session.r, pairs)
    if vec.is_zero():
        idx = tuple(rng.randint(lo, hi) for _ in range(session.r))
        vec = session.basis(idx)
    return vec


def random_vectors(
    seed: int,
    session,
    count: int,
    window: Window,
    support_bound: int,
    coeff_bound: int,
) -> list[TensorVector]:
    rng = random.Random(seed)
    return [random_vector(rng, session, window, support_bound, coeff_bound) for _ in range(count)]
