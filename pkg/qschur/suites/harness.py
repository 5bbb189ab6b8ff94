"""Extensional identity checking with counterexample shrinking."""

from __future__ import annotations

from typing import Any, Callable, Iterable, Optional

from qschur.arith.ring import ScalarRing
from qschur.codec import encode_vector
from qschur.models import FAIL, PASS, SKIPPED, IdentityResult, SuiteConfig
from qschur.tensor.sampling import basis_count, random_vectors, window_basis
from qschur.tensor.session import TensorSession
from qschur.tensor.vector import IndexTuple, TensorVector

VectorMap = Callable[[TensorVector], TensorVector]
SessionFactory = Callable[..., TensorSession]


def build_session(
    cfg: SuiteConfig,
    factory: SessionFactory = TensorSession,
    n: Optional[int] = None,
    affine_node: Optional[bool] = None,
) -> TensorSession:
    ring = ScalarRing(cfg.lprime)
    node = cfg.enable_affine_node if affine_node is None else affine_node
    return factory(cfg.n if n is None else n, cfg.r, ring, node)


def window_inputs(session: TensorSession, cfg: SuiteConfig) -> list[TensorVector]:
    """Every basis tuple of the exhaustive window when it is small enough, then seeded samples."""
    inputs: list[TensorVector] = []
    window = cfg.exhaustive_window
    if basis_count(session.r, window) <= cfg.exhaustive_limit:
        inputs.extend(session.basis(idx) for idx in window_basis(session.r, window))
    inputs.extend(sampled_inputs(session, cfg))
    return inputs


def sampled_inputs(session: TensorSession, cfg: SuiteConfig) -> list[TensorVector]:
    return random_vectors(
        cfg.seed,
        session,
        cfg.trials,
        cfg.sample_window,
        cfg.support_bound,
        cfg.coeff_bound,
    )


def _fails(vec: TensorVector, lhs: VectorMap, rhs: VectorMap) -> bool:
    return lhs(vec) != rhs(vec)


def shrink(vec: TensorVector, lhs: VectorMap, rhs: VectorMap) -> TensorVector:
    """Drop terms one at a time while the identity keeps failing."""
    current = vec
    changed = True
    while changed and len(current) > 1:
        changed = False
        for idx in current.support:
            candidate = current.without(idx)
            if candidate and _fails(candidate, lhs, rhs):
                current = candidate
                changed = True
                break
    return current


def check_identity(
    identity_id: str,
    anchor: str,
    lhs: VectorMap,
    rhs: VectorMap,
    inputs: Iterable[TensorVector],
    asserted: bool = True,
    note: Optional[str] = None,
) -> IdentityResult:
    trials = 0
    for vec in inputs:
        trials += 1
        left, right = lhs(vec), rhs(vec)
        if left != right:
            small = shrink(vec, lhs, rhs)
            return IdentityResult(
                id=identity_id,
                anchor=anchor,
                status=FAIL,
                trials=trials,
                counterexample={
                    "input": encode_vector(small),
                    "lhs": encode_vector(lhs(small)),
                    "rhs": encode_vector(rhs(small)),
                    "shrunk_from": len(vec),
                },
                asserted=asserted,
                note=note,
            )
    return IdentityResult(identity_id, anchor, PASS, trials, None, asserted, note)


def check_cases(
    identity_id: str,
    anchor: str,
    cases: Iterable[tuple[dict[str, Any], Any, Any]],
    asserted: bool = True,
) -> IdentityResult:
    """Scalar identities: each case is (input, lhs, rhs), compared exactly."""
    trials = 0
    for payload, left, right in cases:
        trials += 1
        if left != right:
            return IdentityResult(
                id=identity_id,
                anchor=anchor,
                status=FAIL,
                trials=trials,
                counterexample={"input": payload, "lhs": str(left), "rhs": str(right), "shrunk_from": None},
                asserted=asserted,
            )
    return IdentityResult(identity_id, anchor, PASS, trials, None, asserted)


def skipped(identity_id: str, anchor: str, note: str) -> IdentityResult:
    return IdentityResult(identity_id, anchor, SKIPPED, 0, None, True, note)


def then(*maps: VectorMap) -> VectorMap:
    """Apply maps in the order given."""

    def run(vec: TensorVector) -> TensorVector:
        for fn in maps:
            vec = fn(vec)
        return vec

    return run


def linear_memo(session: TensorSession, fn: VectorMap) -> VectorMap:
    """Extend fn linearly from basis vectors, computing each basis image once."""
    images: dict[IndexTuple, TensorVector] = {}

    def run(vec: TensorVector) -> TensorVector:
        pairs = []
        for idx, coeff in vec.terms():
            image = images.get(idx)
            if image is None:
                image = images[idx] = fn(session.basis(idx))
            pairs.extend((out_idx, coeff * c) for out_idx, c in image.terms())
        return TensorVector.from_terms(vec.r, pairs)

    return run


def identity_map(vec: TensorVector) -> TensorVector:
    return vec


def zero_map(vec: TensorVector) -> TensorVector:
    return TensorVector.zero(vec.r)
