"""Defining relations of the extended affine Hecke algebra, checked on the tensor space."""

from __future__ import annotations

from functools import partial

from qschur.models import SuiteConfig, VerificationReport
from qschur.suites.harness import (
    SessionFactory,
    build_session,
    check_cases,
    check_identity,
    identity_map,
    skipped,
    then,
    window_inputs,
    zero_map,
)
from qschur.tensor.session import TensorSession
from qschur.tensor.vector import TensorVector


def _reference_base(session: TensorSession, a: int, b: int) -> TensorVector:
    """omega_(a,b) T for a, b in 1..n, straight from the three-case table."""
    v = session.v
    if a == b:
        return TensorVector.basis((a, b), v(2))
    if a < b:
        return TensorVector.basis((b, a), v(1))
    return TensorVector.basis((b, a), v(1)) + TensorVector.basis((a, b), v(2) - 1)


def verify_hecke_presentation(
    cfg: SuiteConfig,
    session_factory: SessionFactory = TensorSession,
) -> VerificationReport:
    session = build_session(cfg, session_factory)
    inputs = window_inputs(session, cfg)
    report = VerificationReport(suite="hecke", config=cfg)
    results = report.results

    def T(k: int):
        return partial(session.apply_t, k)

    def Tinv(k: int):
        return partial(session.apply_t_inv, k)

    def X(t: int, power: int = 1):
        return partial(session.apply_x, t, power)

    v2 = session.v(2)

    if session.r < 2:
        results.append(skipped("quadratic", "(T_k + 1)(T_k - v^2) = 0", "r = 1 has no T generators"))

    for k in range(1, session.r):
        results.append(
            check_identity(
                f"quadratic-T{k}",
                "(T_k + 1)(T_k - v^2) = 0",
                lambda x, k=k: then(T(k), T(k))(x) - T(k)(x).scale(v2 - 1) - x.scale(v2),
                zero_map,
                inputs,
            )
        )
        results.append(
            check_identity(f"inverse-T{k}", "T_k^-1 T_k = 1", then(T(k), Tinv(k)), identity_map, inputs)
        )

    for k in range(1, session.r - 1):
        results.append(
            check_identity(
                f"braid-T{k}-T{k + 1}",
                "T_k T_{k+1} T_k = T_{k+1} T_k T_{k+1}",
                then(T(k), T(k + 1), T(k)),
                then(T(k + 1), T(k), T(k + 1)),
                inputs,
            )
        )

    far = [(k, j) for k in range(1, session.r) for j in range(k + 2, session.r)]
    if not far:
        results.append(skipped("far-commute", "T_k T_j = T_j T_k for |k - j| > 1", f"no such pair for r = {session.r}"))
    for k, j in far:
        results.append(
            check_identity(
                f"far-commute-T{k}-T{j}",
                "T_k T_j = T_j T_k for |k - j| > 1",
                then(T(k), T(j)),
                then(T(j), T(k)),
                inputs,
            )
        )

    for t in range(1, session.r + 1):
        results.append(
            check_identity(f"inverse-X{t}", "X_t X_t^-1 = 1", then(X(t, -1), X(t)), identity_map, inputs)
        )
        for u in range(t + 1, session.r + 1):
            results.append(
                check_identity(
                    f"commute-X{t}-X{u}",
                    "X_t X_u = X_u X_t",
                    then(X(t), X(u)),
                    then(X(u), X(t)),
                    inputs,
                )
            )

    for k in range(1, session.r):
        results.append(
            check_identity(
                f"TXT-{k}",
                "T_k X_k T_k = v^2 X_{k+1}",
                then(T(k), X(k), T(k)),
                lambda x, k=k: X(k + 1)(x).scale(v2),
                inputs,
            )
        )
        for j in range(1, session.r + 1):
            if j in (k, k + 1):
                continue
            results.append(
                check_identity(
                    f"commute-X{j}-T{k}",
                    "X_j T_k = T_k X_j for j not in {k, k+1}",
                    then(X(j), T(k)),
                    then(T(k), X(j)),
                    inputs,
                )
            )

    if session.r >= 2:
        cases = []
        for a in range(1, session.n + 1):
            for b in range(1, session.n + 1):
                idx = (a, b) + (1,) * (session.r - 2)
                got = session.apply_t(1, session.basis(idx))
                want = _reference_base(session, a, b)
                got_pairs = TensorVector.from_terms(2, ((i[:2], c) for i, c in got.terms()))
                cases.append(({"a": a, "b": b}, got_pairs, want))
        results.append(check_cases("base-table", "three-case T_k table on I(n, r)", cases))

    return report
