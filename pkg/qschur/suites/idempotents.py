"""Weight idempotents: completeness, orthogonality and the k_i expansion."""

from __future__ import annotations

from functools import partial
from math import comb

from qschur.models import SuiteConfig, VerificationReport
from qschur.suites.harness import (
    SessionFactory,
    build_session,
    check_cases,
    check_identity,
    identity_map,
    then,
    window_inputs,
    zero_map,
)
from qschur.tensor.session import TensorSession
from qschur.tensor.vector import Composition, TensorVector, compositions


def _label(lam: Composition) -> str:
    return "(" + ",".join(str(p) for p in lam.parts) + ")"


def verify_weight_idempotents(
    cfg: SuiteConfig,
    session_factory: SessionFactory = TensorSession,
) -> VerificationReport:
    session = build_session(cfg, session_factory)
    inputs = window_inputs(session, cfg)
    report = VerificationReport(suite="idempotents", config=cfg)
    results = report.results
    weights = compositions(session.n, session.r)

    def proj(lam: Composition):
        return partial(session.project_weight, lam)

    def total(vec: TensorVector) -> TensorVector:
        out = TensorVector.zero(vec.r)
        for lam in weights:
            out = out + session.project_weight(lam, vec)
        return out

    results.append(
        check_cases(
            "weight-count",
            "|Lambda(n, r)| = C(r + n - 1, n - 1)",
            [({"n": session.n, "r": session.r}, len(weights), comb(session.r + session.n - 1, session.n - 1))],
        )
    )
    results.append(check_identity("completeness", "sum over lambda of 1_lambda = 1", total, identity_map, inputs))

    for lam in weights:
        for mu in weights:
            rhs = proj(lam) if lam == mu else zero_map
            results.append(
                check_identity(
                    f"orthogonal-{_label(lam)}-{_label(mu)}",
                    "1_lambda 1_mu = delta_{lambda,mu} 1_lambda",
                    then(proj(mu), proj(lam)),
                    rhs,
                    inputs,
                )
            )

    for i in range(1, session.n + 1):

        def expansion(vec: TensorVector, i: int = i) -> TensorVector:
            out = TensorVector.zero(vec.r)
            for lam in weights:
                out = out + session.project_weight(lam, vec).scale(session.v(lam[i]))
            return out

        results.append(
            check_identity(
                f"k{i}-expansion",
                "k_i = sum over lambda of v^{lambda_i} 1_lambda",
                partial(session.apply_k, i, 1),
                expansion,
                inputs,
            )
        )

    for lam in weights:
        binoms = [partial(session.apply_k_binom, i, lam[i]) for i in range(1, session.n + 1)]
        results.append(
            check_identity(
                f"kbinom-route-{_label(lam)}",
                "1_lambda = [k_1;0 over lambda_1] ... [k_n;0 over lambda_n]",
                proj(lam),
                then(*binoms),
                inputs,
            )
        )
    return report
