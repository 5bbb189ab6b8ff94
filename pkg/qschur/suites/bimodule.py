"""The quantum-group and Hecke actions commute on the tensor space."""

from __future__ import annotations

from qschur.models import SuiteConfig, VerificationReport
from qschur.suites.generators import chevalley_generators, hecke_generators, quantum_generators
from qschur.suites.harness import SessionFactory, build_session, check_identity, linear_memo, then, window_inputs
from qschur.tensor.session import TensorSession

ANCHOR = "U-action commutes with H-action on the tensor space"


def verify_bimodule_commutation(
    cfg: SuiteConfig,
    session_factory: SessionFactory = TensorSession,
) -> VerificationReport:
    session = build_session(cfg, session_factory, affine_node=False)
    inputs = window_inputs(session, cfg)
    report = VerificationReport(suite="bimodule", config=cfg)
    hecke = [(name, linear_memo(session, h)) for name, h in hecke_generators(session)]
    quantum = [(name, linear_memo(session, g)) for name, g in quantum_generators(session)]

    for g_name, g in quantum:
        for h_name, h in hecke:
            report.results.append(
                check_identity(f"commute-{g_name}-{h_name}", ANCHOR, then(h, g), then(g, h), inputs)
            )

    if cfg.enable_affine_node:
        affine = build_session(cfg, session_factory, affine_node=True)
        affine_hecke = [(name, linear_memo(affine, h)) for name, h in hecke_generators(affine)]
        node = [(name, linear_memo(affine, g)) for name, g in chevalley_generators(affine, [affine.n])]
        for g_name, g in node:
            for h_name, h in affine_hecke:
                report.results.append(
                    check_identity(
                        f"affine-node-commute-{g_name}-{h_name}",
                        ANCHOR,
                        then(h, g),
                        then(g, h),
                        inputs,
                        asserted=False,
                        note="candidate affine-node operator; observed, not asserted",
                    )
                )
    return report
