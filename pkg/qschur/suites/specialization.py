"""Base change v -> eps commutes with every generator action."""

from __future__ import annotations

from functools import partial

from qschur.arith.ring import ScalarRing
from qschur.models import SuiteConfig, VerificationReport
from qschur.suites.generators import hecke_generators, quantum_generators
from qschur.suites.harness import check_identity, sampled_inputs, skipped, then
from qschur.tensor.session import TensorSession
from qschur.tensor.vector import TensorVector, compositions, specialize_vector

ANCHOR = "S(n, r)_eps = S(n, r) tensored with C at v = eps"


def verify_specialization_naturality(cfg: SuiteConfig) -> VerificationReport:
    report = VerificationReport(suite="specialization", config=cfg)
    if cfg.lprime is None:
        report.results.append(skipped("naturality", ANCHOR, "needs lprime"))
        return report

    lprime = cfg.lprime
    generic = TensorSession(cfg.n, cfg.r, ScalarRing.generic())
    special = TensorSession(cfg.n, cfg.r, ScalarRing.at_root_of_unity(lprime))
    inputs = sampled_inputs(generic, cfg)
    down = partial(specialize_vector, lprime=lprime)

    pairs = list(zip(hecke_generators(generic, inverses=True), hecke_generators(special, inverses=True)))
    pairs += list(zip(quantum_generators(generic), quantum_generators(special)))
    for lam in compositions(cfg.n, cfg.r):
        name = "1_(" + ",".join(str(p) for p in lam.parts) + ")"
        pairs.append(((name, partial(generic.project_weight, lam)), (name, partial(special.project_weight, lam))))

    for (name, g_generic), (_, g_special) in pairs:
        report.results.append(
            check_identity(f"natural-{name}", ANCHOR, then(g_generic, down), then(down, g_special), inputs)
        )

    for k in range(-3, 4):

        def scaled_then_down(vec: TensorVector, k: int = k) -> TensorVector:
            return down(vec.scale(generic.v(k)))

        def down_then_scaled(vec: TensorVector, k: int = k) -> TensorVector:
            return down(vec).scale(special.v(k))

        report.results.append(
            check_identity(
                f"v-power-{k}",
                "specialize(v^k x) = eps^k specialize(x)",
                scaled_then_down,
                down_then_scaled,
                inputs,
            )
        )
    return report
